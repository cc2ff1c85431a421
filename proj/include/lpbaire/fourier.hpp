// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/step_function.hpp"
#include "lpbaire/trig.hpp"

namespace lpbaire {

// Fourier analysis on [0, 2*pi] with the classical normalization
//   S_l(f, x) = a_0/2 + sum_{n=1..l} (a_n cos nx + b_n sin nx),
//   a_n = (1/pi) integral f cos nx,  b_n = (1/pi) integral f sin nx.
// For rational step functions every coefficient is a rational combination
// of sin/cos at rational multiples of pi divided by n*pi, so coefficients
// and partial sums come back as certified enclosures; a_0 alone is exact.

// a_0 = (1/pi) * integral(f): the pi cancels, exact rational.
Rational fourier_a0_exact(const RationalStepFunction& f);

struct FourierCoeff {
    IntervalReal a, b;
};
// Order-n coefficient pair (n >= 1) from the closed telescoping forms
//   a_n = (1/(n pi)) sum_i v_i (sin(n c_{i+1} pi) - sin(n c_i pi)),
//   b_n = (1/(n pi)) sum_i v_i (cos(n c_i pi)   - cos(n c_{i+1} pi)).
FourierCoeff step_fourier_coeff(const RationalStepFunction& f, long n, mpfr_prec_t prec);

// S_l(f, x) at x = x_coeff * pi, term-by-term (practical for moderate l).
IntervalReal step_partial_sum(const RationalStepFunction& f, long l, const Rational& x_coeff,
                              mpfr_prec_t prec);

// Exact partial-sum perturbation bound (order l, L^1 distance):
//   |S_l(f, x) - S_l(g, x)| <= l * ||f - g||_1   for every x.
// Returned as the exact affine scalar l * D * pi where ||f-g||_1 = D * pi.
PiLinear partial_sum_l1_bound(long l, const RationalStepFunction& f,
                              const RationalStepFunction& g);

enum class KernelKind { Dirichlet, Fejer };

// Trigonometric kernel of order l (l >= 0, arbitrary bit-length):
//   Dirichlet D_l(x) = 1/2 + sum_{v=1..l} cos vx = sin((l+1/2)x) / (2 sin(x/2))
//   Fejer     K_l(x) = 1/2 + sum_{v=1..l} (1 - v/(l+1)) cos vx
//                    = [sin((l+1)x/2)]^2 / (2 (l+1) [sin(x/2)]^2)
struct KernelSpec {
    KernelKind kind;
    mpz_class l;
};

// Kernel value at x = x_coeff * pi via the closed form, with exact handling
// of x in 2 pi Z (D_l(0) = l + 1/2, K_l(0) = (l+1)/2).  When the enclosure
// of the denominator still straddles zero at this precision the peak bounds
// |D_l| <= l + 1/2, 0 <= K_l <= (l+1)/2 are returned instead, so the result
// is always a valid enclosure and tightens as prec grows.  Fejer values are
// clamped to be nonnegative.
IntervalReal kernel_eval(const KernelSpec& k, const Rational& x_coeff, mpfr_prec_t prec);

// Independent small-l oracle: the literal coefficient sum.
IntervalReal kernel_coeff_sum(KernelKind kind, long l, const Rational& x_coeff, mpfr_prec_t prec);

}  // namespace lpbaire
