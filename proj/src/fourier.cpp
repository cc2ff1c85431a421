// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/fourier.hpp"

#include "lpbaire/errors.hpp"

namespace lpbaire {

Rational fourier_a0_exact(const RationalStepFunction& f) {
    // integral(f) = (sum v_i dc_i) * pi; dividing by pi leaves the sum.
    return f.integral().coeff(1);
}

FourierCoeff step_fourier_coeff(const RationalStepFunction& f, long n, mpfr_prec_t prec) {
    if (n < 1) throw Error("step_fourier_coeff: order must be >= 1");
    const mpfr_prec_t work = prec + 16;
    IntervalReal sa = IntervalReal::from_long(0, work);
    IntervalReal sb = IntervalReal::from_long(0, work);
    const auto& bp = f.breakpoints();
    const auto& v = f.values();
    const Rational order(n);
    for (size_t i = 0; i < v.size(); ++i) {
        IntervalReal dsin = sin_pi(order * bp[i + 1], work) - sin_pi(order * bp[i], work);
        IntervalReal dcos = cos_pi(order * bp[i], work) - cos_pi(order * bp[i + 1], work);
        sa += dsin.mul_rational(v[i]);
        sb += dcos.mul_rational(v[i]);
    }
    IntervalReal npi = IntervalReal::pi(work).mul_rational(order);
    return FourierCoeff{sa.div(npi).rounded_to(prec), sb.div(npi).rounded_to(prec)};
}

IntervalReal step_partial_sum(const RationalStepFunction& f, long l, const Rational& x_coeff,
                              mpfr_prec_t prec) {
    if (l < 0) throw Error("step_partial_sum: order must be >= 0");
    const mpfr_prec_t work = prec + 32;
    IntervalReal s =
        IntervalReal::from_rational(fourier_a0_exact(f) / Rational(2), work);
    for (long n = 1; n <= l; ++n) {
        FourierCoeff c = step_fourier_coeff(f, n, work);
        Rational nx = Rational(n) * x_coeff;
        s += c.a * cos_pi(nx, work) + c.b * sin_pi(nx, work);
    }
    return s.rounded_to(prec);
}

PiLinear partial_sum_l1_bound(long l, const RationalStepFunction& f,
                              const RationalStepFunction& g) {
    if (l < 0) throw Error("partial_sum_l1_bound: order must be >= 0");
    Rational d = lp_distance_pow(f, g, 1).coeff(1);  // ||f-g||_1 = d * pi
    return PiLinear::from_pi_multiple(Rational(l) * d);
}

namespace {
IntervalReal clamp_to(const IntervalReal& v, const Rational& lo, const Rational& hi,
                      mpfr_prec_t prec) {
    Rational a = max(v.lo_rational(), lo);
    Rational b = min(v.hi_rational(), hi);
    if (a > b) throw Error("kernel enclosure misses its a priori range");
    return IntervalReal::from_endpoints(a, b, prec);
}
}  // namespace

IntervalReal kernel_eval(const KernelSpec& k, const Rational& x_coeff, mpfr_prec_t prec) {
    if (sgn(k.l) < 0) throw Error("kernel_eval: order must be >= 0");
    const mpfr_prec_t work = prec + 16;
    const Rational half_x = x_coeff / Rational(2);  // sin(x/2) = sin_pi(half_x)
    const Rational peak = (k.kind == KernelKind::Dirichlet)
                              ? Rational(2 * k.l + 1, mpz_class(2))
                              : Rational(k.l + 1, mpz_class(2));

    // x in 2 pi Z: both kernels hit their exact peak.
    if ((half_x).is_integer()) return IntervalReal::from_rational(peak, prec);

    IntervalReal den = sin_pi(half_x, work);
    if (den.contains_zero()) {
        // Not enough precision to separate sin(x/2) from 0 (x is not in
        // 2 pi Z, so the true value is nonzero): fall back to peak bounds.
        Rational lo = (k.kind == KernelKind::Dirichlet) ? -peak : Rational(0);
        return IntervalReal::from_endpoints(lo, peak, prec);
    }

    if (k.kind == KernelKind::Dirichlet) {
        // sin((l + 1/2) x) = sin_pi((2l+1) * x_coeff / 2)
        IntervalReal num = sin_pi(Rational(2 * k.l + 1, mpz_class(2)) * x_coeff, work);
        IntervalReal val = num.div(den.mul_rational(Rational(2)));
        return clamp_to(val, -peak, peak, prec);
    }
    // sin((l+1) x / 2) = sin_pi((l+1) * x_coeff / 2)
    IntervalReal num = sin_pi(Rational(k.l + 1, mpz_class(2)) * x_coeff, work);
    IntervalReal val = num.div(den).square().div_z(2 * (k.l + 1));
    return clamp_to(val, Rational(0), peak, prec);
}

IntervalReal kernel_coeff_sum(KernelKind kind, long l, const Rational& x_coeff,
                              mpfr_prec_t prec) {
    if (l < 0) throw Error("kernel_coeff_sum: order must be >= 0");
    const mpfr_prec_t work = prec + 32;
    IntervalReal s = IntervalReal::from_rational(Rational(1, 2), work);
    for (long v = 1; v <= l; ++v) {
        IntervalReal term = cos_pi(Rational(v) * x_coeff, work);
        if (kind == KernelKind::Fejer) term = term.mul_rational(Rational(l + 1 - v, l + 1));
        s += term;
    }
    return s.rounded_to(prec);
}

}  // namespace lpbaire
