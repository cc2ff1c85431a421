// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lpbaire/fourier.hpp"
#include "lpbaire/grid_scan.hpp"

namespace lpbaire {

// The n-th kernel polynomial
//   f_n(x) = (1/n) sum_{j=1..n} K_{m_j}(x - a_j),
// nodes a_j = 4 pi j / (2n+1) and frequencies m_1 = n^4,
//   m_{j+1} = min { m > 2 m_j : m = n (mod 2n+1) }.
// The congruence (equivalently 2m+1 = 0 mod 2n+1) makes every node a period
// point of the relevant Dirichlet kernels; m_1 is exempt (it only anchors
// the doubling growth).  f_n is a nonnegative trig polynomial of degree m_n
// with mean 1/2 whose partial sums at the special orders m_j decompose as
//   S_{m_j}(f_n, x) = T1 + T2 + T3,
//   T1 = (1/n) sum_{i<=j} K_{m_i}(x - a_i),
//   T2 = (1/n) sum_{i>j} (m_j+1)/(m_i+1) K_{m_j}(x - a_i),
//   T3 = (1/n) sum_{i>j} (m_i-m_j)/(m_i+1) D_{m_j}(x - a_i);
// T1 + T2 stays uniformly bounded away from the nodes while T3 is what
// grows like sqrt(log n) on a large set.
struct KolmogorovPoly {
    long n = 0;
    std::vector<mpz_class> m;      // m_1..m_n
    std::vector<Rational> nodes;   // scaled coords: 4j/(2n+1), j = 1..n
};

KolmogorovPoly build_kolmogorov(long n);

IntervalReal eval_kolmogorov(const KolmogorovPoly& P, const Rational& x_coeff, mpfr_prec_t prec);

struct DecompValue {
    IntervalReal t12;  // T1 + T2
    IntervalReal t3;
    IntervalReal sum() const { return t12 + t3; }
};
// j is 1-based (order m_j).
DecompValue kolmogorov_partial_sum(const KolmogorovPoly& P, size_t j, const Rational& x_coeff,
                                   mpfr_prec_t prec);

// Exact guard predicate: distance of x = x_coeff*pi to every node exceeds
// 1/n^2 (radians).  Decides |dc|*pi vs 1/n^2 in Q[pi].
bool outside_guards(const KolmogorovPoly& P, const Rational& x_coeff);

// Node-avoiding uniform grid: scaled coord of 2 pi (k + 1/2) / G.
Rational offset_grid_coeff(long k, long G);

// Desk-scale stand-in for the paper-grade uniform bound on |T1 + T2|:
// 1.1 * max over the listed n, grid points outside guards, and j <= n of
// the certified upper end of |T1 + T2|.  Deterministic for a fixed grid.
Rational estimate_A(const std::vector<long>& ns, long grid, mpfr_prec_t prec, ExecMode mode);

struct ExceptionalReport {
    long n = 0;
    long grid = 0;
    Rational a_upper;
    long certified_exceed = 0;  // points with max_j |S_{m_j}| certainly > thr
    long undecided = 0;         // enclosure straddles the threshold
    Rational fraction() const { return Rational(certified_exceed, grid); }
};

// Measures { x on grid : max_j |S_{m_j}(f_n, x)| > sqrt(log n) - A }.
ExceptionalReport measure_exceptional_set(const KolmogorovPoly& P, const Rational& a_upper,
                                          long grid, mpfr_prec_t prec, ExecMode mode);

// Midpoint quadrature mean over [0, 2 pi]: for a trig polynomial of degree
// < N this equals the true mean exactly (all nonconstant modes alias to 0),
// so with N > l it certifies kernel means (= 1/2) to enclosure width.
IntervalReal kernel_mean_quadrature(const KernelSpec& k, long N, mpfr_prec_t prec, ExecMode mode);

}  // namespace lpbaire
