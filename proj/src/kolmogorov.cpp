// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/kolmogorov.hpp"

#include "lpbaire/errors.hpp"

namespace lpbaire {

KolmogorovPoly build_kolmogorov(long n) {
    if (n < 2) throw Error("build_kolmogorov: n must be >= 2");
    KolmogorovPoly P;
    P.n = n;
    mpz_class modulus = 2 * mpz_class(n) + 1;
    mpz_class target = mpz_class(n) % modulus;
    mpz_class m = mpz_class(n);
    mpz_pow_ui(m.get_mpz_t(), m.get_mpz_t(), 4);
    P.m.push_back(m);
    for (long j = 1; j < n; ++j) {
        // Smallest m > 2 m_prev with m = n (mod 2n+1): at most 2n+1 candidates.
        mpz_class cand = 2 * P.m.back() + 1;
        while (cand % modulus != target) ++cand;
        P.m.push_back(cand);
    }
    for (long j = 1; j <= n; ++j) P.nodes.emplace_back(4 * j, 2 * n + 1);
    return P;
}

IntervalReal eval_kolmogorov(const KolmogorovPoly& P, const Rational& x_coeff,
                             mpfr_prec_t prec) {
    const mpfr_prec_t work = prec + 16;
    IntervalReal s = IntervalReal::from_long(0, work);
    for (size_t i = 0; i < P.m.size(); ++i)
        s += kernel_eval(KernelSpec{KernelKind::Fejer, P.m[i]}, x_coeff - P.nodes[i], work);
    return s.div_z(P.n).rounded_to(prec);
}

DecompValue kolmogorov_partial_sum(const KolmogorovPoly& P, size_t j, const Rational& x_coeff,
                                   mpfr_prec_t prec) {
    if (j < 1 || j > P.m.size()) throw Error("kolmogorov_partial_sum: j out of range");
    const mpfr_prec_t work = prec + 16;
    const mpz_class& mj = P.m[j - 1];
    IntervalReal t12 = IntervalReal::from_long(0, work);
    IntervalReal t3 = IntervalReal::from_long(0, work);
    for (size_t i = 0; i < P.m.size(); ++i) {
        Rational y = x_coeff - P.nodes[i];
        if (i < j) {
            t12 += kernel_eval(KernelSpec{KernelKind::Fejer, P.m[i]}, y, work);
        } else {
            t12 += kernel_eval(KernelSpec{KernelKind::Fejer, mj}, y, work)
                       .mul_rational(Rational(mj + 1, P.m[i] + 1));
            t3 += kernel_eval(KernelSpec{KernelKind::Dirichlet, mj}, y, work)
                      .mul_rational(Rational(P.m[i] - mj, P.m[i] + 1));
        }
    }
    return DecompValue{t12.div_z(P.n).rounded_to(prec), t3.div_z(P.n).rounded_to(prec)};
}

bool outside_guards(const KolmogorovPoly& P, const Rational& x_coeff) {
    // Distance on the circle: min over k in {-2, 0, 2} of |x - a + 2k pi|.
    Rational g(1, P.n * P.n);
    for (const Rational& a : P.nodes)
        for (int shift = -2; shift <= 2; shift += 2) {
            Rational dc = abs(x_coeff - a + Rational(shift));
            // |dc * pi| <= g  <=>  PiLinear(-g, dc) <= 0
            if (PiLinear(-g, dc).sign() <= 0) return false;
        }
    return true;
}

Rational offset_grid_coeff(long k, long G) {
    if (G <= 0 || k < 0 || k >= G) throw Error("offset_grid_coeff: bad grid index");
    return Rational(2 * (2 * k + 1), 2 * G);
}

Rational estimate_A(const std::vector<long>& ns, long grid, mpfr_prec_t prec, ExecMode mode) {
    Rational best(0);
    for (long n : ns) {
        KolmogorovPoly P = build_kolmogorov(n);
        std::vector<Rational> point_max(static_cast<size_t>(grid), Rational(0));
        grid_for(grid, mode, [&](long k) {
            Rational x = offset_grid_coeff(k, grid);
            if (!outside_guards(P, x)) return;
            Rational acc(0);
            for (size_t j = 1; j <= P.m.size(); ++j) {
                DecompValue d = kolmogorov_partial_sum(P, j, x, prec);
                acc = max(acc, d.t12.abs().hi_rational());
            }
            point_max[static_cast<size_t>(k)] = acc;
        });
        for (const Rational& v : point_max) best = max(best, v);
    }
    return best * Rational(11, 10);
}

ExceptionalReport measure_exceptional_set(const KolmogorovPoly& P, const Rational& a_upper,
                                          long grid, mpfr_prec_t prec, ExecMode mode) {
    ExceptionalReport rep;
    rep.n = P.n;
    rep.grid = grid;
    rep.a_upper = a_upper;
    IntervalReal thr =
        IntervalReal::from_long(P.n, 128).log().sqrt() - IntervalReal::from_rational(a_upper, 128);
    std::vector<int> flag(static_cast<size_t>(grid), 0);  // 0 below, 1 exceed, 2 undecided
    grid_for(grid, mode, [&](long k) {
        Rational x = offset_grid_coeff(k, grid);
        bool undecided = false;
        for (size_t j = 1; j <= P.m.size(); ++j) {
            IntervalReal s = kolmogorov_partial_sum(P, j, x, prec).sum().abs();
            if (certainly_greater(s, thr)) {
                flag[static_cast<size_t>(k)] = 1;
                return;
            }
            if (!certainly_less(s, thr)) undecided = true;
        }
        flag[static_cast<size_t>(k)] = undecided ? 2 : 0;
    });
    for (int f : flag) {
        if (f == 1) ++rep.certified_exceed;
        if (f == 2) ++rep.undecided;
    }
    return rep;
}

IntervalReal kernel_mean_quadrature(const KernelSpec& k, long N, mpfr_prec_t prec,
                                    ExecMode mode) {
    if (N <= 0) throw Error("kernel_mean_quadrature: N must be positive");
    const mpfr_prec_t work = prec + 32;
    std::vector<IntervalReal> vals(static_cast<size_t>(N), IntervalReal(work));
    grid_for(N, mode, [&](long i) {
        vals[static_cast<size_t>(i)] = kernel_eval(k, offset_grid_coeff(i, N), work);
    });
    IntervalReal s = IntervalReal::from_long(0, work);
    for (const IntervalReal& v : vals) s += v;
    return s.div_z(N).rounded_to(prec);
}

}  // namespace lpbaire
