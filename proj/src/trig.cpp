// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/trig.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace lpbaire {

namespace {

// Reduce c mod 2 into [0, 2): c - 2*floor(c/2), exact.
Rational reduce_mod2(const Rational& c) {
    mpz_class f = floor_z(c / Rational(2));
    return c - Rational(2) * Rational(mpq_class(f));
}

std::mutex g_cache_mutex;
std::map<std::pair<mpfr_prec_t, Rational>, IntervalReal> g_sin_cache;
// Grid scans at large frequencies produce mostly-unique reduced coefficients;
// a hard cap keeps the memo from ballooning (no eviction: early entries are
// the repeated ones).
constexpr size_t kCacheCap = 1u << 16;

IntervalReal clamp_unit(const IntervalReal& v) {
    Rational lo = v.lo_rational(), hi = v.hi_rational();
    Rational r1(1), rm1(-1);
    if (lo < rm1) lo = rm1;
    if (hi > r1) hi = r1;
    if (lo > hi) lo = hi;  // cannot happen for a valid enclosure; belt and braces
    return IntervalReal::from_endpoints(lo, hi, v.precision());
}

IntervalReal sin_pi_general(const Rational& r, mpfr_prec_t prec) {
    const mpfr_prec_t work = prec + 16;
    IntervalReal arg = IntervalReal::pi(work).mul_rational(r);
    IntervalReal out(work);
    mpfr_t s_lo, s_hi, t;
    mpfr_init2(s_lo, work);
    mpfr_init2(s_hi, work);
    mpfr_init2(t, work);
    // Endpoint enclosures, hulled.
    mpfr_sin(s_lo, arg.lo(), MPFR_RNDD);
    mpfr_sin(t, arg.hi(), MPFR_RNDD);
    mpfr_min(s_lo, s_lo, t, MPFR_RNDD);
    mpfr_sin(s_hi, arg.lo(), MPFR_RNDU);
    mpfr_sin(t, arg.hi(), MPFR_RNDU);
    mpfr_max(s_hi, s_hi, t, MPFR_RNDU);
    // Widen by the argument width (|sin'| <= 1) so interior extrema are covered.
    mpfr_sub(t, arg.hi(), arg.lo(), MPFR_RNDU);
    mpfr_sub(s_lo, s_lo, t, MPFR_RNDD);
    mpfr_add(s_hi, s_hi, t, MPFR_RNDU);
    mpq_class qlo, qhi;
    mpfr_get_q(qlo.get_mpq_t(), s_lo);
    mpfr_get_q(qhi.get_mpq_t(), s_hi);
    mpfr_clear(s_lo);
    mpfr_clear(s_hi);
    mpfr_clear(t);
    return clamp_unit(
        IntervalReal::from_endpoints(Rational(qlo), Rational(qhi), work).rounded_to(prec));
}

}  // namespace

bool is_integral(const Rational& c) { return c.is_integer(); }

IntervalReal sin_pi(const Rational& c, mpfr_prec_t prec) {
    Rational r = reduce_mod2(c);
    // Exact lattice points of sin on the half-integer grid.
    if (r.is_zero() || r == Rational(1)) return IntervalReal::from_long(0, prec);
    if (r == Rational(1, 2)) return IntervalReal::from_long(1, prec);
    if (r == Rational(3, 2)) return IntervalReal::from_long(-1, prec);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_sin_cache.find({prec, r});
        if (it != g_sin_cache.end()) return it->second;
    }
    IntervalReal v = sin_pi_general(r, prec);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (g_sin_cache.size() < kCacheCap) g_sin_cache.emplace(std::make_pair(prec, r), v);
    }
    return v;
}

IntervalReal cos_pi(const Rational& c, mpfr_prec_t prec) {
    // cos(x) = sin(x + pi/2)
    return sin_pi(c + Rational(1, 2), prec);
}

size_t trig_cache_size() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_sin_cache.size();
}

void clear_trig_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_sin_cache.clear();
}

}  // namespace lpbaire
