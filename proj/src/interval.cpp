// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/interval.hpp"

#include <gmpxx.h>

#include <atomic>
#include <cstdio>
#include <vector>

#include "lpbaire/errors.hpp"

namespace lpbaire {

namespace {
std::atomic<unsigned> g_start_bits{64};
std::atomic<unsigned> g_cap_bits{4096};
}  // namespace

NumericPolicy numeric_policy() {
    return NumericPolicy{g_start_bits.load(), g_cap_bits.load()};
}

void set_numeric_policy(NumericPolicy p) {
    if (p.start_bits < 16 || p.cap_bits < p.start_bits)
        throw Error("invalid numeric policy: need 16 <= start_bits <= cap_bits");
    g_start_bits.store(p.start_bits);
    g_cap_bits.store(p.cap_bits);
}

IntervalReal::IntervalReal(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

IntervalReal::IntervalReal(const IntervalReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IntervalReal::IntervalReal(IntervalReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 16);
    mpfr_init2(hi_, 16);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

IntervalReal& IntervalReal::operator=(const IntervalReal& o) {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

IntervalReal& IntervalReal::operator=(IntervalReal&& o) noexcept {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

IntervalReal::~IntervalReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

IntervalReal IntervalReal::from_rational(const Rational& q, mpfr_prec_t prec) {
    IntervalReal r(prec);
    mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::from_long(long v, mpfr_prec_t prec) {
    IntervalReal r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::from_endpoints(const Rational& lo, const Rational& hi,
                                          mpfr_prec_t prec) {
    if (hi < lo) throw Error("from_endpoints: hi < lo");
    IntervalReal r(prec);
    mpfr_set_q(r.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::pi(mpfr_prec_t prec) {
    IntervalReal r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Rational IntervalReal::lo_rational() const {
    if (!mpfr_number_p(lo_)) throw Error("lo_rational: endpoint not finite");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return Rational(q);
}

Rational IntervalReal::hi_rational() const {
    if (!mpfr_number_p(hi_)) throw Error("hi_rational: endpoint not finite");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return Rational(q);
}

Rational IntervalReal::width() const { return hi_rational() - lo_rational(); }

std::string IntervalReal::str(size_t digits) const {
    char* lo_s = nullptr;
    char* hi_s = nullptr;
    mpfr_asprintf(&lo_s, "%.*Rg", static_cast<int>(digits), lo_);
    mpfr_asprintf(&hi_s, "%.*Rg", static_cast<int>(digits), hi_);
    std::string out = std::string("[") + lo_s + ", " + hi_s + "]";
    mpfr_free_str(lo_s);
    mpfr_free_str(hi_s);
    return out;
}

bool IntervalReal::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool IntervalReal::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.raw().get_mpq_t()) >= 0;
}

int IntervalReal::sign_certain() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

Cmp IntervalReal::compare_raw(const Rational& q) const {
    if (mpfr_cmp_q(hi_, q.raw().get_mpq_t()) < 0) return Cmp::Less;
    if (mpfr_cmp_q(lo_, q.raw().get_mpq_t()) > 0) return Cmp::Greater;
    throw Error("compare_raw: enclosure straddles the comparand");
}

bool IntervalReal::decidably_less(const Rational& q) const {
    return mpfr_cmp_q(hi_, q.raw().get_mpq_t()) < 0;
}

bool IntervalReal::decidably_greater(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) > 0;
}

IntervalReal IntervalReal::binary(const IntervalReal& a, const IntervalReal& b,
                                  int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    IntervalReal r(std::max(a.prec_, b.prec_));
    op(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    op(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal::binary(a, b, mpfr_add);
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(std::max(a.prec_, b.prec_));
    // Four corner products, outward-rounded min/max.
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

IntervalReal operator-(const IntervalReal& a) {
    IntervalReal r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::mul_rational(const Rational& q) const {
    IntervalReal r(prec_);
    if (q.sign() >= 0) {
        mpfr_mul_q(r.lo_, lo_, q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, hi_, q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, lo_, q.raw().get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

IntervalReal IntervalReal::mul_z(const mpz_class& z) const {
    IntervalReal r(prec_);
    if (sgn(z) >= 0) {
        mpfr_mul_z(r.lo_, lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, hi_, z.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_, hi_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, lo_, z.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

IntervalReal IntervalReal::div_z(const mpz_class& z) const {
    if (sgn(z) == 0) throw DivisionByZero("interval div_z by zero");
    IntervalReal r(prec_);
    if (sgn(z) > 0) {
        mpfr_div_z(r.lo_, lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_, hi_, z.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_div_z(r.lo_, hi_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_, lo_, z.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

IntervalReal IntervalReal::div(const IntervalReal& d) const {
    if (d.contains_zero()) throw DivisionByZero("interval division by an interval containing 0");
    IntervalReal r(std::max(prec_, d.prec_));
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_div(c[0], lo_, d.lo_, MPFR_RNDD);
    mpfr_div(c[1], lo_, d.hi_, MPFR_RNDD);
    mpfr_div(c[2], hi_, d.lo_, MPFR_RNDD);
    mpfr_div(c[3], hi_, d.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
    mpfr_div(c[0], lo_, d.lo_, MPFR_RNDU);
    mpfr_div(c[1], lo_, d.hi_, MPFR_RNDU);
    mpfr_div(c[2], hi_, d.lo_, MPFR_RNDU);
    mpfr_div(c[3], hi_, d.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

IntervalReal IntervalReal::abs() const {
    IntervalReal r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero: [0, max(-lo, hi)]
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::square() const {
    IntervalReal a = abs();
    IntervalReal r(prec_);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw Error("sqrt of interval with negative lower endpoint");
    IntervalReal r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::log() const {
    if (mpfr_sgn(lo_) <= 0) throw Error("log of interval not certainly positive");
    IntervalReal r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::rootn(unsigned long n) const {
    if (n == 0) throw Error("rootn: n == 0");
    if (mpfr_sgn(lo_) < 0) throw Error("rootn of interval with negative lower endpoint");
    IntervalReal r(prec_);
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
#else
    mpfr_root(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_root(r.hi_, hi_, n, MPFR_RNDU);
#endif
    return r;
}

IntervalReal IntervalReal::inv_sqrt() const {
    if (mpfr_sgn(lo_) <= 0) throw Error("inv_sqrt of interval not certainly positive");
    IntervalReal r(prec_);
    // 1/sqrt is decreasing on (0, inf): lo from hi and vice versa.
    mpfr_rec_sqrt(r.lo_, hi_, MPFR_RNDD);
    mpfr_rec_sqrt(r.hi_, lo_, MPFR_RNDU);
    return r;
}

IntervalReal IntervalReal::hull(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool IntervalReal::intersects(const IntervalReal& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

IntervalReal IntervalReal::rounded_to(mpfr_prec_t prec) const {
    IntervalReal r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool certainly_greater(const IntervalReal& a, const IntervalReal& b) {
    return mpfr_cmp(a.lo(), b.hi()) > 0;
}

bool certainly_less(const IntervalReal& a, const IntervalReal& b) {
    return mpfr_cmp(a.hi(), b.lo()) < 0;
}

IntervalReal adaptive_eval(const std::function<IntervalReal(mpfr_prec_t)>& eval,
                           const std::function<bool(const IntervalReal&)>& accept,
                           const char* what) {
    const NumericPolicy pol = numeric_policy();
    for (mpfr_prec_t p = pol.start_bits; p <= static_cast<mpfr_prec_t>(pol.cap_bits); p *= 2) {
        IntervalReal v = eval(p);
        if (accept(v)) return v;
    }
    throw PrecisionExhausted(std::string("adaptive_eval: ") + what);
}

int certified_sign(const std::function<IntervalReal(mpfr_prec_t)>& eval, const char* what) {
    IntervalReal v =
        adaptive_eval(eval, [](const IntervalReal& iv) { return iv.sign_certain() != 0; }, what);
    return v.sign_certain();
}

}  // namespace lpbaire
