// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <functional>
#include <string>
#include <utility>

#include "lpbaire/rational.hpp"

namespace lpbaire {

enum class Cmp { Less, Equal, Greater };

// Global precision policy for adaptive enclosure refinement.  Evaluations
// start at `start_bits` and double until the acceptance predicate holds or
// `cap_bits` is reached, at which point PrecisionExhausted is thrown.  The
// CLI sets this once from its config; results therefore depend only on the
// policy and the inputs, never on thread count or evaluation order.
struct NumericPolicy {
    unsigned start_bits = 64;
    unsigned cap_bits = 4096;
};
NumericPolicy numeric_policy();
void set_numeric_policy(NumericPolicy p);

// Closed interval [lo, hi] with MPFR endpoints, invariant lo <= hi and
// "the exact real lies inside".  All operations round outward (RNDD for lo,
// RNDU for hi) at the precision of the result, so enclosures are genuine at
// every precision; higher precision only tightens them.
class IntervalReal {
  public:
    explicit IntervalReal(mpfr_prec_t prec = 64);
    IntervalReal(const IntervalReal& o);
    IntervalReal(IntervalReal&& o) noexcept;
    IntervalReal& operator=(const IntervalReal& o);
    IntervalReal& operator=(IntervalReal&& o) noexcept;
    ~IntervalReal();

    static IntervalReal from_rational(const Rational& q, mpfr_prec_t prec);
    static IntervalReal from_long(long v, mpfr_prec_t prec);
    // [lo, hi] from two rationals (lo <= hi required).
    static IntervalReal from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
    static IntervalReal pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    // Exact endpoint/width extraction: every finite MPFR number is rational.
    Rational lo_rational() const;
    Rational hi_rational() const;
    Rational width() const;  // hi - lo, exact

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    std::string str(size_t digits = 20) const;

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    int sign_certain() const;  // +1 / -1 if the sign is certain, 0 otherwise

    // Certified comparison with a rational: Less/Greater when the enclosure
    // decides it; Equal is never returned (an interval cannot certify
    // equality), the undecided case surfaces as std::nullopt-style Cmp via
    // certified_compare below which refines adaptively.
    Cmp compare_raw(const Rational& q) const;  // throws Error when undecided

    bool decidably_less(const Rational& q) const;     // hi <  q
    bool decidably_greater(const Rational& q) const;  // lo >  q

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a);

    IntervalReal& operator+=(const IntervalReal& o) { return *this = *this + o; }
    IntervalReal& operator-=(const IntervalReal& o) { return *this = *this - o; }

    IntervalReal mul_rational(const Rational& q) const;
    IntervalReal mul_z(const mpz_class& z) const;
    IntervalReal div_z(const mpz_class& z) const;  // z != 0
    // Interval division; divisor must not contain zero.
    IntervalReal div(const IntervalReal& d) const;
    IntervalReal abs() const;
    IntervalReal square() const;
    IntervalReal sqrt() const;    // argument must be certainly >= 0
    IntervalReal log() const;     // argument must be certainly > 0
    IntervalReal rootn(unsigned long n) const;  // argument certainly >= 0
    IntervalReal inv_sqrt() const;              // argument certainly > 0

    // Smallest interval containing both.
    static IntervalReal hull(const IntervalReal& a, const IntervalReal& b);
    bool intersects(const IntervalReal& o) const;

    // Re-round this enclosure to a (typically smaller) precision, outward.
    IntervalReal rounded_to(mpfr_prec_t prec) const;

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    static IntervalReal binary(const IntervalReal& a, const IntervalReal& b,
                               int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t));
};

// Certified order between two enclosures (false means "not decided", not
// "false in the reals").
bool certainly_greater(const IntervalReal& a, const IntervalReal& b);
bool certainly_less(const IntervalReal& a, const IntervalReal& b);

// Adaptive refinement driver: evaluates `eval(prec)` at policy.start_bits,
// doubling until `accept` is satisfied; throws PrecisionExhausted past the cap.
IntervalReal adaptive_eval(const std::function<IntervalReal(mpfr_prec_t)>& eval,
                           const std::function<bool(const IntervalReal&)>& accept,
                           const char* what);

// Certified trichotomy of an exact real (given as an interval-producing
// evaluator) against zero, refusing Equal: refines until the sign is certain.
// Only call when the underlying value is known to be nonzero (see PiPoly for
// the symbolic zero test that guards this).
int certified_sign(const std::function<IntervalReal(mpfr_prec_t)>& eval, const char* what);

}  // namespace lpbaire
