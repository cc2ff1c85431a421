// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "lpbaire/interval.hpp"
#include "lpbaire/rational.hpp"

namespace lpbaire {

// Exact scalar of the form  sum_d  c_d * pi^d  with rational c_d and integer
// degrees d >= 0 (sparse; zero coefficients are never stored).
//
// Every scalar this library compares -- L^p distances raised to the p-th
// power, radii, thresholds -- lives in Q[pi].  Because pi is transcendental,
// such a value is zero exactly when all coefficients vanish, which turns
// equality into a finite symbolic check and makes the comparison trichotomy
// total: equality is decided symbolically, and a nonzero value has its sign
// certified by refining an interval enclosure (it cannot straddle zero
// forever).  PrecisionExhausted can only fire on a nonzero value thinner
// than 2^-cap, never on an undecidable question.
class PiPoly {
  public:
    PiPoly() = default;
    static PiPoly from_rational(const Rational& c);
    static PiPoly monomial(unsigned degree, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<unsigned, Rational>& terms() const { return terms_; }
    Rational coeff(unsigned degree) const;

    PiPoly operator+(const PiPoly& o) const;
    PiPoly operator-(const PiPoly& o) const;
    PiPoly operator*(const PiPoly& o) const;
    PiPoly operator-() const;
    PiPoly scaled(const Rational& c) const;
    PiPoly pow(unsigned e) const;

    bool operator==(const PiPoly& o) const { return terms_ == o.terms_; }

    // Exact sign: 0 symbolically, otherwise +-1 via coefficient fast path
    // (all coefficients of one sign) or adaptive enclosure.
    int sign() const;
    Cmp compare(const PiPoly& o) const;

    IntervalReal eval_interval(mpfr_prec_t prec) const;
    // Exact rational bounds (safe directed rounding of pi at 128 bits).
    Rational lower_bound_rational() const;
    Rational upper_bound_rational() const;

    // "3/4 + 1/2 pi - 2 pi^3"; "0" when empty.
    std::string str() const;

  private:
    void set(unsigned degree, const Rational& c);
    std::map<unsigned, Rational> terms_;
};

// Affine scalar  a + b*pi,  the closed form for ball radii and thresholds.
// Keeping radii in this class (rather than plain Q) makes radii that are
// exact pi-multiples representable, so distance == radius is a reachable,
// decidable case rather than a measure-zero impossibility.
class PiLinear {
  public:
    PiLinear() = default;
    PiLinear(Rational rat_part, Rational pi_coeff)
        : a_(std::move(rat_part)), b_(std::move(pi_coeff)) {}
    static PiLinear from_rational(const Rational& a) { return PiLinear(a, Rational(0)); }
    static PiLinear from_pi_multiple(const Rational& b) { return PiLinear(Rational(0), b); }

    const Rational& rat_part() const { return a_; }
    const Rational& pi_coeff() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    PiLinear operator+(const PiLinear& o) const { return {a_ + o.a_, b_ + o.b_}; }
    PiLinear operator-(const PiLinear& o) const { return {a_ - o.a_, b_ - o.b_}; }
    PiLinear operator-() const { return {-a_, -b_}; }
    PiLinear scaled(const Rational& c) const { return {a_ * c, b_ * c}; }
    bool operator==(const PiLinear& o) const { return a_ == o.a_ && b_ == o.b_; }

    PiPoly to_poly() const;
    int sign() const;
    bool is_positive() const { return sign() > 0; }
    Cmp compare(const PiLinear& o) const { return to_poly().compare(o.to_poly()); }

    // Exact rational bracket of the value (pi rounded directionally).
    Rational lower_bound_rational() const;
    Rational upper_bound_rational() const;
    IntervalReal eval_interval(mpfr_prec_t prec) const { return to_poly().eval_interval(prec); }

    // Canonical form: "a", "b pi", or "a + b pi" (minus sign folded in).
    std::string str() const;
    // Accepts "a", "b pi", "a + b pi", "a - b pi", "pi", and "* " variants.
    static PiLinear parse(const std::string& s);

  private:
    Rational a_, b_;
};

PiLinear min_linear(const PiLinear& x, const PiLinear& y);

}  // namespace lpbaire
