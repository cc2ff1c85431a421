// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "lpbaire/errors.hpp"

namespace lpbaire {

// Arbitrary-precision rational, always stored normalized (gcd(num,den)=1,
// den>0).  Thin value wrapper over GMP's mpq_class; the wrapper exists so the
// rest of the library has a single spelling for construction, parsing and
// serialization ("num/den", integers without the "/1").
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    // Parses "num", "num/den" or "-num/den".  Throws Error on malformed input
    // and DivisionByZero on a zero denominator.
    static Rational parse(const std::string& s);

    // 2^k for any integer k (negative k gives 1/2^|k|).
    static Rational pow2(long k);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const;
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// q^e for small non-negative integer exponents (p-th powers of distances).
Rational pow_ui(const Rational& q, unsigned long e);

// Smallest integer n with 2^n > q (q > 0 required).  Used to pick the dyadic
// scale n in constructions that need 2^-n below a rational budget.
long exp2_exceeding(const Rational& q);

// Floor of the rational as an mpz (round toward -infinity).
mpz_class floor_z(const Rational& q);

}  // namespace lpbaire
