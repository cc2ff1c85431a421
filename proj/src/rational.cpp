// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/rational.hpp"

#include <ostream>

namespace lpbaire {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("Rational(num, 0)");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("Rational(num, 0)");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw Error("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("Rational::parse: malformed '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow2(long k) {
    mpz_class one = 1;
    if (k >= 0) return Rational(mpz_class(one << static_cast<unsigned long>(k)), one);
    return Rational(one, mpz_class(one << static_cast<unsigned long>(-k)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("Rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_str();  // "num" or "num/den", canonical form
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow_ui(const Rational& q, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), e);
    return Rational(n, d);
}

long exp2_exceeding(const Rational& q) {
    if (q.sign() <= 0) throw Error("exp2_exceeding requires a positive argument");
    // 2^n > a/b  <=>  2^n * b > a.  Bit lengths bracket the answer within 1.
    const mpz_class a = q.num(), b = q.den();
    long n = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)) - 1;
    auto exceeds = [&](long k) {
        if (k >= 0) {
            mpz_class lhs = b << static_cast<unsigned long>(k);
            return lhs > a;
        }
        mpz_class rhs = a << static_cast<unsigned long>(-k);
        return b > rhs;
    };
    while (!exceeds(n)) ++n;
    while (exceeds(n - 1)) --n;
    return n;
}

mpz_class floor_z(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return out;
}

}  // namespace lpbaire
