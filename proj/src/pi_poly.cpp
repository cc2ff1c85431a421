// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/pi_poly.hpp"

#include <sstream>

#include "lpbaire/errors.hpp"

namespace lpbaire {

PiPoly PiPoly::from_rational(const Rational& c) { return monomial(0, c); }

PiPoly PiPoly::monomial(unsigned degree, const Rational& c) {
    PiPoly p;
    p.set(degree, c);
    return p;
}

void PiPoly::set(unsigned degree, const Rational& c) {
    if (c.is_zero())
        terms_.erase(degree);
    else
        terms_[degree] = c;
}

Rational PiPoly::coeff(unsigned degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

PiPoly PiPoly::operator+(const PiPoly& o) const {
    PiPoly r = *this;
    for (const auto& [d, c] : o.terms_) r.set(d, r.coeff(d) + c);
    return r;
}

PiPoly PiPoly::operator-(const PiPoly& o) const {
    PiPoly r = *this;
    for (const auto& [d, c] : o.terms_) r.set(d, r.coeff(d) - c);
    return r;
}

PiPoly PiPoly::operator-() const {
    PiPoly r;
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

PiPoly PiPoly::operator*(const PiPoly& o) const {
    PiPoly r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) r.set(d1 + d2, r.coeff(d1 + d2) + c1 * c2);
    return r;
}

PiPoly PiPoly::scaled(const Rational& c) const {
    PiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [d, cc] : terms_) r.terms_[d] = cc * c;
    return r;
}

PiPoly PiPoly::pow(unsigned e) const {
    PiPoly r = from_rational(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

IntervalReal PiPoly::eval_interval(mpfr_prec_t prec) const {
    IntervalReal acc = IntervalReal::from_long(0, prec);
    if (terms_.empty()) return acc;
    IntervalReal pi = IntervalReal::pi(prec);
    unsigned cur_deg = 0;
    IntervalReal pw = IntervalReal::from_long(1, prec);
    for (const auto& [d, c] : terms_) {  // ascending degree
        while (cur_deg < d) {
            pw = pw * pi;
            ++cur_deg;
        }
        acc += pw.mul_rational(c);
    }
    return acc;
}

int PiPoly::sign() const {
    if (terms_.empty()) return 0;
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& [d, c] : terms_) {
        (void)d;
        if (c.sign() > 0) all_nonpos = false;
        if (c.sign() < 0) all_nonneg = false;
    }
    // pi^d > 0, so a one-signed coefficient vector decides immediately.
    if (all_nonneg) return 1;
    if (all_nonpos) return -1;
    return certified_sign([this](mpfr_prec_t p) { return eval_interval(p); }, "pi-poly sign");
}

Cmp PiPoly::compare(const PiPoly& o) const {
    switch ((*this - o).sign()) {
        case -1: return Cmp::Less;
        case 0: return Cmp::Equal;
        default: return Cmp::Greater;
    }
}

Rational PiPoly::lower_bound_rational() const {
    return eval_interval(128).lo_rational();
}

Rational PiPoly::upper_bound_rational() const {
    return eval_interval(128).hi_rational();
}

std::string PiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rational v = c;
        if (first) {
            if (v.sign() < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        os << v.str();
        if (d == 1)
            os << " pi";
        else if (d > 1)
            os << " pi^" << d;
        first = false;
    }
    return os.str();
}

PiPoly PiLinear::to_poly() const {
    return PiPoly::monomial(0, a_) + PiPoly::monomial(1, b_);
}

int PiLinear::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    return to_poly().sign();
}

Rational PiLinear::lower_bound_rational() const {
    IntervalReal pi = IntervalReal::pi(128);
    return a_ + b_ * (b_.sign() >= 0 ? pi.lo_rational() : pi.hi_rational());
}

Rational PiLinear::upper_bound_rational() const {
    IntervalReal pi = IntervalReal::pi(128);
    return a_ + b_ * (b_.sign() >= 0 ? pi.hi_rational() : pi.lo_rational());
}

std::string PiLinear::str() const {
    if (b_.is_zero()) return a_.str();
    std::string pi_part = (b_ == Rational(1)) ? "pi" : b_.str() + " pi";
    if (a_.is_zero()) return b_.sign() < 0 && b_ == Rational(-1) ? "-pi" : pi_part;
    if (b_.sign() < 0) {
        Rational nb = -b_;
        std::string tail = (nb == Rational(1)) ? "pi" : nb.str() + " pi";
        return a_.str() + " - " + tail;
    }
    return a_.str() + " + " + pi_part;
}

namespace {
// One additive term: "RAT", "RAT pi", "RAT*pi", or bare "pi".
void parse_term(const std::string& t, Rational& a, Rational& b, bool negate) {
    std::string s;
    for (char ch : t)
        if (!isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
    if (s.empty()) throw Error("PiLinear parse: empty term");
    bool has_pi = false;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        has_pi = true;
        s.erase(s.size() - 2);
    }
    Rational v;
    if (s.empty() || s == "+")
        v = Rational(1);
    else if (s == "-")
        v = Rational(-1);
    else
        v = Rational::parse(s);
    if (negate) v = -v;
    if (has_pi)
        b = b + v;
    else
        a = a + v;
}
}  // namespace

PiLinear PiLinear::parse(const std::string& s) {
    // Split on top-level '+'/'-' that function as term separators (a sign
    // directly after the start or after another separator binds to its term).
    Rational a(0), b(0);
    std::string cur;
    bool neg = false;
    bool seen_payload = false;  // cur contains more than a leading sign
    for (char ch : s) {
        if ((ch == '+' || ch == '-') && seen_payload) {
            parse_term(cur, a, b, neg);
            cur.clear();
            neg = (ch == '-');
            seen_payload = false;
        } else {
            if (ch == '-' && cur.empty() && !seen_payload && !neg) {
                neg = true;
                continue;
            }
            cur += ch;
            if (!isspace(static_cast<unsigned char>(ch)) && ch != '+') seen_payload = true;
        }
    }
    if (!seen_payload) throw Error("PiLinear parse: dangling sign in '" + s + "'");
    parse_term(cur, a, b, neg);
    return PiLinear(a, b);
}

PiLinear min_linear(const PiLinear& x, const PiLinear& y) {
    return x.compare(y) == Cmp::Greater ? y : x;
}

}  // namespace lpbaire
