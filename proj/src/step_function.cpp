// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/step_function.hpp"

#include <algorithm>

#include "lpbaire/errors.hpp"

namespace lpbaire {

RationalStepFunction::RationalStepFunction()
    : bp_{Rational(0), Rational(2)}, val_{Rational(0)} {}

RationalStepFunction::RationalStepFunction(std::vector<Rational> breakpoints,
                                           std::vector<Rational> values)
    : bp_(std::move(breakpoints)), val_(std::move(values)) {
    validate();
}

void RationalStepFunction::validate() const {
    if (bp_.size() < 2) throw Error("step function: need at least two breakpoints");
    if (val_.size() + 1 != bp_.size())
        throw Error("step function: values/breakpoints size mismatch");
    if (!bp_.front().is_zero() || bp_.back() != Rational(2))
        throw Error("step function: domain must be [0, 2] in units of pi");
    for (size_t i = 0; i + 1 < bp_.size(); ++i)
        if (!(bp_[i] < bp_[i + 1]))
            throw Error("step function: breakpoints must be strictly increasing");
}

RationalStepFunction RationalStepFunction::constant(const Rational& v) {
    return RationalStepFunction({Rational(0), Rational(2)}, {v});
}

Rational RationalStepFunction::value_at(const Rational& c) const {
    if (c.sign() < 0 || c > Rational(2)) throw Error("value_at: coordinate outside [0, 2]");
    // Last grid point <= c; upper_bound gives first > c.
    auto it = std::upper_bound(bp_.begin(), bp_.end(), c);
    size_t idx = static_cast<size_t>(it - bp_.begin());
    if (idx == 0) throw Error("value_at: internal ordering failure");
    if (idx >= bp_.size()) idx = bp_.size() - 1;  // c == 2 -> last piece
    return val_[idx - 1];
}

RefinedPair common_refinement(const RationalStepFunction& f, const RationalStepFunction& g) {
    RefinedPair out;
    const auto& a = f.breakpoints();
    const auto& b = g.breakpoints();
    out.breakpoints.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.breakpoints));
    const size_t k = out.breakpoints.size() - 1;
    out.f_values.reserve(k);
    out.g_values.reserve(k);
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < k; ++i) {
        const Rational& left = out.breakpoints[i];
        while (ia + 2 < a.size() && a[ia + 1] <= left) ++ia;
        while (ib + 2 < b.size() && b[ib + 1] <= left) ++ib;
        out.f_values.push_back(f.values()[ia]);
        out.g_values.push_back(g.values()[ib]);
    }
    return out;
}

RationalStepFunction RationalStepFunction::operator+(const RationalStepFunction& o) const {
    RefinedPair r = common_refinement(*this, o);
    std::vector<Rational> v(r.f_values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = r.f_values[i] + r.g_values[i];
    return RationalStepFunction(std::move(r.breakpoints), std::move(v));
}

RationalStepFunction RationalStepFunction::operator-(const RationalStepFunction& o) const {
    RefinedPair r = common_refinement(*this, o);
    std::vector<Rational> v(r.f_values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = r.f_values[i] - r.g_values[i];
    return RationalStepFunction(std::move(r.breakpoints), std::move(v));
}

RationalStepFunction RationalStepFunction::scaled(const Rational& c) const {
    std::vector<Rational> v(val_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = val_[i] * c;
    return RationalStepFunction(bp_, std::move(v));
}

RationalStepFunction RationalStepFunction::offset(const Rational& c) const {
    std::vector<Rational> v(val_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = val_[i] + c;
    return RationalStepFunction(bp_, std::move(v));
}

RationalStepFunction RationalStepFunction::canonical() const {
    std::vector<Rational> bp{bp_.front()};
    std::vector<Rational> v;
    for (size_t i = 0; i < val_.size(); ++i) {
        if (!v.empty() && v.back() == val_[i]) continue;  // extend previous piece
        if (!v.empty()) bp.push_back(bp_[i]);
        v.push_back(val_[i]);
    }
    bp.push_back(bp_.back());
    return RationalStepFunction(std::move(bp), std::move(v));
}

PiPoly RationalStepFunction::integral() const {
    Rational s(0);
    for (size_t i = 0; i < val_.size(); ++i) s += val_[i] * (bp_[i + 1] - bp_[i]);
    return PiPoly::monomial(1, s);
}

PiPoly RationalStepFunction::abs_pow_integral(unsigned p) const {
    Rational s(0);
    for (size_t i = 0; i < val_.size(); ++i)
        s += pow_ui(abs(val_[i]), p) * (bp_[i + 1] - bp_[i]);
    return PiPoly::monomial(1, s);
}

Rational RationalStepFunction::jump_variation() const {
    Rational s(0);
    for (size_t i = 0; i + 1 < val_.size(); ++i) s += abs(val_[i + 1] - val_[i]);
    return s;
}

Rational RationalStepFunction::max_abs_value() const {
    Rational m(0);
    for (const auto& v : val_) m = max(m, abs(v));
    return m;
}

bool RationalStepFunction::equals_ae(const RationalStepFunction& o) const {
    RefinedPair r = common_refinement(*this, o);
    for (size_t i = 0; i < r.f_values.size(); ++i)
        if (r.f_values[i] != r.g_values[i]) return false;
    return true;
}

PiPoly lp_distance_pow(const RationalStepFunction& f, const RationalStepFunction& g, unsigned p) {
    if (p == 0) throw Error("lp_distance_pow: p must be >= 1");
    RefinedPair r = common_refinement(f, g);
    Rational s(0);
    for (size_t i = 0; i < r.f_values.size(); ++i)
        s += pow_ui(abs(r.f_values[i] - r.g_values[i]), p) *
             (r.breakpoints[i + 1] - r.breakpoints[i]);
    return PiPoly::monomial(1, s);
}

Cmp norm_compare(const RationalStepFunction& f, const RationalStepFunction& g, unsigned p,
                 const PiLinear& r) {
    PiPoly dist_pow = lp_distance_pow(f, g, p);
    int rs = r.sign();
    if (rs < 0) return Cmp::Greater;
    if (rs == 0) return dist_pow.is_zero() ? Cmp::Equal : Cmp::Greater;
    // Both sides nonnegative: compare p-th powers exactly in Q[pi].
    return dist_pow.compare(r.to_poly().pow(p));
}

}  // namespace lpbaire
