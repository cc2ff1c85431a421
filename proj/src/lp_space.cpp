// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/lp_space.hpp"

#include "lpbaire/errors.hpp"

namespace lpbaire {

void RationalBall::validate() const {
    if (p < 1) throw Error("ball: p must be >= 1");
    if (radius.sign() <= 0) throw Error("ball: radius must be positive");
}

bool ball_contains_step(const RationalBall& ball, const RationalStepFunction& f) {
    return norm_compare(f, ball.center, ball.p, ball.radius) == Cmp::Less;
}

bool closed_ball_contains_step(const RationalBall& ball, const RationalStepFunction& f) {
    return norm_compare(f, ball.center, ball.p, ball.radius) != Cmp::Greater;
}

PiPoly center_distance_pow(const RationalBall& b1, const RationalBall& b2) {
    if (b1.p != b2.p) throw MixedP("center_distance_pow: balls from different L^p spaces");
    return lp_distance_pow(b1.center, b2.center, b1.p);
}

bool ball_subset(const RationalBall& b1, const RationalBall& b2) {
    if (b1.p != b2.p) throw MixedP("ball_subset: balls from different L^p spaces");
    PiLinear slack = b2.radius - b1.radius;
    if (slack.sign() < 0) return false;
    // d <= r2 - r1  <=>  d^p <= (r2 - r1)^p, both sides nonnegative.
    PiPoly d_pow = center_distance_pow(b1, b2);
    return d_pow.compare(slack.to_poly().pow(b1.p)) != Cmp::Greater;
}

bool ball_strictly_inside(const RationalBall& b1, const RationalBall& b2) {
    if (b1.p != b2.p) throw MixedP("ball_strictly_inside: balls from different L^p spaces");
    PiLinear slack = b2.radius - b1.radius;
    if (slack.sign() <= 0) return false;
    PiPoly d_pow = center_distance_pow(b1, b2);
    return d_pow.compare(slack.to_poly().pow(b1.p)) == Cmp::Less;
}

ApproximationScheme ApproximationScheme::constant(unsigned p, const Rational& v) {
    RationalStepFunction f = RationalStepFunction::constant(v);
    return ApproximationScheme(p, [f](long) { return f; });
}

ApproximationScheme ApproximationScheme::from_step(unsigned p, RationalStepFunction f) {
    return ApproximationScheme(p, [f = std::move(f)](long) { return f; });
}

RationalStepFunction ApproximationScheme::at(long m) const {
    if (m < 0) throw Error("scheme index must be >= 0");
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->memo.find(m);
        if (it != state_->memo.end()) return it->second;
    }
    RationalStepFunction f = gen_(m);
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->memo.emplace(m, std::move(f)).first->second;
}

std::pair<long, long> ApproximationScheme::consistency_violation(long max_index) const {
    for (long m = 0; m <= max_index; ++m)
        for (long k = m + 1; k <= max_index; ++k) {
            PiLinear bound = PiLinear::from_rational(Rational::pow2(-m) + Rational::pow2(-k));
            if (norm_compare(at(m), at(k), p_, bound) == Cmp::Greater) return {m, k};
        }
    return {-1, -1};
}

BallMembership scheme_in_ball(const ApproximationScheme& s, const RationalBall& ball, long max_m) {
    if (s.p() != ball.p) throw MixedP("scheme_in_ball: scheme and ball from different L^p spaces");
    for (long m = 0; m <= max_m; ++m) {
        Rational tol = Rational::pow2(-m);
        RationalStepFunction psi = s.at(m);
        // d(f, c) <= d(psi, c) + 2^-m < r  certifies Inside;
        // d(f, c) >= d(psi, c) - 2^-m > r  certifies Outside.
        PiLinear inner = ball.radius - PiLinear::from_rational(tol);
        if (inner.sign() > 0 && norm_compare(psi, ball.center, ball.p, inner) == Cmp::Less)
            return BallMembership::Inside;
        PiLinear outer = ball.radius + PiLinear::from_rational(tol);
        if (norm_compare(psi, ball.center, ball.p, outer) == Cmp::Greater)
            return BallMembership::Outside;
    }
    return BallMembership::Unknown;
}

}  // namespace lpbaire
