// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "lpbaire/step_function.hpp"

namespace lpbaire {

// Open ball in L^p around a rational step function, with an affine radius
// a + b*pi.  Affine radii keep "distance exactly equal to the radius"
// representable: rational-step distances are rational multiples of pi^(1/p),
// so for p = 1 a pure pi-multiple radius can be hit exactly.
struct RationalBall {
    RationalStepFunction center;
    PiLinear radius;
    unsigned p = 1;

    void validate() const;  // radius > 0, p >= 1
};

// ||f - center||_p < r  (exact strict test).
bool ball_contains_step(const RationalBall& ball, const RationalStepFunction& f);
// ||f - center||_p <= r  (closure of the ball).
bool closed_ball_contains_step(const RationalBall& ball, const RationalStepFunction& f);

// B1 subset of B2, decided by the normed-space criterion
// d(c1, c2) + r1 <= r2, compared exactly in Q[pi].  Requires equal p.
bool ball_subset(const RationalBall& b1, const RationalBall& b2);
// Same with strict inequality d + r1 < r2 (interior containment).
bool ball_strictly_inside(const RationalBall& b1, const RationalBall& b2);

// Exact distance^p between centers.
PiPoly center_distance_pow(const RationalBall& b1, const RationalBall& b2);

// An L^p-computable function, presented as its approximation scheme:
// at(m) returns a rational step function promised to satisfy
// ||at(m) - f||_p < 2^-m.  Results are memoized; the generator is called at
// most once per index, so schemes built from expensive constructions (game
// transcripts) stay cheap to query.
class ApproximationScheme {
  public:
    ApproximationScheme(unsigned p, std::function<RationalStepFunction(long)> gen)
        : p_(p), state_(std::make_shared<State>()), gen_(std::move(gen)) {}

    static ApproximationScheme constant(unsigned p, const Rational& v);
    static ApproximationScheme from_step(unsigned p, RationalStepFunction f);

    unsigned p() const { return p_; }
    RationalStepFunction at(long m) const;

    // Verifies the computable-consistency surrogate
    // ||at(m) - at(k)||_p <= 2^-m + 2^-k for all 0 <= m < k <= max_index.
    // Returns the first offending pair, or nullopt-style {-1,-1} if none.
    std::pair<long, long> consistency_violation(long max_index) const;

  private:
    unsigned p_;
    struct State {
        std::mutex mutex;
        std::map<long, RationalStepFunction> memo;
    };
    std::shared_ptr<State> state_;
    std::function<RationalStepFunction(long)> gen_;
};

enum class BallMembership { Inside, Outside, Unknown };

// Decides membership of the scheme's limit in the open ball, by exact
// comparison of ||at(m) - center||_p against r -+ 2^-m for m = 0..max_m.
// Boundary limits (distance exactly r) are undecidable from approximations
// alone and come back Unknown once the index budget is spent.
BallMembership scheme_in_ball(const ApproximationScheme& s, const RationalBall& ball, long max_m);

}  // namespace lpbaire
