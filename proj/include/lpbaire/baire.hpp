// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lpbaire/lp_space.hpp"

namespace lpbaire {

// A constructor strategy: refines a ball to a sub-ball.  The indexed form
// additionally receives a positive round/piece index.  `shrinking` promises
// radius(move(B, i)) < radius(B)/2; the game engine enforces it exactly.
using Strategy = std::function<RationalBall(const RationalBall&)>;

struct IndexedStrategy {
    std::function<RationalBall(const RationalBall&, long)> move;
    bool shrinking = false;
    std::string name;
};

// Cantor pairing, used to flatten countable unions of countable families.
long cantor_pair(long a, long b);
std::pair<long, long> cantor_unpair(long z);

// Witness that a set X = union_i X_i is effectively meager: the avoider
// refines any ball B to a sub-ball (radius < radius(B)/2) disjoint from the
// piece X_i.  piece_desc names X_i for reports.
struct MeagerWitness {
    std::function<RationalBall(const RationalBall&, long)> avoider;
    std::function<std::string(long)> piece_desc;
};

// Sub-ball of `ball` whose closure provably misses the limit of `target`.
// Construction: on the common refinement of the ball's center c and the
// target's stage-n approximation phi (2^-n < eps_lb/8), move every piece of
// c by theta = 4*2^-n / c_p away from phi (c_p a rational lower bound of
// (2*pi)^(1/p)), radius 2^-n.  Then d(center', phi) >= 4*2^-n while
// d(center', c) <= ~4*2^-n, giving both postconditions with factor-2
// margins; the function re-verifies them exactly and throws Error on any
// failure.
RationalBall avoid_singleton(const RationalBall& ball, const ApproximationScheme& target);

// Rational lower/upper bounds of (2*pi)^(1/p), memoized.
Rational two_pi_root_lb(unsigned p);
Rational two_pi_root_ub(unsigned p);

// Witness for the singleton {limit of target}: every piece is the same
// point, every avoider call is avoid_singleton.
MeagerWitness singleton_witness(const ApproximationScheme& target, std::string desc);

// Witness for a finite union: piece i decodes via Cantor unpairing to
// (a, b); member a mod size provides piece b.
MeagerWitness union_witness(std::vector<MeagerWitness> members);
// Witness for a countable union given a member generator (no wraparound).
MeagerWitness union_witness(std::function<MeagerWitness(long)> member, std::string family_desc);

// Exact move validation shared by the game engine and tests: containment
// and (optionally) strict halving.  Throws StrategyContractViolation.
void validate_move(const RationalBall& in, const RationalBall& out, bool require_halving,
                   long round, const std::string& offender);

}  // namespace lpbaire
