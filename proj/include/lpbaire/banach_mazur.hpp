// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "lpbaire/baire.hpp"
#include "lpbaire/ball_enum.hpp"

namespace lpbaire {

// One round of the ball game: the builder refines the current ball, the
// avoider refines the builder's ball and must more than halve its radius.
struct GameRound {
    RationalBall builder_ball;
    RationalBall avoider_ball;
};

struct GameTranscript {
    RationalBall initial;
    std::vector<GameRound> rounds;

    // Exact invariant checks over the whole transcript (nesting chain and
    // radius(R_i) < radius(initial) * 2^-i).  Throws on violation.
    void verify() const;
};

// Incremental game runner.  Rounds are produced on demand and every move is
// validated exactly before it enters the transcript, so a transcript held by
// callers is always legal.  The avoider's halving contract makes radii
// collapse geometrically, which is what turns the final transcript into an
// approximation scheme: center(R_k) is within radius(R_k) of the limit.
class GamePlayer {
  public:
    GamePlayer(RationalBall initial, IndexedStrategy builder, IndexedStrategy avoider);

    void ensure_rounds(long k);
    GameTranscript transcript_copy() const;
    const RationalBall& current() const;
    unsigned p() const { return initial_.p; }

    // Scheme of the game's limit point: index n plays enough rounds that
    // radius(initial) * 2^-k <= 2^-n and returns center(R_k).
    ApproximationScheme result_scheme() const;

  private:
    struct Shared;
    RationalBall initial_;
    IndexedStrategy builder_, avoider_;
    std::shared_ptr<Shared> shared_;
};

// Convenience: play a fixed number of rounds.
GameTranscript run_game(const RationalBall& initial, const IndexedStrategy& builder,
                        const IndexedStrategy& avoider, long rounds);

// Meager witness -> winning avoider strategy.  Wraps the witness avoider and
// clamps the radius to min(its own, input/4) about the same center, which
// preserves piece avoidance and containment while enforcing strict halving.
IndexedStrategy winning_from_witness(const MeagerWitness& w, std::string name);

// Winning avoider strategy -> meager witness for the set the strategy avoids.
// Piece i decodes as (j, s): O_j = enum_ball(j, p) and s feeds the strategy's
// index argument.  Given the current ball B(psi, eps), the avoider splits on
// the exact trichotomy of d(psi, center(O_j)) against radius(O_j):
//   Greater: a concentric shrink of B already clears closure(O_j);
//   Less:    a concentric shrink of B fits inside O_j and is handed to the
//            strategy, whose reply (a legal, halved sub-ball) is returned;
//   Equal:   psi sits on the sphere of O_j; the center is pushed outward by
//            a constant w on every piece (away from center(O_j)) and a small
//            radius is chosen, exactly verified to clear closure(O_j).
// All three branches return balls exactly verified to sit inside B with
// radius < radius(B)/2.
MeagerWitness witness_from_winning(const IndexedStrategy& avoider, unsigned p,
                                   std::string set_desc);

}  // namespace lpbaire
