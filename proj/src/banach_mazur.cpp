// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/banach_mazur.hpp"

#include <mutex>

#include "lpbaire/errors.hpp"

namespace lpbaire {

void GameTranscript::verify() const {
    const RationalBall* prev = &initial;
    for (size_t i = 0; i < rounds.size(); ++i) {
        const long round = static_cast<long>(i) + 1;
        validate_move(*prev, rounds[i].builder_ball, false, round, "builder");
        validate_move(rounds[i].builder_ball, rounds[i].avoider_ball, true, round, "avoider");
        // radius(R_i) < r_0 * 2^-i follows from halving; re-check directly.
        PiLinear cap = initial.radius.scaled(Rational::pow2(-round));
        if (rounds[i].avoider_ball.radius.compare(cap) != Cmp::Less)
            throw StrategyContractViolation("transcript radius bound violated",
                                            static_cast<unsigned>(round), "avoider");
        prev = &rounds[i].avoider_ball;
    }
}

struct GamePlayer::Shared {
    mutable std::mutex mutex;
    GameTranscript transcript;
};

GamePlayer::GamePlayer(RationalBall initial, IndexedStrategy builder, IndexedStrategy avoider)
    : initial_(std::move(initial)),
      builder_(std::move(builder)),
      avoider_(std::move(avoider)),
      shared_(std::make_shared<Shared>()) {
    initial_.validate();
    shared_->transcript.initial = initial_;
}

void GamePlayer::ensure_rounds(long k) {
    std::lock_guard<std::mutex> lock(shared_->mutex);
    auto& rounds = shared_->transcript.rounds;
    while (static_cast<long>(rounds.size()) < k) {
        const long i = static_cast<long>(rounds.size()) + 1;
        const RationalBall& cur = rounds.empty() ? initial_ : rounds.back().avoider_ball;
        RationalBall built = builder_.move(cur, i);
        validate_move(cur, built, builder_.shrinking, i, builder_.name);
        RationalBall avoided = avoider_.move(built, i);
        validate_move(built, avoided, true, i, avoider_.name);
        rounds.push_back(GameRound{std::move(built), std::move(avoided)});
    }
}

GameTranscript GamePlayer::transcript_copy() const {
    std::lock_guard<std::mutex> lock(shared_->mutex);
    return shared_->transcript;
}

const RationalBall& GamePlayer::current() const {
    std::lock_guard<std::mutex> lock(shared_->mutex);
    return shared_->transcript.rounds.empty() ? initial_
                                              : shared_->transcript.rounds.back().avoider_ball;
}

ApproximationScheme GamePlayer::result_scheme() const {
    // k(n) = least k >= 1 with r_0 * 2^-k <= 2^-n; then center(R_k) is
    // within radius(R_k) < r_0 * 2^-k <= 2^-n of the limit point.
    GamePlayer self = *this;  // shares transcript state
    return ApproximationScheme(initial_.p, [self](long n) mutable {
        long k = 1;
        while (self.initial_.radius.compare(
                   PiLinear::from_rational(Rational::pow2(k - n))) == Cmp::Greater)
            ++k;
        self.ensure_rounds(k);
        std::lock_guard<std::mutex> lock(self.shared_->mutex);
        return self.shared_->transcript.rounds[static_cast<size_t>(k) - 1].avoider_ball.center;
    });
}

GameTranscript run_game(const RationalBall& initial, const IndexedStrategy& builder,
                        const IndexedStrategy& avoider, long rounds) {
    GamePlayer player(initial, builder, avoider);
    player.ensure_rounds(rounds);
    return player.transcript_copy();
}

IndexedStrategy winning_from_witness(const MeagerWitness& w, std::string name) {
    IndexedStrategy s;
    s.shrinking = true;
    s.name = std::move(name);
    s.move = [w](const RationalBall& ball, long i) {
        RationalBall avoided = w.avoider(ball, i);
        validate_move(ball, avoided, false, i, "witness-avoider");
        // Shrinking the avoided ball about its own center keeps both the
        // containment and the piece avoidance; eps/4 enforces halving.
        PiLinear r = min_linear(avoided.radius, ball.radius.scaled(Rational(1, 4)));
        return RationalBall{std::move(avoided.center), r, avoided.p};
    };
    return s;
}

namespace {

// Largest t <= start of the form start * 2^-k such that the ball
// B(center, t) is exactly disjoint from closure(B(other, eps_other)):
// d(center, other)^p > (t + eps_other)^p.  Requires d > eps_other.
Rational disjoint_radius(const RationalStepFunction& center, const RationalStepFunction& other,
                         const PiLinear& eps_other, unsigned p, Rational start) {
    PiPoly d_pow = lp_distance_pow(center, other, p);
    for (int t = 0; t < 4096; ++t) {
        PiLinear enlarged = PiLinear::from_rational(start) + eps_other;
        if (d_pow.compare(enlarged.to_poly().pow(p)) == Cmp::Greater) return start;
        start = start / Rational(2);
    }
    throw Error("disjoint_radius: no clearance found (inputs not strictly separated?)");
}

}  // namespace

MeagerWitness witness_from_winning(const IndexedStrategy& avoider, unsigned p,
                                   std::string set_desc) {
    MeagerWitness w;
    w.piece_desc = [set_desc](long i) {
        auto [j, s] = cantor_unpair(i);
        (void)s;
        return set_desc + " \xE2\x88\xA9 closure(O_" + std::to_string(j) + ")";
    };
    w.avoider = [avoider, p](const RationalBall& ball, long i) -> RationalBall {
        ball.validate();
        if (ball.p != p) throw MixedP("witness avoider: ball from wrong L^p space");
        auto [j, s] = cantor_unpair(i);
        RationalBall piece_ball = enum_ball(j, p);
        PiPoly d_pow = lp_distance_pow(ball.center, piece_ball.center, p);
        Cmp tri = d_pow.compare(piece_ball.radius.to_poly().pow(p));
        Rational eps_lb = ball.radius.lower_bound_rational();

        if (tri == Cmp::Greater) {
            // Concentric shrink clearing closure(O_j).
            Rational rho =
                disjoint_radius(ball.center, piece_ball.center, piece_ball.radius, p, eps_lb / 4);
            RationalBall out{ball.center,
                             min_linear(PiLinear::from_rational(rho),
                                        ball.radius.scaled(Rational(1, 4))),
                             p};
            validate_move(ball, out, true, i, "witness_from_winning/greater");
            return out;
        }

        if (tri == Cmp::Less) {
            // Concentric shrink fitting strictly inside O_j, handed to the
            // winning strategy; its reply is legal and halved by contract.
            Rational eps_j_lb = piece_ball.radius.lower_bound_rational();
            Rational nu = eps_j_lb / 2;
            bool fits = false;
            for (int t = 0; t < 4096 && !fits; ++t) {
                PiLinear slack = piece_ball.radius - PiLinear::from_rational(nu);
                fits = slack.sign() > 0 && d_pow.compare(slack.to_poly().pow(p)) == Cmp::Less;
                if (!fits) nu = nu / Rational(2);
            }
            if (!fits) throw Error("witness_from_winning: no probe fits inside the piece ball");
            RationalBall probe{ball.center,
                               min_linear(PiLinear::from_rational(nu),
                                          ball.radius.scaled(Rational(1, 4))),
                               p};
            RationalBall reply = avoider.move(probe, s + 1);
            validate_move(probe, reply, true, s + 1, "winning-strategy");
            validate_move(ball, reply, true, i, "witness_from_winning/less");
            return reply;
        }

        // Sphere case d = eps_j: push the center outward by a constant w on
        // every refinement piece; (e + w)^p >= e^p + w^p makes the new
        // distance exceed eps_j strictly, and w is small enough to stay in B.
        Rational w_off;
        if (p == 1 && ball.radius.rat_part().is_zero() && ball.radius.pi_coeff().sign() > 0) {
            // Pure pi-multiple radius in L^1: movement is exactly
            // w * 2 pi = radius/2 and the new distance is exactly
            // eps_j + radius/2 (asserted by tests).
            w_off = ball.radius.pi_coeff() / Rational(4);
        } else {
            w_off = eps_lb / (Rational(2) * two_pi_root_ub(p));
        }
        for (int attempt = 0; attempt < 64; ++attempt) {
            RefinedPair r = common_refinement(ball.center, piece_ball.center);
            std::vector<Rational> vals(r.f_values.size());
            for (size_t q = 0; q < vals.size(); ++q) {
                int side = (r.f_values[q] - r.g_values[q]).sign();
                vals[q] = r.f_values[q] + (side >= 0 ? w_off : -w_off);
            }
            RationalStepFunction pushed(std::move(r.breakpoints), std::move(vals));
            Rational rho = disjoint_radius(pushed, piece_ball.center, piece_ball.radius, p,
                                           min(eps_lb / 4, w_off));
            RationalBall out{std::move(pushed),
                             min_linear(PiLinear::from_rational(rho),
                                        ball.radius.scaled(Rational(1, 4))),
                             p};
            if (ball_subset(out, ball)) {
                validate_move(ball, out, true, i, "witness_from_winning/equal");
                return out;
            }
            w_off = w_off / Rational(2);  // unreachable by the margin analysis
        }
        throw Error("witness_from_winning: sphere case failed to re-enter the ball");
    };
    return w;
}

}  // namespace lpbaire
