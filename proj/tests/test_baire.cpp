// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "lpbaire/baire.hpp"
#include "lpbaire/errors.hpp"
#include "test_util.hpp"

using namespace lpbaire;

TEST_CASE("cantor pairing is a bijection on the tested range") {
    std::set<long> seen;
    for (long a = 0; a < 40; ++a)
        for (long b = 0; b < 40; ++b) {
            long z = cantor_pair(a, b);
            CHECK(seen.insert(z).second);
            auto [x, y] = cantor_unpair(z);
            CHECK(x == a);
            CHECK(y == b);
        }
    // round-trip from the flat side too
    for (long z = 0; z < 500; ++z) {
        auto [a, b] = cantor_unpair(z);
        CHECK(cantor_pair(a, b) == z);
    }
    CHECK(cantor_pair(0, 0) == 0);
    CHECK_THROWS_AS(cantor_pair(3100000000L, 3100000000L), Error);
}

TEST_CASE("two_pi_root bounds bracket (2 pi)^(1/p)") {
    for (unsigned p : {1u, 2u, 3u, 5u}) {
        // exact bracketing: lb^p <= 2 pi <= ub^p, decided in Q[pi]
        PiPoly two_pi = PiPoly::monomial(1, Rational(2));
        CHECK((two_pi - PiPoly::from_rational(pow_ui(two_pi_root_lb(p), p))).sign() >= 0);
        CHECK((PiPoly::from_rational(pow_ui(two_pi_root_ub(p), p)) - two_pi).sign() >= 0);
        CHECK(two_pi_root_lb(p) >= Rational(1));
        CHECK(two_pi_root_ub(p) - two_pi_root_lb(p) < Rational(1, 1000));
    }
}

TEST_CASE("avoid_singleton postconditions on random instances") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 12; ++it) {
        unsigned p = 1 + static_cast<unsigned>(rng() % 3);
        RationalBall ball = testutil::rand_ball(rng, p, 3);
        ApproximationScheme target =
            ApproximationScheme::from_step(p, testutil::rand_step(rng, 3));
        RationalBall out = avoid_singleton(ball, target);
        CHECK(out.p == p);
        CHECK(ball_subset(out, ball));
        CHECK(out.radius.compare(ball.radius.scaled(Rational(1, 2))) == Cmp::Less);
        CHECK(scheme_in_ball(target, out, 60) == BallMembership::Outside);
    }
}

TEST_CASE("avoid_singleton works when the target sits at the ball center") {
    RationalBall ball{RationalStepFunction::constant(Rational(1, 3)),
                      PiLinear::from_rational(Rational(1, 2)), 1};
    ApproximationScheme target = ApproximationScheme::constant(1, Rational(1, 3));
    RationalBall out = avoid_singleton(ball, target);
    CHECK(ball_subset(out, ball));
    CHECK(scheme_in_ball(target, out, 60) == BallMembership::Outside);
}

TEST_CASE("singleton witness avoids its point on every piece") {
    ApproximationScheme target = ApproximationScheme::constant(1, Rational(1, 4));
    MeagerWitness w = singleton_witness(target, "{1/4}");
    RationalBall ball{RationalStepFunction::constant(Rational(0)),
                      PiLinear::from_rational(Rational(1)), 1};
    for (long i = 0; i < 4; ++i) {
        RationalBall out = w.avoider(ball, i);
        CHECK(ball_subset(out, ball));
        CHECK(scheme_in_ball(target, out, 60) == BallMembership::Outside);
        CHECK(!w.piece_desc(i).empty());
    }
}

TEST_CASE("finite union witness routes pieces to members") {
    ApproximationScheme t0 = ApproximationScheme::constant(1, Rational(1, 4));
    ApproximationScheme t1 = ApproximationScheme::constant(1, Rational(-1, 4));
    MeagerWitness u = union_witness(
        {singleton_witness(t0, "{1/4}"), singleton_witness(t1, "{-1/4}")});
    RationalBall ball{RationalStepFunction::constant(Rational(0)),
                      PiLinear::from_rational(Rational(2)), 1};
    // piece index cantor_pair(a, b): member a mod 2 must avoid its target
    for (long a = 0; a < 2; ++a) {
        long i = cantor_pair(a, 3);
        RationalBall out = u.avoider(ball, i);
        CHECK(ball_subset(out, ball));
        CHECK(scheme_in_ball(a == 0 ? t0 : t1, out, 60) == BallMembership::Outside);
    }
}

TEST_CASE("countable union witness via generator") {
    // X_k = { constant k/8 }
    MeagerWitness u = union_witness(
        [](long k) {
            return singleton_witness(ApproximationScheme::constant(1, Rational(k, 8)),
                                     "{" + Rational(k, 8).str() + "}");
        },
        "grid-points");
    RationalBall ball{RationalStepFunction::constant(Rational(0)),
                      PiLinear::from_rational(Rational(4)), 1};
    for (long a = 0; a < 3; ++a) {
        long i = cantor_pair(a, 1);
        RationalBall out = u.avoider(ball, i);
        CHECK(ball_subset(out, ball));
        CHECK(scheme_in_ball(ApproximationScheme::constant(1, Rational(a, 8)), out, 60) ==
              BallMembership::Outside);
        CHECK(u.piece_desc(i).find("grid-points") != std::string::npos);
    }
}

TEST_CASE("validate_move enforces the exact contracts") {
    RationalBall in{RationalStepFunction::constant(Rational(0)),
                    PiLinear::from_rational(Rational(1)), 1};
    RationalBall good{RationalStepFunction::constant(Rational(1, 32)),
                      PiLinear::from_rational(Rational(1, 4)), 1};
    validate_move(in, good, true, 3, "tester");

    // halving violated: radius 1/2 is not *strictly* below half
    RationalBall half{RationalStepFunction::constant(Rational(0)),
                      PiLinear::from_rational(Rational(1, 2)), 1};
    CHECK_THROWS_AS(validate_move(in, half, true, 3, "tester"), StrategyContractViolation);
    validate_move(in, half, false, 3, "tester");  // fine as a mere containment move

    // containment violated
    RationalBall outside{RationalStepFunction::constant(Rational(2)),
                         PiLinear::from_rational(Rational(1, 4)), 1};
    CHECK_THROWS_AS(validate_move(in, outside, false, 1, "tester"), StrategyContractViolation);

    // p mismatch
    RationalBall wrong_p{RationalStepFunction::constant(Rational(0)),
                         PiLinear::from_rational(Rational(1, 4)), 2};
    CHECK_THROWS_AS(validate_move(in, wrong_p, false, 1, "tester"), StrategyContractViolation);

    try {
        validate_move(in, outside, false, 7, "alice");
        CHECK(false);
    } catch (const StrategyContractViolation& e) {
        CHECK(e.round_index == 7);
        CHECK(e.offender == "alice");
    }
}
