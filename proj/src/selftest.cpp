// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/selftest.hpp"

#include "lpbaire/errors.hpp"

namespace lpbaire {

namespace {
struct Battery {
    Json checks = Json::array();
    bool ok = true;

    void run(const std::string& name, const std::function<Json()>& body) {
        Json entry{{"name", name}};
        try {
            entry["detail"] = body();
            entry["pass"] = true;
        } catch (const std::exception& e) {
            entry["pass"] = false;
            entry["detail"] = e.what();
            ok = false;
        }
        checks.push_back(std::move(entry));
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("selftest: " + what);
}
}  // namespace

SelftestResult run_selftest(const RunConfig& cfg) {
    cfg.apply();
    Battery bat;

    bat.run("rational-exact", [] {
        require(Rational::pow2(-5) * Rational(32) == Rational(1), "pow2 inverse");
        require(Rational::parse("22/7") > Rational(3), "parse/order");
        return Json("pow2/parse/order");
    });

    bat.run("pi-poly-sign", [] {
        PiPoly gap = PiPoly::from_rational(Rational(355, 113)) - PiPoly::monomial(1, Rational(1));
        require(gap.sign() > 0, "355/113 > pi");
        PiLinear r = PiLinear::parse("-3/4 + 7/2 pi");
        require(PiLinear::parse(r.str()).compare(r) == Cmp::Equal, "parse/str roundtrip");
        return Json(gap.str());
    });

    bat.run("interval-sqrt2", [&] {
        IntervalReal s = IntervalReal::from_long(2, 128).sqrt();
        require(s.square().contains(Rational(2)), "sqrt(2)^2 contains 2");
        require(s.width() < cfg.tol, "enclosure width");
        return Json(s.str());
    });

    bat.run("step-algebra", [] {
        RationalStepFunction f({Rational(0), Rational(1, 2), Rational(2)},
                               {Rational(1), Rational(-2)});
        RationalStepFunction g({Rational(0), Rational(1, 3), Rational(2)},
                               {Rational(1, 4), Rational(5)});
        require(((f + g) - g).equals_ae(f), "(f+g)-g = f a.e.");
        require(lp_distance_pow(f, g, 1) == lp_distance_pow(g, f, 1), "distance symmetry");
        RationalStepFunction one = RationalStepFunction::constant(Rational(1));
        RationalStepFunction zero = RationalStepFunction::constant(Rational(0));
        require(norm_compare(one, zero, 1, PiLinear::from_pi_multiple(Rational(2))) == Cmp::Equal,
                "||1 - 0||_1 = 2 pi exactly");
        return Json(lp_distance_pow(f, g, 1).str());
    });

    bat.run("ball-enumeration", [] {
        for (long i = 0; i < 16; ++i) enum_ball(i, 1).validate();
        RationalBall inner{RationalStepFunction::constant(Rational(1, 8)),
                           PiLinear::from_rational(Rational(1, 4)), 1};
        RationalBall outer{RationalStepFunction::constant(Rational(0)),
                           PiLinear::from_rational(Rational(2)), 1};
        require(ball_subset(inner, outer), "hand-built nesting");
        require(!ball_subset(outer, inner), "strictness");
        return Json("enum_ball(0..15) valid");
    });

    bat.run("avoid-singleton", [] {
        RationalBall ball{RationalStepFunction::constant(Rational(0)),
                          PiLinear::from_rational(Rational(1)), 1};
        ApproximationScheme target = ApproximationScheme::constant(1, Rational(1, 8));
        RationalBall out = avoid_singleton(ball, target);
        require(ball_subset(out, ball), "sub-ball");
        require(scheme_in_ball(target, out, 40) == BallMembership::Outside, "target cleared");
        return Json(out.radius.str());
    });

    bat.run("game-vs-singleton", [] {
        RationalBall initial{RationalStepFunction::constant(Rational(0)),
                             PiLinear::from_rational(Rational(1)), 1};
        ApproximationScheme target = ApproximationScheme::constant(1, Rational(1, 8));
        IndexedStrategy builder{[](const RationalBall& b, long) { return b; }, false, "identity"};
        IndexedStrategy avoider =
            winning_from_witness(singleton_witness(target, "{1/8}"), "avoid-1/8");
        GamePlayer player(initial, builder, avoider);
        player.ensure_rounds(4);
        player.transcript_copy().verify();
        auto bad = player.result_scheme().consistency_violation(6);
        require(bad.first == -1, "result scheme consistent");
        return Json(player.current().radius.str());
    });

    bat.run("fourier-exact", [&] {
        RationalStepFunction f({Rational(0), Rational(1, 2), Rational(2)},
                               {Rational(1), Rational(0)});
        require(fourier_a0_exact(f) == Rational(1, 2), "a0 = mean width");
        FourierCoeff c1 = step_fourier_coeff(f, 1, 96);
        require(c1.a.width() < cfg.tol && c1.b.width() < cfg.tol, "coeff enclosure width");
        IntervalReal d5 = kernel_eval({KernelKind::Dirichlet, 5}, Rational(0), 96);
        require(d5.contains(Rational(11, 2)) && d5.width() == Rational(0), "D_5(0) = 11/2 exact");
        return Json{{"a1", c1.a.str()}, {"b1", c1.b.str()}};
    });

    bat.run("kolmogorov-build", [&] {
        KolmogorovPoly P2 = build_kolmogorov(2);
        require(P2.m == std::vector<mpz_class>{16, 37}, "n=2 frequencies");
        KolmogorovPoly P3 = build_kolmogorov(3);
        require(P3.m == std::vector<mpz_class>{81, 164, 332}, "n=3 frequencies");
        IntervalReal v = eval_kolmogorov(P2, offset_grid_coeff(5, 64), 96);
        require(v.hi_rational() > -cfg.tol, "nonnegativity sample");
        IntervalReal mean = kernel_mean_quadrature({KernelKind::Fejer, 8}, 32, 96, cfg.mode());
        require(mean.contains(Rational(1, 2)) && mean.width() < cfg.tol, "Fejer mean 1/2");
        return Json{{"K2(sample)", v.str()}, {"fejer8_mean", mean.str()}};
    });

    bat.run("strict-plan", [&] {
        StrictDivergence strict(cfg.divergence());
        StrictPlan wide = strict.plan(PiLinear::from_rational(Rational(20)));
        require(wide.n == 2, "radius 20 admits the first block");
        StrictPlan narrow = strict.plan(PiLinear::from_rational(Rational(10)));
        require(narrow.n == 256, "radius 10 forces the capped block");
        return Json{{"plan20", json_of(wide)}, {"plan10", json_of(narrow)}};
    });

    bat.run("divergence-demo", [&] {
        DivergenceConfig d = cfg.divergence();
        d.demo_rounds = 2;
        d.demo_cells = 1 << 14;
        d.measure_grid = 128;
        DivergenceDemoReport rep = divergence_demo(d);
        require(rep.containment_ok, "transcript containment");
        require(rep.consistency.first == -1, "result scheme consistent");
        for (size_t i = 1; i < rep.per_round.size(); ++i)
            require(rep.per_round[i].fraction >= rep.per_round[i - 1].fraction,
                    "fractions nondecreasing");
        return json_of(rep);
    });

    SelftestResult res;
    res.ok = bat.ok;
    res.manifest.command = "selftest";
    res.manifest.config = json_of(cfg);
    res.manifest.params = Json{{"checks", bat.checks.size()}};
    res.manifest.outputs = Json{{"ok", bat.ok}, {"checks", bat.checks}};
    return res;
}

}  // namespace lpbaire
