// SPDX-License-Identifier: Apache-2.0
// lpbaire: reproducible experiments over the rigorous L^p ball-game library.
// Every run emits one manifest (stdout or --manifest); artifacts go to --out
// files.  Exit 0 success, 1 domain error (error JSON on stderr), 2 usage.
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lpbaire/json_io.hpp"
#include "lpbaire/selftest.hpp"

using namespace lpbaire;

namespace {

struct CliCtx {
    std::string config_path;
    std::string manifest_path;
    int threads = -1;  // -1 = leave config value
    bool failed = false;
    RunConfig cfg;
    RunManifest man;

    void finish_setup(const std::string& command) {
        cfg = load_config(config_path);
        if (threads >= 0) cfg.threads = threads;
        cfg.apply();
        man.command = command;
        man.config = json_of(cfg);
    }
};

void add_common(CLI::App* app, CliCtx& ctx) {
    app->add_option("--config", ctx.config_path, "config JSON path (or LPBAIRE_CONFIG)");
    app->add_option("--manifest", ctx.manifest_path, "write the run manifest here");
    app->add_option("--threads", ctx.threads, "parallelism degree (1 = serial reference)");
}

RationalStepFunction load_step(const std::string& path, const std::string& constant) {
    if (!path.empty()) return step_from_json(read_json_file(path));
    return RationalStepFunction::constant(Rational::parse(constant));
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << header << '\n';
    for (const auto& r : rows) out << r << '\n';
}

// The demo step function used by examples: 1 on [0, pi/2), else 0.
RationalStepFunction demo_step() {
    return RationalStepFunction({Rational(0), Rational(1, 2), Rational(2)},
                                {Rational(1), Rational(0)});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous L^p-ball games, Fourier kernels, and divergence experiments"};
    app.require_subcommand(1);
    CliCtx ctx;

    // --- game run -------------------------------------------------------------
    auto* game = app.add_subcommand("game", "Banach-Mazur ball game runners");
    game->require_subcommand(1);
    auto* game_run = game->add_subcommand("run", "play identity builder vs singleton avoider");
    long gr_rounds = 8;
    unsigned gr_p = 1;
    std::string gr_target = "1/8", gr_center = "0", gr_radius = "1", gr_out;
    game_run->add_option("--rounds", gr_rounds, "rounds to play")->check(CLI::PositiveNumber);
    game_run->add_option("-p,--p", gr_p, "L^p exponent (integer p >= 1)");
    game_run->add_option("--target", gr_target, "constant the avoider's singleton scheme targets");
    game_run->add_option("--center", gr_center, "initial ball center (constant)");
    game_run->add_option("--radius", gr_radius, "initial radius, e.g. '1' or '1/2 pi'");
    game_run->add_option("-o,--out", gr_out, "transcript JSON path");
    add_common(game_run, ctx);
    game_run->callback([&] {
        ctx.finish_setup("game run");
        RationalBall initial{RationalStepFunction::constant(Rational::parse(gr_center)),
                             PiLinear::parse(gr_radius), gr_p};
        initial.validate();
        ApproximationScheme target = ApproximationScheme::constant(gr_p, Rational::parse(gr_target));
        IndexedStrategy builder{[](const RationalBall& b, long) { return b; }, false, "identity"};
        IndexedStrategy avoider = winning_from_witness(
            singleton_witness(target, "{" + gr_target + "}"), "avoid-singleton");
        GameTranscript t = run_game(initial, builder, avoider, gr_rounds);
        t.verify();
        ctx.man.params = Json{{"rounds", gr_rounds}, {"p", gr_p}, {"target", gr_target}};
        ctx.man.outputs["final_radius"] = t.rounds.back().avoider_ball.radius.str();
        if (!gr_out.empty()) {
            write_json_file(gr_out, json_of(t));
            ctx.man.add_output_file("transcript", gr_out);
        } else {
            ctx.man.outputs["transcript"] = json_of(t);
        }
    });

    // --- avoid-singleton --------------------------------------------------------
    auto* avoid = app.add_subcommand("avoid-singleton", "one avoidance step, exactly verified");
    std::string av_center = "0", av_radius = "1", av_target = "1/8";
    unsigned av_p = 1;
    avoid->add_option("--center", av_center, "ball center (constant)");
    avoid->add_option("--radius", av_radius, "ball radius, e.g. '1' or '1/2 pi'");
    avoid->add_option("--target", av_target, "constant to avoid");
    avoid->add_option("-p,--p", av_p, "L^p exponent");
    add_common(avoid, ctx);
    avoid->callback([&] {
        ctx.finish_setup("avoid-singleton");
        RationalBall ball{RationalStepFunction::constant(Rational::parse(av_center)),
                          PiLinear::parse(av_radius), av_p};
        ball.validate();
        ApproximationScheme target = ApproximationScheme::constant(av_p, Rational::parse(av_target));
        RationalBall out = avoid_singleton(ball, target);
        ctx.man.params = Json{{"center", av_center}, {"radius", av_radius},
                              {"target", av_target}, {"p", av_p}};
        ctx.man.outputs = Json{{"input", json_of(ball)},
                               {"output", json_of(out)},
                               {"target_membership", "Outside"}};
    });

    // --- fourier ----------------------------------------------------------------
    auto* fourier = app.add_subcommand("fourier", "Fourier data of rational step functions");
    fourier->require_subcommand(1);

    auto* coeffs = fourier->add_subcommand("coeffs", "coefficients a_n, b_n up to an order");
    std::string fc_step, fc_const = "0", fc_out, fc_csv;
    long fc_n = 16;
    unsigned fc_prec = 96;
    coeffs->add_option("--step", fc_step, "step function JSON path (default: demo step)");
    coeffs->add_option("--constant", fc_const, "use a constant step function instead");
    coeffs->add_option("-n,--max-order", fc_n, "highest order")->check(CLI::PositiveNumber);
    coeffs->add_option("--prec", fc_prec, "enclosure bits");
    coeffs->add_option("-o,--out", fc_out, "coefficients JSON path");
    coeffs->add_option("--csv", fc_csv, "coefficients CSV path");
    add_common(coeffs, ctx);
    coeffs->callback([&] {
        ctx.finish_setup("fourier coeffs");
        RationalStepFunction f =
            fc_step.empty() && fc_const == "0" ? demo_step() : load_step(fc_step, fc_const);
        Json arr = Json::array();
        std::vector<std::string> rows;
        Rational a0 = fourier_a0_exact(f);
        arr.push_back(Json{{"n", 0}, {"a", a0.str()}, {"b", "0"}});
        rows.push_back("0," + std::to_string(a0.to_double()) + "," +
                       std::to_string(a0.to_double()) + ",0,0");
        for (long n = 1; n <= fc_n; ++n) {
            FourierCoeff c = step_fourier_coeff(f, n, fc_prec);
            arr.push_back(Json{{"n", n}, {"a", c.a.str()}, {"b", c.b.str()}});
            rows.push_back(std::to_string(n) + "," + std::to_string(c.a.lo_double()) + "," +
                           std::to_string(c.a.hi_double()) + "," +
                           std::to_string(c.b.lo_double()) + "," +
                           std::to_string(c.b.hi_double()));
        }
        ctx.man.params = Json{{"max_order", fc_n}, {"prec", fc_prec}};
        Json result{{"function", json_of(f)}, {"coefficients", arr}};
        if (!fc_out.empty()) {
            write_json_file(fc_out, result);
            ctx.man.add_output_file("coeffs", fc_out);
        } else {
            ctx.man.outputs["coeffs"] = result;
        }
        if (!fc_csv.empty()) {
            write_csv(fc_csv, "n,a_lo,a_hi,b_lo,b_hi", rows);
            ctx.man.add_output_file("coeffs_csv", fc_csv);
        }
    });

    auto* psums = fourier->add_subcommand("partial-sums", "S_l(f) enclosures on a uniform grid");
    std::string ps_step, ps_const = "0", ps_out, ps_csv;
    long ps_l = 16, ps_grid = 0;
    unsigned ps_prec = 96;
    psums->add_option("--step", ps_step, "step function JSON path (default: demo step)");
    psums->add_option("--constant", ps_const, "use a constant step function instead");
    psums->add_option("-l,--order", ps_l, "partial-sum order")->check(CLI::NonNegativeNumber);
    psums->add_option("--grid", ps_grid, "grid points (default: config grid)");
    psums->add_option("--prec", ps_prec, "enclosure bits");
    psums->add_option("-o,--out", ps_out, "values JSON path");
    psums->add_option("--csv", ps_csv, "values CSV path");
    add_common(psums, ctx);
    psums->callback([&] {
        ctx.finish_setup("fourier partial-sums");
        RationalStepFunction f =
            ps_step.empty() && ps_const == "0" ? demo_step() : load_step(ps_step, ps_const);
        long G = ps_grid > 0 ? ps_grid : ctx.cfg.grid;
        std::vector<IntervalReal> vals(static_cast<size_t>(G), IntervalReal(ps_prec));
        grid_for(G, ctx.cfg.mode(), [&](long k) {
            vals[static_cast<size_t>(k)] =
                step_partial_sum(f, ps_l, offset_grid_coeff(k, G), ps_prec);
        });
        Json arr = Json::array();
        std::vector<std::string> rows;
        for (long k = 0; k < G; ++k) {
            const IntervalReal& v = vals[static_cast<size_t>(k)];
            arr.push_back(Json{{"x_pi", offset_grid_coeff(k, G).str()}, {"S_l", v.str()}});
            rows.push_back(std::to_string(k) + "," + offset_grid_coeff(k, G).str() + "," +
                           std::to_string(v.lo_double()) + "," + std::to_string(v.hi_double()));
        }
        ctx.man.params = Json{{"order", ps_l}, {"grid", G}, {"prec", ps_prec}};
        Json result{{"function", json_of(f)}, {"values", arr}};
        if (!ps_out.empty()) {
            write_json_file(ps_out, result);
            ctx.man.add_output_file("partial_sums", ps_out);
        } else {
            ctx.man.outputs["count"] = G;
        }
        if (!ps_csv.empty()) {
            write_csv(ps_csv, "k,x_pi,lo,hi", rows);
            ctx.man.add_output_file("partial_sums_csv", ps_csv);
        }
    });

    // --- kolmogorov ---------------------------------------------------------------
    auto* kol = app.add_subcommand("kolmogorov", "kernel polynomial construction/verification");
    kol->require_subcommand(1);

    auto* kbuild = kol->add_subcommand("build", "construct f_n and emit its data");
    long kb_n = 4;
    std::string kb_out;
    kbuild->add_option("-n", kb_n, "block parameter n >= 2")->check(CLI::Range(2l, 1l << 20));
    kbuild->add_option("-o,--out", kb_out, "poly JSON path");
    add_common(kbuild, ctx);
    kbuild->callback([&] {
        ctx.finish_setup("kolmogorov build");
        KolmogorovPoly P = build_kolmogorov(kb_n);
        ctx.man.params = Json{{"n", kb_n}};
        if (!kb_out.empty()) {
            write_json_file(kb_out, json_of(P));
            ctx.man.add_output_file("poly", kb_out);
        } else {
            ctx.man.outputs["poly"] = json_of(P);
        }
    });

    auto* kverify = kol->add_subcommand("verify", "positivity sample + exceptional-set measure");
    long kv_n = 4, kv_grid = 0, kv_mean_cells = 0;
    unsigned kv_prec = 96;
    kverify->add_option("-n", kv_n, "block parameter")->check(CLI::Range(2l, 1l << 10));
    kverify->add_option("--grid", kv_grid, "measurement grid (default: config grid)");
    kverify->add_option("--mean-cells", kv_mean_cells,
                        "quadrature cells for the mean check (0 = skip; must exceed the degree)");
    kverify->add_option("--prec", kv_prec, "enclosure bits");
    add_common(kverify, ctx);
    kverify->callback([&] {
        ctx.finish_setup("kolmogorov verify");
        KolmogorovPoly P = build_kolmogorov(kv_n);
        long G = kv_grid > 0 ? kv_grid : ctx.cfg.grid;
        std::vector<Rational> lo(static_cast<size_t>(G));
        grid_for(G, ctx.cfg.mode(), [&](long k) {
            lo[static_cast<size_t>(k)] =
                eval_kolmogorov(P, offset_grid_coeff(k, G), kv_prec).lo_rational();
        });
        Rational min_lo = lo[0];
        for (const Rational& v : lo) min_lo = min(min_lo, v);
        ExceptionalReport rep =
            measure_exceptional_set(P, ctx.cfg.a_upper, G, kv_prec, ctx.cfg.mode());
        ctx.man.params = Json{{"n", kv_n}, {"grid", G}, {"prec", kv_prec},
                              {"a_upper", ctx.cfg.a_upper.str()}};
        ctx.man.outputs = Json{{"poly", json_of(P)},
                               {"min_enclosure_lo~", min_lo.to_double()},
                               {"exceptional", json_of(rep)}};
        if (kv_mean_cells > 0) {
            IntervalReal mean(kv_prec);
            bool first = true;
            for (size_t i = 0; i < P.m.size(); ++i) {
                IntervalReal m = kernel_mean_quadrature({KernelKind::Fejer, P.m[i]},
                                                        kv_mean_cells, kv_prec, ctx.cfg.mode());
                mean = first ? m : mean + m;
                first = false;
            }
            mean = mean.div_z(static_cast<long>(P.m.size()));
            ctx.man.outputs["mean"] = mean.str();
        }
    });

    // --- diverge demo ----------------------------------------------------------------
    auto* diverge = app.add_subcommand("diverge", "divergence-forcing strategies");
    diverge->require_subcommand(1);
    auto* demo = diverge->add_subcommand("demo", "desk-scale certified divergence game");
    long dd_rounds = 4, dd_cells = 1 << 18, dd_grid = 0;
    std::string dd_out, dd_plan_radius;
    demo->add_option("--rounds", dd_rounds, "game rounds")->check(CLI::PositiveNumber);
    demo->add_option("--cells", dd_cells, "block discretization cells");
    demo->add_option("--grid", dd_grid, "measurement grid (default: config grid)");
    demo->add_option("--plan-radius", dd_plan_radius,
                     "also print the strict (c = 1) plan for this starting radius");
    demo->add_option("-o,--out", dd_out, "report JSON path");
    add_common(demo, ctx);
    demo->callback([&] {
        ctx.finish_setup("diverge demo");
        DivergenceConfig d = ctx.cfg.divergence();
        d.demo_rounds = dd_rounds;
        d.demo_cells = dd_cells;
        if (dd_grid > 0) d.measure_grid = dd_grid;
        DivergenceDemoReport rep = divergence_demo(d);
        ctx.man.params = Json{{"rounds", dd_rounds}, {"cells", d.demo_cells},
                              {"grid", d.measure_grid}, {"a_upper", d.a_upper.str()}};
        if (!dd_out.empty()) {
            write_json_file(dd_out, json_of(rep));
            ctx.man.add_output_file("report", dd_out);
        }
        ctx.man.outputs["demo"] = json_of(rep);
        if (!dd_plan_radius.empty()) {
            StrictDivergence strict(d);
            ctx.man.outputs["strict_plan"] =
                json_of(strict.plan(PiLinear::parse(dd_plan_radius)));
        }
    });

    // --- selftest -----------------------------------------------------------------------
    auto* self = app.add_subcommand("selftest", "deterministic invariant battery");
    self->callback([&] {
        ctx.finish_setup("selftest");
        SelftestResult res = run_selftest(ctx.cfg);
        res.manifest.config = ctx.man.config;
        res.manifest.command = ctx.man.command;
        ctx.man = std::move(res.manifest);
        ctx.failed = !res.ok;  // manifest still printed; exit code reports it
    });
    add_common(self, ctx);

    try {
        auto t0 = std::chrono::steady_clock::now();
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
            app.exit(e);
            return 2;
        }
        ctx.man.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        Json out = ctx.man.json();
        if (!ctx.manifest_path.empty()) write_json_file(ctx.manifest_path, out);
        std::cout << out.dump(2) << std::endl;
        return ctx.failed ? 1 : 0;
    } catch (const Error& e) {
        std::cerr << Json{{"error", "domain"}, {"what", e.what()}}.dump() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"what", e.what()}}.dump() << std::endl;
        return 1;
    }
}
