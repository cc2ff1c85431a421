// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/divergence.hpp"

#include "lpbaire/errors.hpp"

namespace lpbaire {

Rational demo_level() { return Rational(1, 100); }

IntervalReal a_n_value(long n, const Rational& a_upper, mpfr_prec_t prec) {
    if (n < 2) throw Error("a_n_value: n must be >= 2");
    return IntervalReal::from_long(n, prec).log().sqrt() -
           IntervalReal::from_rational(a_upper, prec);
}

IntervalReal RescaledBlock::eval(const Rational& x_coeff, mpfr_prec_t prec) const {
    const mpfr_prec_t work = prec + 16;
    IntervalReal inv = a_n_value(poly.n, a_upper, work).inv_sqrt();
    Rational qx = Rational(q, mpz_class(1)) * x_coeff;
    IntervalReal centered =
        eval_kolmogorov(poly, qx, work) - IntervalReal::from_rational(Rational(1, 2), work);
    return (centered * inv).rounded_to(prec);
}

IntervalReal RescaledBlock::partial_sum_dilated(size_t j, const Rational& x_coeff,
                                                mpfr_prec_t prec) const {
    const mpfr_prec_t work = prec + 16;
    IntervalReal inv = a_n_value(poly.n, a_upper, work).inv_sqrt();
    Rational qx = Rational(q, mpz_class(1)) * x_coeff;
    IntervalReal s = kolmogorov_partial_sum(poly, j, qx, work).sum() -
                     IntervalReal::from_rational(Rational(1, 2), work);
    return (s * inv).rounded_to(prec);
}

mpz_class RescaledBlock::top_frequency() const { return q * poly.m.back(); }

RescaledBlock make_block(long n, const mpz_class& q, const Rational& a_upper) {
    if (sgn(q) < 1) throw Error("make_block: dilation must be >= 1");
    return RescaledBlock{build_kolmogorov(n), q, a_upper};
}

Rational block_tv_upper(const RescaledBlock& block) {
    // TV(F) <= q pi sqrt(2 S) / sqrt(A_n) with S = sum v^2 W_v^2.
    const mpz_class& m_top = block.poly.m.back();
    Rational S;
    if (m_top <= 4096) {
        long m = static_cast<long>(m_top.get_si());
        for (long v = 1; v <= m; ++v) {
            Rational W(0);
            for (const mpz_class& mi : block.poly.m)
                if (v <= mi) W += Rational(mi + 1 - v, mi + 1);
            W = W / Rational(block.poly.n);
            S += Rational(v) * Rational(v) * W * W;
        }
    } else {
        // W_v <= 1: S <= sum_{v<=m} v^2 = m(m+1)(2m+1)/6.
        S = Rational(m_top * (m_top + 1) * (2 * m_top + 1), mpz_class(6));
    }
    IntervalReal tv = IntervalReal::from_rational(Rational(2) * S, 128).sqrt() *
                      IntervalReal::pi(128) *
                      a_n_value(block.poly.n, block.a_upper, 128).inv_sqrt();
    return Rational(block.q, mpz_class(1)) * tv.hi_rational();
}

DiscretizedBlock discretize_block(const RescaledBlock& block, long cells, mpfr_prec_t prec,
                                  ExecMode mode) {
    if (cells < 2) throw Error("discretize_block: need at least 2 cells");
    std::vector<IntervalReal> enc(static_cast<size_t>(cells), IntervalReal(prec));
    grid_for(cells, mode, [&](long k) {
        enc[static_cast<size_t>(k)] = block.eval(offset_grid_coeff(k, cells), prec);
    });

    std::vector<Rational> bp(static_cast<size_t>(cells) + 1);
    std::vector<Rational> vals(static_cast<size_t>(cells));
    Rational half_width_sum(0);
    for (long k = 0; k <= cells; ++k) bp[static_cast<size_t>(k)] = Rational(2 * k, cells);
    for (long k = 0; k < cells; ++k) {
        const IntervalReal& e = enc[static_cast<size_t>(k)];
        vals[static_cast<size_t>(k)] = (e.lo_rational() + e.hi_rational()) / Rational(2);
        half_width_sum += e.width() / Rational(2);
    }
    DiscretizedBlock out;
    out.step = RationalStepFunction(std::move(bp), std::move(vals));

    // ||F - step||_1 <= (pi/N) TV(F) + (2 pi / N) sum half-widths.
    Rational pi_hi = IntervalReal::pi(96).hi_rational();
    Rational N(cells);
    out.l1_err = pi_hi / N * block_tv_upper(block) + Rational(2) * pi_hi / N * half_width_sum;
    out.mass_ub = out.step.abs_pow_integral(1).coeff(1) * pi_hi;
    return out;
}

// ---------------------------------------------------------------------------
// Strict schedule
// ---------------------------------------------------------------------------

StrictDivergence::StrictDivergence(DivergenceConfig cfg)
    : cfg_(std::move(cfg)), state_(std::make_shared<State>()) {
    if (cfg_.schedule_cap < 2) throw Error("strict schedule: cap must be >= 2");
}

namespace {
long schedule_n(long k, long cap) {
    // n_k = min(2^(2^k), cap)
    if (k >= 6) return cap;  // 2^64 and beyond
    long e = 1L << k;
    if (e >= 62) return cap;
    long n = 1L << e;
    return n > cap ? cap : n;
}
}  // namespace

StrictPlan StrictDivergence::plan(const PiLinear& radius) const {
    if (radius.sign() <= 0) throw Error("strict plan: nonpositive radius");
    Rational eps_lb = radius.lower_bound_rational();
    long k = state_->next_k;
    for (;;) {
        long n = schedule_n(k, cfg_.schedule_cap);
        IntervalReal an = a_n_value(n, cfg_.a_upper, 128);
        if (an.sign_certain() <= 0)
            throw Error("strict plan: A_n not certainly positive (calibration too large)");
        Rational mass_ub =
            (IntervalReal::pi(128).mul_rational(Rational(2)) * an.inv_sqrt()).hi_rational();
        Rational level = an.sqrt().lo_rational() / Rational(2);

        KolmogorovPoly P = build_kolmogorov(n);
        mpz_class l_max = state_->q * P.m.back();
        Rational budget = level / Rational(4 * l_max, mpz_class(1));
        PiLinear next_radius =
            min_linear(radius.scaled(Rational(1, 4)), PiLinear::from_rational(budget));

        if (mass_ub + next_radius.upper_bound_rational() <= eps_lb / Rational(2)) {
            StrictPlan plan;
            plan.schedule_index = k;
            plan.n = n;
            plan.q = state_->q;
            plan.mass_ub = mass_ub;
            plan.level = level;
            plan.next_radius = next_radius;
            RescaledBlock blk{std::move(P), state_->q, cfg_.a_upper};
            Rational cells = IntervalReal::pi(96).hi_rational() * block_tv_upper(blk) / budget;
            plan.cells_needed = floor_z(cells) + 1;
            return plan;
        }
        if (n >= cfg_.schedule_cap)
            throw ScheduleExhausted(
                "no capped schedule entry fits: block mass exceeds half the radius at n = " +
                std::to_string(n));
        ++k;
    }
}

RationalBall StrictDivergence::move(const RationalBall& ball) {
    ball.validate();
    if (ball.p != 1) throw MixedP("strict divergence plays in L^1");
    StrictPlan p = plan(ball.radius);
    if (p.cells_needed > cfg_.max_cells)
        throw Error("strict move: construction needs " + p.cells_needed.get_str() +
                    " cells, over the configured budget of " + std::to_string(cfg_.max_cells));
    long cells = 1024;
    while (cells < cfg_.max_cells && mpz_class(cells) < 2 * p.cells_needed) cells *= 2;

    RescaledBlock blk = make_block(p.n, p.q, cfg_.a_upper);
    DiscretizedBlock disc = discretize_block(blk, cells, cfg_.prec, cfg_.mode);
    RationalBall out{ball.center + disc.step, p.next_radius, 1};
    if (!ball_subset(out, ball))
        throw Error("strict move: containment failed (radius too small for the block)");

    state_->next_k = p.schedule_index + 1;
    state_->q = p.q * blk.poly.m.back() + 1;
    return out;
}

IndexedStrategy StrictDivergence::as_strategy() {
    auto self = std::make_shared<StrictDivergence>(*this);
    IndexedStrategy s;
    s.shrinking = true;
    s.name = "strict-divergence";
    s.move = [self](const RationalBall& ball, long) { return self->move(ball); };
    return s;
}

// ---------------------------------------------------------------------------
// Desk-scale demo
// ---------------------------------------------------------------------------

namespace {
struct DemoState {
    Rational csum;
    std::vector<std::pair<Rational, Rational>> moves;  // (c_r, radius_ub)
};
}  // namespace

DivergenceDemoReport divergence_demo(const DivergenceConfig& cfg) {
    DivergenceDemoReport rep;
    rep.rounds = cfg.demo_rounds;
    rep.cells = cfg.demo_cells;
    rep.grid = cfg.measure_grid;
    rep.a_upper = cfg.a_upper;
    rep.level = demo_level();

    RescaledBlock block = make_block(2, 1, cfg.a_upper);
    DiscretizedBlock disc = discretize_block(block, cfg.demo_cells, cfg.prec, cfg.mode);
    rep.block_l1_err = disc.l1_err;
    const Rational mass_tot = disc.mass_ub + disc.l1_err;
    const std::vector<mpz_class>& freqs = block.poly.m;  // partial-sum orders (q = 1)
    const mpz_class l_max = block.top_frequency();
    const Rational beta = demo_level() / Rational(4 * l_max, mpz_class(1));

    // Certified |S_{m_j}(F, x)| lower ends on the measurement grid; the
    // block is identical every round, so these are computed once.
    const size_t J = freqs.size();
    std::vector<std::vector<Rational>> s_lo(static_cast<size_t>(cfg.measure_grid),
                                            std::vector<Rational>(J, Rational(0)));
    grid_for(cfg.measure_grid, cfg.mode, [&](long g) {
        Rational x = offset_grid_coeff(g, cfg.measure_grid);
        for (size_t j = 1; j <= J; ++j) {
            IntervalReal v = block.partial_sum_dilated(j, x, cfg.prec).abs();
            s_lo[static_cast<size_t>(g)][j - 1] = max(Rational(0), v.lo_rational());
        }
    });

    auto fraction_at = [&](const Rational& csum, const Rational& radius_ub) {
        long exceed = 0;
        for (long g = 0; g < cfg.measure_grid; ++g)
            for (size_t j = 0; j < J; ++j) {
                Rational l(freqs[j], mpz_class(1));
                Rational lb = csum * s_lo[static_cast<size_t>(g)][j] -
                              csum * l * disc.l1_err - l * radius_ub;
                if (lb > demo_level()) {
                    ++exceed;
                    break;
                }
            }
        return Rational(exceed, cfg.measure_grid);
    };

    auto state = std::make_shared<DemoState>();
    IndexedStrategy builder{[](const RationalBall& b, long) { return b; }, false, "identity"};
    IndexedStrategy avoider;
    avoider.shrinking = true;
    avoider.name = "demo-divergence";
    avoider.move = [state, &disc, mass_tot, beta](const RationalBall& ball, long) {
        Rational eps_lb = ball.radius.lower_bound_rational();
        Rational c_r = eps_lb / Rational(4) / mass_tot;
        PiLinear next_r =
            min_linear(ball.radius.scaled(Rational(1, 4)), PiLinear::from_rational(beta));
        RationalBall out{ball.center + disc.step.scaled(c_r), next_r, 1};
        state->csum += c_r;
        state->moves.emplace_back(state->csum, next_r.upper_bound_rational());
        return out;
    };

    RationalBall initial{RationalStepFunction::constant(Rational(0)),
                         PiLinear::from_rational(Rational(1)), 1};
    GamePlayer player(initial, builder, avoider);
    player.ensure_rounds(cfg.demo_rounds);

    for (long r = 0; r < cfg.demo_rounds; ++r) {
        const auto& [csum, rad_ub] = state->moves[static_cast<size_t>(r)];
        DemoRound dr;
        dr.round = r + 1;
        dr.csum = csum;
        dr.c_r = csum - (r == 0 ? Rational(0) : state->moves[static_cast<size_t>(r) - 1].first);
        dr.radius_ub = rad_ub;
        dr.fraction = fraction_at(csum, rad_ub);
        rep.per_round.push_back(std::move(dr));
    }
    rep.final_fraction = rep.per_round.back().fraction;

    GameTranscript transcript = player.transcript_copy();
    try {
        transcript.verify();
        rep.containment_ok = true;
    } catch (const Error&) {
        rep.containment_ok = false;
    }

    // Consistency of the result scheme (extends the game lazily as needed).
    rep.consistency = player.result_scheme().consistency_violation(5);
    return rep;
}

}  // namespace lpbaire
