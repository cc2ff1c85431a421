// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/banach_mazur.hpp"
#include "lpbaire/kolmogorov.hpp"

namespace lpbaire {

// Everything here plays the avoider in the ball game on L^1 so that the
// limit function's Fourier partial sums are forced to stay large on a large
// set: each move adds a rescaled Kolmogorov block
//   F(x) = A_n^{-1/2} (f_n(q x) - 1/2),
// whose partial sums at the special orders q m_j obey the exact dilation
// identity S_{q m_j}(F, x) = A_n^{-1/2} (S_{m_j}(f_n, q x) - 1/2), and then
// shrinks the radius far enough that the perturbation bound
// |S_l(f) - S_l(g)| <= l ||f - g||_1 preserves the exceedance for every
// later stage of the construction.

struct DivergenceConfig {
    Rational a_upper = Rational(2316, 10000);  // calibration constant A
    long demo_rounds = 4;
    long demo_cells = 1 << 18;  // block discretization cells
    long measure_grid = 2048;   // exceedance measurement grid
    long schedule_cap = 256;    // cap for n_k = 2^(2^k)
    long max_cells = 1 << 22;   // construction budget for strict moves
    mpfr_prec_t prec = 96;
    ExecMode mode = ExecMode::Parallel;
};

// The certified exceedance level the demo drives the partial sums above.
Rational demo_level();  // 1/100

// A_n = sqrt(log n) - A as an enclosure; positive for n >= 2 with the
// calibration constants this library produces.
IntervalReal a_n_value(long n, const Rational& a_upper, mpfr_prec_t prec);

struct RescaledBlock {
    KolmogorovPoly poly;
    mpz_class q;       // dilation factor, >= 1
    Rational a_upper;  // calibration constant A

    IntervalReal eval(const Rational& x_coeff, mpfr_prec_t prec) const;
    // S_{q m_j}(F, .) via the dilation identity; j is 1-based.
    IntervalReal partial_sum_dilated(size_t j, const Rational& x_coeff, mpfr_prec_t prec) const;
    mpz_class top_frequency() const;  // q * m_n
};

RescaledBlock make_block(long n, const mpz_class& q, const Rational& a_upper);

// Rational upper bound on the total variation of F over one period:
//   TV(F) <= q * pi * sqrt(2 * sum_v v^2 W_v^2) / sqrt(A_n),
// W_v the triangle-inequality amplitude bound of f_n at frequency v.  The
// exact coefficient sum is used up to degree 4096; beyond that W_v <= 1
// collapses it to sum v^2 <= m^2 (m+1)/3 + m^2.
Rational block_tv_upper(const RescaledBlock& block);

struct DiscretizedBlock {
    RationalStepFunction step;
    Rational l1_err;   // certified ||F - step||_1 upper bound
    Rational mass_ub;  // certified ||step||_1 upper bound
};
// Midpoint-sample step approximation on `cells` uniform cells with the
// certified error (pi/N) TV + (2 pi / N) sum(enclosure half-widths).
DiscretizedBlock discretize_block(const RescaledBlock& block, long cells, mpfr_prec_t prec,
                                  ExecMode mode);

// ---------------------------------------------------------------------------
// Strict schedule: the paper-faithful strategy with unscaled (c = 1) blocks.
// Feasible only while the current radius exceeds 2 * (2 pi / sqrt(A_n)) for
// some schedule entry n = min(2^(2^k), cap); at desk scale that window
// closes after one move, which plan()/move() report by ScheduleExhausted.
// ---------------------------------------------------------------------------
struct StrictPlan {
    long schedule_index = 0;  // k
    long n = 0;               // block parameter chosen
    mpz_class q;              // dilation for this round
    Rational mass_ub;         // 2 pi / sqrt(A_n) upper bound (block L^1 mass)
    Rational level;           // certified exceedance level sqrt(A_n)/2 (lb)
    PiLinear next_radius;     // min(eps/4, level / (4 q m_n))
    mpz_class cells_needed;   // discretization cells the construction needs
};

class StrictDivergence {
  public:
    explicit StrictDivergence(DivergenceConfig cfg);

    // Pure radius arithmetic: chooses the first feasible schedule entry at
    // or after the current position.  Throws ScheduleExhausted when no
    // capped entry satisfies mass_ub + next_radius <= radius/2.
    StrictPlan plan(const PiLinear& radius) const;

    // Plans, constructs the discretized block (throws Error when
    // cells_needed exceeds the configured budget), returns the new ball and
    // advances the schedule state.
    RationalBall move(const RationalBall& ball);

    IndexedStrategy as_strategy();

  private:
    struct State {
        long next_k = 0;
        mpz_class q{1};
    };
    DivergenceConfig cfg_;
    std::shared_ptr<State> state_;
};

// ---------------------------------------------------------------------------
// Desk-scale demo: the same mechanism run with n = 2, q = 1 blocks scaled by
// c_r = (eps/4) / (mass + err) each round, so every move is constructible
// and the accumulated center csum * F_hat provably exceeds demo_level() on a
// large fraction of the grid.
// ---------------------------------------------------------------------------
struct DemoRound {
    long round = 0;
    Rational c_r;          // block scale used this round
    Rational csum;         // accumulated scale
    Rational radius_ub;    // radius after the move (upper bound)
    Rational fraction;     // certified exceedance fraction at demo_level()
};

struct DivergenceDemoReport {
    long rounds = 0;
    long cells = 0;
    long grid = 0;
    Rational a_upper;
    Rational level;
    Rational block_l1_err;
    std::vector<DemoRound> per_round;
    Rational final_fraction;        // for the limit function (radius folded in)
    bool containment_ok = false;    // transcript re-verified exactly
    std::pair<long, long> consistency{-1, -1};  // result-scheme violation pair
};

DivergenceDemoReport divergence_demo(const DivergenceConfig& cfg);

}  // namespace lpbaire
