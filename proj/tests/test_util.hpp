// SPDX-License-Identifier: Apache-2.0
// Seeded random generators for rationals, step functions, balls, and legal
// game strategies.  Everything is driven by std::mt19937_64 with fixed seeds
// so failures replay byte-identically.
#pragma once

#include <random>

#include "lpbaire/divergence.hpp"

namespace testutil {

using namespace lpbaire;

inline Rational rand_rational(std::mt19937_64& rng, long num_range = 16, long den_max = 12) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Rational rand_positive_rational(std::mt19937_64& rng, long num_max = 16,
                                       long den_max = 12) {
    std::uniform_int_distribution<long> num(1, num_max);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

// Step function with `pieces` pieces, breakpoints on a fine dyadic grid of
// [0, 2] (pi units), values in [-num_range, num_range].
inline RationalStepFunction rand_step(std::mt19937_64& rng, int pieces = 4,
                                      long num_range = 8) {
    std::uniform_int_distribution<long> cut(1, 255);
    std::vector<long> cuts;
    for (int i = 0; i < pieces - 1; ++i) cuts.push_back(cut(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Rational> bp{Rational(0)};
    for (long c : cuts) bp.push_back(Rational(c, 128));
    bp.push_back(Rational(2));
    std::vector<Rational> vals;
    for (size_t i = 0; i + 1 < bp.size(); ++i) vals.push_back(rand_rational(rng, num_range));
    return RationalStepFunction(std::move(bp), std::move(vals));
}

// Radius: plain rational or pi-multiple, in (0, ~4].
inline PiLinear rand_radius(std::mt19937_64& rng) {
    Rational r = rand_positive_rational(rng, 16, 8);
    if (rng() & 1) return PiLinear::from_pi_multiple(r * Rational(1, 4));
    return PiLinear::from_rational(r);
}

inline RationalBall rand_ball(std::mt19937_64& rng, unsigned p, int pieces = 4) {
    RationalBall b{rand_step(rng, pieces), rand_radius(rng), p};
    b.validate();
    return b;
}

// Legal random builder: concentric shrink by a factor in [1/4, 1) — allowed
// to violate the *halving* contract (builders only need containment).
inline IndexedStrategy rand_builder(uint64_t seed) {
    IndexedStrategy s;
    s.shrinking = false;
    s.name = "random-builder";
    s.move = [seed](const RationalBall& b, long i) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(i));
        std::uniform_int_distribution<long> num(1, 12);
        Rational f(num(rng) + 4, 16);  // in [5/16, 1]
        return RationalBall{b.center, b.radius.scaled(f), b.p};
    };
    return s;
}

// Legal random avoider: moves the center by an exactly contained offset and
// shrinks strictly below half.  Offset delta (constant shift) has L^p norm
// |delta| (2 pi)^(1/p) <= |delta| * 7, so delta = eps_lb/64 keeps
// d + r_out < eps exactly for every p >= 1 (d <= 7 eps_lb/64, r_out < eps/3).
inline IndexedStrategy rand_avoider(uint64_t seed) {
    IndexedStrategy s;
    s.shrinking = true;
    s.name = "random-avoider";
    s.move = [seed](const RationalBall& b, long i) {
        std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ull + static_cast<uint64_t>(i));
        std::uniform_int_distribution<long> num(1, 15);
        Rational f(num(rng) + 16, 80);  // shrink factor in (1/5, 2/5]
        Rational delta = b.radius.lower_bound_rational() * Rational(num(rng) - 8, 64 * 8);
        return RationalBall{b.center.offset(delta), b.radius.scaled(f), b.p};
    };
    return s;
}

}  // namespace testutil
