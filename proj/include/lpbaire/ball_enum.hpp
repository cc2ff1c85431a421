// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/lp_space.hpp"

namespace lpbaire {

// Total, computable enumerations of the countable data this library quantifies
// over.  Every call is defined for every index >= 0 (or >= 1 where stated),
// and every object of the advertised kind appears at some index:
//
//   - positive rationals: Calkin-Wilf, cw(k) = fusc(k)/fusc(k+1), k >= 1,
//     a bijection onto Q_{>0};
//   - signed rationals: 0, +cw(1), -cw(1), +cw(2), -cw(2), ... (bijection);
//   - step functions: index -> (piece count, gap payload, value payload);
//     gaps g_0..g_k > 0 are normalized to breakpoints 2 * prefix/total, so
//     each positive-gap tuple yields a valid grid and every rational grid
//     arises from its own gap vector (surjective onto all step functions);
//   - balls: index -> (center index, radius index); radius index -> parity
//     flag choosing a plain rational or a pi-multiple radius.
//
// Surjectivity is what the category arguments need: a witness built against
// this enumeration covers every rational ball.
mpz_class stern_fusc(unsigned long n);
Rational enum_positive_rational(long k);  // k >= 1
Rational enum_rational(long i);           // i >= 0, signed zigzag
RationalStepFunction enum_step_function(long i);
PiLinear enum_radius(long i);  // positive; even i plain, odd i pi-multiple
RationalBall enum_ball(long i, unsigned p);

}  // namespace lpbaire
