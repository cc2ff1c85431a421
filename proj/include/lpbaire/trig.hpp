// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "lpbaire/interval.hpp"
#include "lpbaire/rational.hpp"

namespace lpbaire {

// sin(c*pi) and cos(c*pi) for exact rational c, as certified enclosures.
//
// The coefficient is reduced mod 2 exactly (integer arithmetic on num/den),
// so frequencies of any bit-length lose nothing before the single floating
// evaluation.  c in {0, 1/2, 1, 3/2} (mod 2) returns the exact value as a
// point interval.  The generic path evaluates sin over the enclosure of
// c*pi and widens by its width (|sin'| <= 1), so the result is a genuine
// enclosure even when c*pi brushes a critical point; it is finally clamped
// to [-1, 1].
//
// Results are memoized per (precision, reduced coefficient): uniform grids
// hit few distinct reduced coefficients however large the frequencies get.
IntervalReal sin_pi(const Rational& c, mpfr_prec_t prec);
IntervalReal cos_pi(const Rational& c, mpfr_prec_t prec);

// Exact predicate: is c*pi a pole of 1/sin(c*pi/...)-style denominators,
// i.e. c integral?
bool is_integral(const Rational& c);

size_t trig_cache_size();
void clear_trig_cache();

}  // namespace lpbaire
