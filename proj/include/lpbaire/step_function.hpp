// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lpbaire/pi_poly.hpp"
#include "lpbaire/rational.hpp"

namespace lpbaire {

// Step function on [0, 2*pi) with breakpoints that are rational multiples of
// pi and rational values.  Breakpoints are stored as the scaled coordinates
// c_0 = 0 < c_1 < ... < c_k = 2 (actual breakpoint c_i * pi); value v_i
// holds on [c_i*pi, c_{i+1}*pi).  Storing coordinates in units of pi keeps
// every interval length a rational times pi, so L^p integrals of rational
// step functions land in Q[pi] and compare exactly.
class RationalStepFunction {
  public:
    // Constant 0 on the whole domain.
    RationalStepFunction();
    // breakpoints.front()==0, breakpoints.back()==2, strictly increasing;
    // values.size() == breakpoints.size()-1.  Throws Error otherwise.
    RationalStepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static RationalStepFunction constant(const Rational& v);

    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<Rational>& values() const { return val_; }
    size_t pieces() const { return val_.size(); }

    // Value at scaled coordinate c in [0, 2]; right-continuous, with the
    // convention value_at(2) = last piece's value.
    Rational value_at(const Rational& c) const;

    RationalStepFunction operator+(const RationalStepFunction& o) const;
    RationalStepFunction operator-(const RationalStepFunction& o) const;
    RationalStepFunction scaled(const Rational& c) const;
    RationalStepFunction offset(const Rational& c) const;  // add constant

    // Merge adjacent pieces with equal values (canonical representative).
    RationalStepFunction canonical() const;

    // Exact integral over [0, 2*pi]: (sum v_i * dc_i) * pi.
    PiPoly integral() const;
    // Exact integral of |f|^p: (sum |v_i|^p * dc_i) * pi.
    PiPoly abs_pow_integral(unsigned p) const;
    // Total variation of the value sequence (jump sizes, both endpoints free).
    Rational jump_variation() const;

    Rational max_abs_value() const;

    bool equals_ae(const RationalStepFunction& o) const;

  private:
    void validate() const;
    std::vector<Rational> bp_;
    std::vector<Rational> val_;
};

// Common refinement: one breakpoint grid carrying both functions' values.
struct RefinedPair {
    std::vector<Rational> breakpoints;  // grid of size k+1
    std::vector<Rational> f_values;     // size k
    std::vector<Rational> g_values;     // size k
};
RefinedPair common_refinement(const RationalStepFunction& f, const RationalStepFunction& g);

// ||f - g||_p^p as an exact element of Q[pi] (a degree-1 monomial).
PiPoly lp_distance_pow(const RationalStepFunction& f, const RationalStepFunction& g, unsigned p);

// Exact trichotomy of ||f - g||_p against a (nonnegative) affine radius r:
// compares distance^p with r^p in Q[pi].  r < 0 yields Greater (distances
// are nonnegative) unless f = g a.e. and r = 0.
Cmp norm_compare(const RationalStepFunction& f, const RationalStepFunction& g, unsigned p,
                 const PiLinear& r);

}  // namespace lpbaire
