// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "lpbaire/divergence.hpp"

namespace lpbaire {

// Insertion-ordered so serialized artifacts are byte-stable across runs.
using Json = nlohmann::ordered_json;

// Exact fields serialize as canonical strings ("3/4", "1/2 pi", ...);
// enclosures as "[lo, hi]" decimal strings; keys suffixed `~` carry lossy
// double approximations for quick reading and are ignored by parsers.
Json json_of(const Rational& r);
Json json_of(const PiLinear& r);
Json json_of(const IntervalReal& v);
Json json_of(const RationalStepFunction& f);
Json json_of(const RationalBall& b);
Json json_of(const FourierCoeff& c);
Json json_of(const KolmogorovPoly& p);
Json json_of(const GameTranscript& t);
Json json_of(const ExceptionalReport& r);
Json json_of(const DivergenceDemoReport& r);
Json json_of(const StrictPlan& p);

Rational rational_from_json(const Json& j);
PiLinear linear_from_json(const Json& j);
RationalStepFunction step_from_json(const Json& j);
RationalBall ball_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace lpbaire
