// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/json_io.hpp"

#include <fstream>

#include "lpbaire/errors.hpp"

namespace lpbaire {

Json json_of(const Rational& r) { return r.str(); }
Json json_of(const PiLinear& r) { return r.str(); }
Json json_of(const IntervalReal& v) { return v.str(); }

Json json_of(const RationalStepFunction& f) {
    Json bp = Json::array(), vals = Json::array();
    for (const Rational& c : f.breakpoints()) bp.push_back(c.str());
    for (const Rational& v : f.values()) vals.push_back(v.str());
    return Json{{"breakpoints_pi", bp}, {"values", vals}};
}

Json json_of(const RationalBall& b) {
    return Json{{"p", b.p}, {"radius", b.radius.str()}, {"center", json_of(b.center)}};
}

Json json_of(const FourierCoeff& c) {
    return Json{{"a", c.a.str()}, {"b", c.b.str()}};
}

Json json_of(const KolmogorovPoly& p) {
    Json m = Json::array(), nodes = Json::array();
    for (const mpz_class& f : p.m) m.push_back(f.get_str());
    for (const Rational& a : p.nodes) nodes.push_back(a.str());
    return Json{{"n", p.n}, {"frequencies", m}, {"nodes_pi", nodes}};
}

Json json_of(const GameTranscript& t) {
    Json rounds = Json::array();
    for (const GameRound& r : t.rounds)
        rounds.push_back(
            Json{{"builder", json_of(r.builder_ball)}, {"avoider", json_of(r.avoider_ball)}});
    return Json{{"initial", json_of(t.initial)}, {"rounds", rounds}};
}

Json json_of(const ExceptionalReport& r) {
    return Json{{"n", r.n},
                {"grid", r.grid},
                {"a_upper", r.a_upper.str()},
                {"certified_exceed", r.certified_exceed},
                {"undecided", r.undecided},
                {"fraction", r.fraction().str()},
                {"fraction~", r.fraction().to_double()}};
}

Json json_of(const DivergenceDemoReport& r) {
    Json rounds = Json::array();
    for (const DemoRound& d : r.per_round)
        rounds.push_back(Json{{"round", d.round},
                              {"c_r", d.c_r.str()},
                              {"csum", d.csum.str()},
                              {"radius_ub", d.radius_ub.str()},
                              {"radius_ub~", d.radius_ub.to_double()},
                              {"fraction", d.fraction.str()},
                              {"fraction~", d.fraction.to_double()}});
    return Json{{"rounds", r.rounds},
                {"cells", r.cells},
                {"grid", r.grid},
                {"a_upper", r.a_upper.str()},
                {"level", r.level.str()},
                {"block_l1_err~", r.block_l1_err.to_double()},
                {"per_round", rounds},
                {"final_fraction", r.final_fraction.str()},
                {"final_fraction~", r.final_fraction.to_double()},
                {"containment_ok", r.containment_ok},
                {"consistency_violation", Json::array({r.consistency.first, r.consistency.second})}};
}

Json json_of(const StrictPlan& p) {
    return Json{{"schedule_index", p.schedule_index},
                {"n", p.n},
                {"q", p.q.get_str()},
                {"mass_ub~", p.mass_ub.to_double()},
                {"level~", p.level.to_double()},
                {"next_radius", p.next_radius.str()},
                {"cells_needed", p.cells_needed.get_str()}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error("expected a rational encoded as a string");
    return Rational::parse(j.get<std::string>());
}
PiLinear linear_from_json(const Json& j) {
    if (!j.is_string()) throw Error("expected an 'a + b pi' scalar encoded as a string");
    return PiLinear::parse(j.get<std::string>());
}

RationalStepFunction step_from_json(const Json& j) {
    if (!j.contains("breakpoints_pi") || !j.contains("values"))
        throw Error("step function JSON needs breakpoints_pi and values");
    std::vector<Rational> bp, vals;
    for (const Json& c : j.at("breakpoints_pi")) bp.push_back(rational_from_json(c));
    for (const Json& v : j.at("values")) vals.push_back(rational_from_json(v));
    return RationalStepFunction(std::move(bp), std::move(vals));
}

RationalBall ball_from_json(const Json& j) {
    RationalBall b{step_from_json(j.at("center")), linear_from_json(j.at("radius")),
                   j.value("p", 1u)};
    b.validate();
    return b;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace lpbaire
