// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "lpbaire/json_io.hpp"
#include "lpbaire/manifest.hpp"
#include "test_util.hpp"

using namespace lpbaire;

TEST_CASE("rational and pi-linear JSON round-trips are exact") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Rational r = testutil::rand_rational(rng, 1000, 997);
        CHECK(rational_from_json(json_of(r)) == r);
        PiLinear l(testutil::rand_rational(rng, 50, 31),
                   testutil::rand_rational(rng, 50, 31));
        PiLinear back = linear_from_json(json_of(l));
        CHECK(back.rat_part() == l.rat_part());
        CHECK(back.pi_coeff() == l.pi_coeff());
    }
}

TEST_CASE("step function and ball JSON round-trips are exact") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        RationalStepFunction f = testutil::rand_step(rng);
        RationalStepFunction back = step_from_json(json_of(f));
        CHECK(back.breakpoints() == f.breakpoints());
        CHECK(back.values() == f.values());

        RationalBall b = testutil::rand_ball(rng, 1 + t % 3);
        RationalBall bb = ball_from_json(json_of(b));
        CHECK(bb.p == b.p);
        CHECK(bb.radius.rat_part() == b.radius.rat_part());
        CHECK(bb.radius.pi_coeff() == b.radius.pi_coeff());
        CHECK(bb.center.breakpoints() == b.center.breakpoints());
        CHECK(bb.center.values() == b.center.values());
    }
}

TEST_CASE("malformed payloads are rejected with domain errors") {
    CHECK_THROWS_AS(rational_from_json(Json("3/0")), Error);
    CHECK_THROWS_AS(rational_from_json(Json(Json::object())), Error);
    CHECK_THROWS_AS(linear_from_json(Json("pi pi")), Error);
    Json bad = {{"p", 1}, {"radius", "1/2"},
                {"center", {{"breakpoints_pi", {"0", "1"}}, {"values", {"1", "2"}}}}};
    // breakpoints must start at 0 and end at 2 (in pi units)
    CHECK_THROWS_AS(ball_from_json(bad), Error);
    Json zero_radius = bad;
    zero_radius["center"]["breakpoints_pi"] = {"0", "2"};
    zero_radius["center"]["values"] = {"1"};
    zero_radius["radius"] = "0";
    CHECK_THROWS_AS(ball_from_json(zero_radius), Error);
    zero_radius["radius"] = "1/2";
    CHECK_NOTHROW(ball_from_json(zero_radius));
}

TEST_CASE("interval serialization uses bracketed decimal enclosures") {
    Json j = json_of(IntervalReal::from_rational(Rational(1, 3), 64));
    std::string s = j.get<std::string>();
    CHECK(s.front() == '[');
    CHECK(s.back() == ']');
    CHECK(s.find("0.333") != std::string::npos);
}

TEST_CASE("config JSON round-trip preserves every field") {
    RunConfig c;
    c.grid = 512;
    c.tol = Rational(1, 1024);
    c.precision_start = 32;
    c.precision_cap = 2048;
    c.schedule_cap = 16;
    c.a_upper = Rational(9, 40);
    c.threads = 1;
    c.seed = 42;
    RunConfig back = config_from_json(json_of(c));
    CHECK(back.grid == c.grid);
    CHECK(back.tol == c.tol);
    CHECK(back.precision_start == c.precision_start);
    CHECK(back.precision_cap == c.precision_cap);
    CHECK(back.schedule_cap == c.schedule_cap);
    CHECK(back.a_upper == c.a_upper);
    CHECK(back.threads == c.threads);
    CHECK(back.seed == c.seed);
    CHECK(back.mode() == ExecMode::Serial);

    Json bad = json_of(c);
    bad["precision_start"] = 8192;  // start above cap
    CHECK_THROWS_AS(config_from_json(bad), Error);
}

TEST_CASE("LPBAIRE_CONFIG environment variable is honored") {
    std::string path = "/tmp/lpbaire_test_config.json";
    RunConfig c;
    c.grid = 777;
    write_json_file(path, json_of(c));
    setenv("LPBAIRE_CONFIG", path.c_str(), 1);
    CHECK(load_config().grid == 777);
    // explicit path wins over the environment
    std::string path2 = "/tmp/lpbaire_test_config2.json";
    c.grid = 888;
    write_json_file(path2, json_of(c));
    CHECK(load_config(path2).grid == 888);
    unsetenv("LPBAIRE_CONFIG");
    CHECK(load_config().grid == 2048);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("manifest digest ignores wall time but tracks content") {
    RunManifest m;
    m.command = "fourier coeffs";
    m.config = json_of(RunConfig{});
    m.params = {{"n", 5}};
    m.outputs = {{"a0", "1/2"}};
    m.wall_ms = 12.5;
    RunManifest m2 = m;
    m2.wall_ms = 99999.0;
    CHECK(m.digest() == m2.digest());
    m2.params["n"] = 6;
    CHECK(m.digest() != m2.digest());
    Json j = m.json();
    CHECK(j["digest"] == m.digest());
    CHECK(j.contains("wall_ms"));
}

TEST_CASE("file digests are stable and content-sensitive") {
    std::string pa = "/tmp/lpbaire_dig_a", pb = "/tmp/lpbaire_dig_b";
    std::ofstream(pa) << "hello";
    std::ofstream(pb) << "hellp";
    CHECK(file_digest(pa) == file_digest(pa));
    CHECK(file_digest(pa) != file_digest(pb));
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(hex64(fnv1a64("a")) != hex64(fnv1a64("b")));
    CHECK(hex64(0).size() == 16);
    RunManifest m;
    m.command = "x";
    m.add_output_file("transcript", pa);
    CHECK(m.outputs["transcript"]["digest"] == file_digest(pa));
    std::remove(pa.c_str());
    std::remove(pb.c_str());
    CHECK_THROWS_AS(file_digest("/tmp/lpbaire_missing_file"), Error);
}
