// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/json_io.hpp"

namespace lpbaire {

// One knob set shared by every experiment; a JSON file (path in
// LPBAIRE_CONFIG or --config) overrides the defaults, CLI flags override
// the file.
struct RunConfig {
    long grid = 2048;                       // measurement grid points
    Rational tol = Rational(1, 100000000);  // 1e-8, reporting tolerance
    unsigned precision_start = 64;          // adaptive interval start bits
    unsigned precision_cap = 4096;          // adaptive interval cap bits
    long schedule_cap = 256;                // strict schedule n_k cap
    Rational a_upper = Rational(2316, 10000);
    int threads = 0;  // 0 = library default; 1 forces the serial path
    unsigned long long seed = 20260814;

    ExecMode mode() const { return threads == 1 ? ExecMode::Serial : ExecMode::Parallel; }
    void apply() const;  // installs the numeric policy and thread count
    DivergenceConfig divergence() const;
};

RunConfig config_from_json(const Json& j);
Json json_of(const RunConfig& c);

// LPBAIRE_CONFIG env var if set, else defaults.
RunConfig load_config(const std::string& explicit_path = "");

}  // namespace lpbaire
