// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/config.hpp"

#include <cstdlib>

#include "lpbaire/errors.hpp"

#ifdef LPBAIRE_HAVE_OPENMP
#include <omp.h>
#endif

namespace lpbaire {

void RunConfig::apply() const {
    if (precision_start < 16 || precision_cap < precision_start)
        throw Error("config: need 16 <= precision_start <= precision_cap");
    set_numeric_policy(NumericPolicy{precision_start, precision_cap});
#ifdef LPBAIRE_HAVE_OPENMP
    if (threads > 1) omp_set_num_threads(threads);
#endif
}

DivergenceConfig RunConfig::divergence() const {
    DivergenceConfig d;
    d.a_upper = a_upper;
    d.schedule_cap = schedule_cap;
    d.measure_grid = grid;
    d.mode = mode();
    return d;
}

RunConfig config_from_json(const Json& j) {
    RunConfig c;
    c.grid = j.value("grid", c.grid);
    if (j.contains("tol")) c.tol = rational_from_json(j.at("tol"));
    c.precision_start = j.value("precision_start", c.precision_start);
    c.precision_cap = j.value("precision_cap", c.precision_cap);
    c.schedule_cap = j.value("schedule_cap", c.schedule_cap);
    if (j.contains("a_upper")) c.a_upper = rational_from_json(j.at("a_upper"));
    c.threads = j.value("threads", c.threads);
    c.seed = j.value("seed", c.seed);
    if (c.grid < 2) throw Error("config: grid must be >= 2");
    if (c.schedule_cap < 2) throw Error("config: schedule_cap must be >= 2");
    if (c.precision_start < 16 || c.precision_start > c.precision_cap)
        throw Error("config: need 16 <= precision_start <= precision_cap");
    return c;
}

Json json_of(const RunConfig& c) {
    return Json{{"grid", c.grid},
                {"tol", c.tol.str()},
                {"precision_start", c.precision_start},
                {"precision_cap", c.precision_cap},
                {"schedule_cap", c.schedule_cap},
                {"a_upper", c.a_upper.str()},
                {"threads", c.threads},
                {"seed", c.seed}};
}

RunConfig load_config(const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty())
        if (const char* env = std::getenv("LPBAIRE_CONFIG")) path = env;
    if (path.empty()) return RunConfig{};
    return config_from_json(read_json_file(path));
}

}  // namespace lpbaire
