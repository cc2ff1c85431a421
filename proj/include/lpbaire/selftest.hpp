// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lpbaire/manifest.hpp"

namespace lpbaire {

// Compact deterministic invariant battery touching every module; results
// land in a manifest whose digest is reproducible run to run (criterion for
// the CLI determinism contract).  `ok` is the conjunction of all checks.
struct SelftestResult {
    bool ok = false;
    RunManifest manifest;
};

SelftestResult run_selftest(const RunConfig& cfg);

}  // namespace lpbaire
