// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace lpbaire {

enum class ExecMode { Parallel, Serial };

// Runs fn(i) for i = 0..n-1.  Parallel mode uses OpenMP when compiled in,
// otherwise falls back to the serial loop.  Callers write results into
// per-index slots and reduce serially afterwards, so outputs are identical
// in both modes and for any thread count — the serial path is the reference
// implementation the parallel one is benchmarked and tested against.
void grid_for(long n, ExecMode mode, const std::function<void(long)>& fn);

int grid_threads();  // number of threads Parallel mode would use

}  // namespace lpbaire
