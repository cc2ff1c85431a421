// SPDX-License-Identifier: Apache-2.0
#include "lpbaire/grid_scan.hpp"

#ifdef LPBAIRE_HAVE_OPENMP
#include <omp.h>
#endif

namespace lpbaire {

void grid_for(long n, ExecMode mode, const std::function<void(long)>& fn) {
#ifdef LPBAIRE_HAVE_OPENMP
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)mode;
#endif
    for (long i = 0; i < n; ++i) fn(i);
}

int grid_threads() {
#ifdef LPBAIRE_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lpbaire
