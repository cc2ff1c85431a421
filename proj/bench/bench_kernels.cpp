// SPDX-License-Identifier: Apache-2.0
// Timing comparison of the OpenMP grid kernels against the serial reference
// path, with a byte-level equality check of the results (the parallel path
// must be a pure speedup, never a different answer).
#include <chrono>
#include <cstdio>

#include "lpbaire/divergence.hpp"

using namespace lpbaire;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
std::pair<double, std::vector<std::string>> timed_scan(long n, ExecMode mode, F&& eval) {
    std::vector<std::string> out(static_cast<size_t>(n));
    auto t0 = Clock::now();
    grid_for(n, mode, [&](long k) { out[static_cast<size_t>(k)] = eval(k); });
    return {ms_since(t0), std::move(out)};
}

int run_case(const char* name, long n, const std::function<std::string(long)>& eval) {
    auto [par_ms, par] = timed_scan(n, ExecMode::Parallel, eval);
    auto [ser_ms, ser] = timed_scan(n, ExecMode::Serial, eval);
    bool same = par == ser;
    std::printf("%-28s n=%-7ld parallel %9.1f ms   serial %9.1f ms   speedup %.2fx   %s\n",
                name, n, par_ms, ser_ms, ser_ms / (par_ms > 0 ? par_ms : 1e-9),
                same ? "identical" : "MISMATCH");
    return same ? 0 : 1;
}

}  // namespace

int main() {
    std::printf("grid threads available: %d\n", grid_threads());
    int bad = 0;

    KolmogorovPoly P4 = build_kolmogorov(4);
    bad += run_case("eval_kolmogorov n=4", 4096, [&](long k) {
        return eval_kolmogorov(P4, offset_grid_coeff(k, 4096), 96).str();
    });

    bad += run_case("fejer kernel l=1039", 4096, [&](long k) {
        return kernel_eval({KernelKind::Fejer, 1039}, offset_grid_coeff(k, 4096), 96).str();
    });

    KolmogorovPoly P8 = build_kolmogorov(8);
    bad += run_case("partial sums n=8, j=4", 1024, [&](long k) {
        return kolmogorov_partial_sum(P8, 4, offset_grid_coeff(k, 1024), 96).sum().str();
    });

    RescaledBlock blk = make_block(2, 1, Rational(2316, 10000));
    bad += run_case("block discretization", 1 << 14, [&](long k) {
        return blk.eval(offset_grid_coeff(k, 1 << 14), 96).str();
    });

    if (bad) {
        std::printf("%d case(s) diverged between modes\n", bad);
        return 1;
    }
    return 0;
}
