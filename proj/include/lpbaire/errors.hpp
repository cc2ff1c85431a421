// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lpbaire {

// Base class for all domain errors raised by this library.  Callers that
// want to distinguish "the mathematics refused" from ordinary bugs catch
// this; std::logic_error-style misuse (bad invariants on construction)
// also funnels through here so the CLI can map everything to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// Raised when an adaptive interval evaluation still cannot decide a sign or
// reach a target width at the configured precision cap.  For the comparisons
// in this library the compared value is provably nonzero (a nonzero rational
// Laurent polynomial evaluated at pi), so this signals "margin thinner than
// 2^-cap", not "undecidable".
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// Mixing functions/balls living in different L^p spaces.
struct MixedP : Error {
    explicit MixedP(const std::string& what) : Error(what) {}
};

// An approximation scheme produced functions violating the consistency
// inequality ||psi_m - psi_k|| <= 2^-m + 2^-k.
struct SchemeInconsistent : Error {
    explicit SchemeInconsistent(const std::string& what) : Error(what) {}
};

// A strategy move broke its contract (not a sub-ball, or a shrinking
// strategy failed to more than halve the radius).
struct StrategyContractViolation : Error {
    StrategyContractViolation(const std::string& what, unsigned round, const std::string& player)
        : Error(what), round_index(round), offender(player) {}
    unsigned round_index;
    std::string offender;
};

// The divergence strategy ran out of usable schedule entries: no capped
// n_k satisfies the round's largeness conditions.
struct ScheduleExhausted : Error {
    explicit ScheduleExhausted(const std::string& what) : Error(what) {}
};

}  // namespace lpbaire
