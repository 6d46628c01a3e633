// verify.hpp — The machine-checked identity suite: every operator identity the
// library is built on, run as named residual checks with per-check tolerances.

#pragma once

#include "jcm/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jcm::verify {

struct CheckResult {
    std::string name;
    double      residual;
    double      tolerance;
    bool        pass;
};

struct VerifyConfig {
    int    n_max  = 32;
    double lambda = 1.0;
    double omega  = 10.0;
    // When set, replaces every check's intrinsic tolerance.
    std::optional<double> tolerance_override;
};

// Runs the full suite at the configured cutoff. Checks whose probe states
// cannot fit under a very small cutoff scale their amplitudes down to fit;
// the collapse-revival check needs room for a Poisson distribution and is
// registered only when the cutoff admits one.
std::vector<CheckResult> run_suite(const VerifyConfig& config);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

} // namespace jcm::verify
