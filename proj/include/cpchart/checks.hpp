#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpchart/manifest.hpp"
#include "cpchart/verdict.hpp"

namespace cpchart {

// Outcome of one named check. max_residual is the largest sampled magnitude
// of the expressions the check claims vanish (zero on a clean pass, and the
// size of the violation on a fail); max_probe_error is the largest normalized
// disagreement between the symbolic result and an independent numeric
// recomputation (finite differences, numeric conjugation, numeric linear
// algebra). A probe disagreement on a symbolic pass flips the check to fail.
struct CheckResult {
    std::string name;
    Status status = Status::indeterminate;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::optional<double> max_residual;
    std::optional<double> max_probe_error;
    double elapsed_ms = 0;
};

struct CheckReport {
    std::string manifest_path;
    uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;  // sorted by check name
    Status overall = Status::pass;
};

Status combine_overall(const std::vector<CheckResult>& checks);

CheckReport run_checks(const Manifest& m);

}  // namespace cpchart
