#pragma once

#include <map>
#include <optional>
#include <string>

#include "cpchart/errors.hpp"
#include "cpchart/tensors.hpp"

namespace cpchart {

struct NumericConfig {
    uint64_t seed = 42;
    int samples = 20;
    double modulus_min = 0.5;
    double modulus_max = 2.0;
    double rel_tol = 1e-6;
    double fd_step = 1e-5;
    double pole_tol = 1e-12;
};

// Validated model of a manifest file. Format is a TOML subset (sections,
// key = value, strings/bools/numbers/nested arrays, # comments); expression
// strings use the expr-core grammar. See README for the full format.
struct Manifest {
    std::string path;
    ChartPtr chart;
    std::optional<Bivector11> poisson;
    std::optional<HermitianMetric> hermitian;
    std::optional<CotangentMetric> cotangent;
    std::map<std::string, VectorField> fields;
    std::map<std::string, Expr> functions;
    std::vector<std::string> checks;
    NumericConfig numeric;
};

Manifest load_manifest(const std::string& path);
Manifest parse_manifest(const std::string& text, const std::string& path_label);

const std::vector<std::string>& known_check_names();

}  // namespace cpchart
