#pragma once

#include <stdexcept>
#include <string>

namespace cpchart {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConnectionAxiomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ManifestError : std::runtime_error {
    ManifestError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg) {}
};

}  // namespace cpchart
