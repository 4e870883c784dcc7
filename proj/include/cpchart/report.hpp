#pragma once

#include <iosfwd>
#include <string>

#include "cpchart/checks.hpp"

namespace cpchart {

// Human-readable report, one block per check, ending in an OVERALL line.
// Includes wall-clock timings, so it is not byte-stable across runs.
void emit_text(const CheckReport& rep, std::ostream& out);

// Machine-readable JSON report (schema_version 1). Deterministic: identical
// manifest + seed gives identical bytes; timings are deliberately omitted.
std::string emit_structured(const CheckReport& rep);

// Inverse of emit_structured (elapsed_ms comes back as zero).
CheckReport parse_structured(const std::string& json_text);

}  // namespace cpchart
