#pragma once

#include "lie4/liealg.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lie4 {

// Schema violations (bad field set, malformed rationals, index errors) and
// JSON syntax errors both surface as ScParseError.
struct ScParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File schema:
//   { "dim": n, "brackets": [ { "i": i, "j": j, "coeffs": ["p/q", ...] } ] }
// with 0 <= i < j < dim, exactly dim coefficient strings per entry, rationals
// as "p" or "p/q" only (no floating point), unlisted pairs zero, and no
// fields beyond the schema.
StructureConstants read_structure_constants(std::istream& in);
StructureConstants parse_structure_constants(const std::string& text);

// Deterministic rendering: pairs in lexicographic order, zero pairs omitted,
// rationals serialized as strings.
std::string serialize_structure_constants(const StructureConstants& sc);
void write_structure_constants(std::ostream& out, const StructureConstants& sc);

}  // namespace lie4
