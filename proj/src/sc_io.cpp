#include "lie4/sc_io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace lie4 {

namespace {

using nlohmann::ordered_json;

void require_keys(const ordered_json& obj, const std::set<std::string>& keys,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (keys.find(key) == keys.end())
      throw ScParseError(where + ": unexpected field \"" + key + "\"");
  }
  for (const auto& key : keys) {
    if (!obj.contains(key))
      throw ScParseError(where + ": missing field \"" + key + "\"");
  }
}

int get_int(const ordered_json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw ScParseError(what + " must be an integer");
  return v.get<int>();
}

}  // namespace

StructureConstants parse_structure_constants(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScParseError("top level must be an object");
  require_keys(doc, {"dim", "brackets"}, "top level");
  const int dim = get_int(doc["dim"], "dim");
  if (dim < 2 || dim > 4) throw ScParseError("dim must be 2, 3 or 4");
  if (!doc["brackets"].is_array())
    throw ScParseError("brackets must be an array");
  StructureConstants sc(dim);
  std::set<std::pair<int, int>> seen;
  for (const auto& entry : doc["brackets"]) {
    if (!entry.is_object()) throw ScParseError("bracket entry must be an object");
    require_keys(entry, {"i", "j", "coeffs"}, "bracket entry");
    const int i = get_int(entry["i"], "i");
    const int j = get_int(entry["j"], "j");
    if (!(0 <= i && i < j && j < dim))
      throw ScParseError("bracket entry requires 0 <= i < j < dim");
    if (!seen.insert({i, j}).second)
      throw ScParseError("duplicate bracket entry for pair (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    const auto& coeffs = entry["coeffs"];
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(dim))
      throw ScParseError("coeffs must be an array of exactly dim strings");
    for (int k = 0; k < dim; ++k) {
      if (!coeffs[k].is_string())
        throw ScParseError("coefficients must be rational strings");
      auto r = parse_rational(coeffs[k].get<std::string>());
      if (!r)
        throw ScParseError("malformed rational \"" +
                           coeffs[k].get<std::string>() + "\"");
      sc.set_coeff(i, j, k, *r);
    }
  }
  return sc;
}

StructureConstants read_structure_constants(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_structure_constants(buffer.str());
}

std::string serialize_structure_constants(const StructureConstants& sc) {
  ordered_json doc;
  doc["dim"] = sc.dim();
  doc["brackets"] = ordered_json::array();
  for (int i = 0; i < sc.dim(); ++i) {
    for (int j = i + 1; j < sc.dim(); ++j) {
      bool nonzero = false;
      for (int k = 0; k < sc.dim(); ++k) {
        if (sc.coeff(i, j, k) != 0) { nonzero = true; break; }
      }
      if (!nonzero) continue;
      ordered_json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["coeffs"] = ordered_json::array();
      for (int k = 0; k < sc.dim(); ++k) {
        entry["coeffs"].push_back(rational_to_string(sc.coeff(i, j, k)));
      }
      doc["brackets"].push_back(std::move(entry));
    }
  }
  return doc.dump(2) + "\n";
}

void write_structure_constants(std::ostream& out,
                               const StructureConstants& sc) {
  out << serialize_structure_constants(sc);
}

}  // namespace lie4
