#include "lie4/lie4degrees.hpp"
#include "lie4/liealg.hpp"
#include "lie4/sc_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 ok, 1 Jacobi fails, 2 parse/usage error, 3 internal
// cross-check mismatch, 4 genericity budget exhausted.
enum ExitCode {
  kOk = 0,
  kJacobiFails = 1,
  kParseError = 2,
  kCrossCheckError = 3,
  kGenericityError = 4,
};

long long to_long(const lie4::Rational& r) {
  return static_cast<long long>(numerator(r));
}

void print_report(const lie4::DegreeReport& report, bool json, bool verbose) {
  if (json) {
    ordered_json out;
    out["C1"] = to_long(report.degrees[0]);
    out["C2"] = to_long(report.degrees[1]);
    out["C3"] = to_long(report.degrees[2]);
    out["C4"] = to_long(report.degrees[3]);
    out["total"] = to_long(report.total);
    std::cout << out.dump() << "\n";
    return;
  }
  for (int t = 0; t < 4; ++t) {
    std::cout << lie4::to_string(static_cast<lie4::ComponentTag>(t)) << " "
              << lie4::rational_to_string(report.degrees[t]) << "\n";
  }
  if (verbose) {
    for (const auto& [name, value] : report.intermediates) {
      std::cout << name << " = " << value.to_string() << "\n";
    }
  }
  std::cout << "total " << lie4::rational_to_string(report.total) << "\n";
}

int cmd_degrees(bool json, bool verbose) {
  try {
    print_report(lie4::degree_report(), json, verbose);
    return kOk;
  } catch (const lie4::CrossCheckError& e) {
    print_report(e.report(), json, verbose);
    std::cerr << "cross-check: " << e.what() << "\n";
    return kCrossCheckError;
  }
}

std::optional<lie4::StructureConstants> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return std::nullopt;
  }
  try {
    return lie4::read_structure_constants(in);
  } catch (const lie4::ScParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int cmd_check_jacobi(const std::string& path) {
  auto sc = load(path);
  if (!sc) return kParseError;
  const auto defect = lie4::jacobi_defect(*sc);
  const int n = sc->dim();
  bool ok = true;
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        bool nonzero = false;
        for (int m = 0; m < n; ++m) {
          if (defect[pos + m] != 0) nonzero = true;
        }
        if (nonzero) {
          ok = false;
          std::cout << "jacobi fails on (e" << i + 1 << ", e" << j + 1 << ", e"
                    << k + 1 << "):";
          for (int m = 0; m < n; ++m) {
            std::cout << " " << lie4::rational_to_string(defect[pos + m]);
          }
          std::cout << "\n";
        }
        pos += n;
      }
    }
  }
  if (ok) {
    std::cout << "jacobi: ok\n";
    return kOk;
  }
  return kJacobiFails;
}

int cmd_classify(const std::string& path, bool json) {
  auto sc = load(path);
  if (!sc) return kParseError;
  const lie4::LieProfile p = lie4::classify(*sc);
  if (json) {
    ordered_json out;
    out["jacobi_ok"] = p.jacobi_ok;
    out["derived_dim"] = p.derived_dim;
    out["derived_type"] = lie4::to_string(p.derived_type);
    out["component"] = lie4::to_string(p.component);
    out["is_abelian"] = p.is_abelian;
    out["center_dim"] = p.center_dim;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "jacobi: " << (p.jacobi_ok ? "ok" : "FAIL") << "\n";
    std::cout << "derived: " << lie4::to_string(p.derived_type) << " (dim "
              << p.derived_dim << ")\n";
    std::cout << "center: dim " << p.center_dim << "\n";
    std::cout << "component: " << lie4::to_string(p.component);
    if (p.component == lie4::Component::Boundary && p.is_abelian) {
      std::cout << " (abelian)";
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_sample(const std::string& component, std::uint64_t seed,
               const std::string& out_path, bool generic) {
  lie4::Component tag;
  if (component == "c1" || component == "C1") tag = lie4::Component::C1;
  else if (component == "c2" || component == "C2") tag = lie4::Component::C2;
  else if (component == "c3" || component == "C3") tag = lie4::Component::C3;
  else if (component == "c4" || component == "C4") tag = lie4::Component::C4;
  else {
    std::cerr << "error: --component must be one of c1, c2, c3, c4\n";
    return kParseError;
  }
  std::optional<lie4::StructureConstants> sc;
  if (generic) {
    sc = lie4::sample_generic(tag, seed);
    if (!sc) {
      std::cerr << "error: no generic sample within the re-draw budget\n";
      return kGenericityError;
    }
  } else {
    sc = lie4::sample_component(tag, seed);
  }
  const std::string text = lie4::serialize_structure_constants(*sc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kParseError;
    }
    out << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection-theory degrees and structure-constant tools for "
               "four dimensional Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool json = false, verbose = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--verbose", verbose, "print intermediate classes");

  auto* degrees = app.add_subcommand("degrees", "print the degree table");

  auto* check = app.add_subcommand("check-jacobi",
                                   "verify the Jacobi identity for a file");
  std::string check_path;
  check->add_option("path", check_path, "structure constants file")->required();

  auto* classify = app.add_subcommand("classify",
                                      "classify a structure constants file");
  std::string classify_path;
  classify->add_option("path", classify_path, "structure constants file")
      ->required();

  auto* sample = app.add_subcommand("sample", "emit a component sample");
  std::string component, out_path;
  std::uint64_t seed = 0;
  bool generic = false;
  sample->add_option("--component", component, "c1, c2, c3 or c4")->required();
  sample->add_option("--seed", seed, "generator seed");
  sample->add_option("--out", out_path, "output path (default stdout)");
  sample->add_flag("--generic", generic,
                   "re-draw until the sample classifies to its component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  if (degrees->parsed()) return cmd_degrees(json, verbose);
  if (check->parsed()) return cmd_check_jacobi(check_path);
  if (classify->parsed()) return cmd_classify(classify_path, json);
  if (sample->parsed()) return cmd_sample(component, seed, out_path, generic);
  return kParseError;
}
