#pragma once

#include "lie4/bundles.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lie4 {

enum class ComponentTag { C1, C2, C3, C4 };

std::string to_string(ComponentTag tag);

struct DegreeReport {
  std::array<Rational, 4> degrees;
  Rational total;
  // Named intermediate classes, in a fixed print order.
  std::vector<std::pair<std::string, GradedClass>> intermediates;
  // Deviations from the reference degree table, empty when everything agrees.
  std::vector<std::string> reference_mismatches;
};

// Reference degree table the report is checked against.
inline constexpr std::array<long, 4> kReferenceDegrees = {660, 57, 121, 195};
inline constexpr long kReferenceTotal = 1033;

// Raised when two evaluation routes of the same quantity disagree, or when
// the report deviates from the reference table.  Carries the full report so
// callers can still render it.
class CrossCheckError : public std::runtime_error {
 public:
  CrossCheckError(const std::string& message, DegreeReport report)
      : std::runtime_error(message), report_(std::move(report)) {}
  const DegreeReport& report() const { return report_; }

 private:
  DegreeReport report_;
};

// ----- building blocks on P^3 = P(V4*) -----

// Rank-3 tautological subbundle U with s(U) = 1 + h.
Bundle tautological_sub_p3();

// s(G) = (1-h)^{-4} for the rank-4 bundle of hyperplane-adapted maps.
GradedClass segre_G();

// s(H) = (1+2h)^4 (1+h)^{-10} for the rank-6 symmetric-tensor bundle, and the
// independent derivation of the same class as Sym^2 U twisted by det(U)*.
GradedClass segre_H_closed_form();
GradedClass segre_H_from_sym_square();

// Hom(V4/U, End U): rank 9.  Its Segre class is the multiplier in the second
// degree computation and its s_3 gives the third degree.
Bundle hom_quotient_end_u();

// The flag variety of (line, hyperplane) pairs, realized as the projective
// bundle of lines in U over P^3 with fiber class l = c1(L*).
RingPtr flag_layer();

// Push-forward to P^3 of S = s(M) c(Hom(L, U(-1))) on the flag layer,
// computed by expanding in powers of l and applying p_* l^k = s_{k-2}(U).
GradedClass pushforward_S();

// The same class by substituting z = 2/(1+h) into the stretched elementary
// symmetric generating function e_z(U(-1)) = (1+z-zh)^4/(1+z); must agree
// with pushforward_S() exactly.
GradedClass pushforward_S_closed_form();

// Independent check for the second component: s_5 of the full rank-7 bundle
// of compatible pairs on the flag variety, assembled by character arithmetic
// and pushed to P^3.
Rational degree_c2_flag_route();

// ----- building blocks on G(2,4) -----

// Rank-2 tautological subbundle with c(U) = 1 - c1 + c2 (c1, c2 the Chern
// classes of its dual).
Bundle tautological_sub_g24();

// The bundle carrying the quotient's printed Segre classes,
// s = 1 - c1 + c1^2 - c2; its total Chern class is 1 + c1 + c2.
Bundle quotient_bundle_g24();

// Traceless endomorphisms of the rank-2 subbundle: c = 1 + 4c2 - c1^2.
Bundle sl_u_bundle();

// R = Q* + U(-1), the rank-4 bundle with
// s(R) = 1 + 4c1 + 10c1^2 + 40c1c2 + 70c2^2.
Bundle r_bundle();

// ----- degrees -----

// Degree of the tagged component, each computed along its primary route and
// verified against an independent one; throws CrossCheckError when the two
// routes disagree.
Rational degree_component(ComponentTag tag);

// Runs all four computations, records the intermediate classes, and checks
// the totals against the reference table; deviations raise CrossCheckError
// with the completed report attached.
DegreeReport degree_report();

}  // namespace lie4
