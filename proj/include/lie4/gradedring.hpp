#pragma once

#include "lie4/rational.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lie4 {

// The three graded rings the degree computations live in, each presented by a
// finite monomial basis per degree together with normal-form reduction rules:
//
//   P3   generator h, top degree 3, integration = coefficient of h^3.
//   G24  generators c1 (degree 1) and c2 (degree 2); reductions
//        c1^3 -> 2 c1c2 and, in degree 4, c1^4 -> 2 pt, c1^2 c2 -> pt,
//        c2^2 -> pt.  The point class is printed as c2^2.
//   ProjBundleLayer  polynomials in a fiber class over a base ring; it
//        carries no quotient relation, fiber powers are only ever eliminated
//        by push-forward.  Truncated at base top + (fiber rank - 1).
class ChowRing : public std::enable_shared_from_this<ChowRing> {
 public:
  enum class Kind { P3, G24, ProjBundleLayer };

  static std::shared_ptr<const ChowRing> p3();
  static std::shared_ptr<const ChowRing> g24();
  static std::shared_ptr<const ChowRing> proj_bundle_layer(
      std::shared_ptr<const ChowRing> base, int fiber_bundle_rank,
      std::string fiber_class_name);

  Kind kind() const { return kind_; }
  int top_degree() const { return top_degree_; }
  std::size_t basis_size(int degree) const;
  std::string monomial_name(int degree, std::size_t index) const;

  // Layer accessors; throw on the closed rings.
  const std::shared_ptr<const ChowRing>& base() const;
  int fiber_bundle_rank() const;
  const std::string& fiber_class_name() const;

  // Basis index of fiber^power * (base monomial) inside the given total
  // degree, and its inverse.
  std::size_t layer_index(int degree, int fiber_power,
                          std::size_t base_index) const;
  std::pair<int, std::size_t> layer_decompose(int degree,
                                              std::size_t index) const;

  // Product of two basis monomials, as (index, coefficient) pairs in degree
  // d1 + d2; empty when the product truncates to zero.
  std::vector<std::pair<std::size_t, Rational>> monomial_product(
      int d1, std::size_t i1, int d2, std::size_t i2) const;

  bool same_ring(const ChowRing& other) const;

 private:
  ChowRing(Kind kind, std::shared_ptr<const ChowRing> base, int fiber_rank,
           std::string fiber_name);

  Kind kind_;
  int top_degree_;
  std::shared_ptr<const ChowRing> base_;
  int fiber_bundle_rank_ = 0;
  std::string fiber_class_name_;
};

using RingPtr = std::shared_ptr<const ChowRing>;

// An element of a ChowRing: exact-rational coefficients over the fixed
// monomial basis of each degree.  Truncation above the top degree is silent;
// equality is coefficient-wise.  Values are immutable in spirit: every
// operation returns a fresh class.
class GradedClass {
 public:
  explicit GradedClass(RingPtr ring);  // zero

  static GradedClass zero(RingPtr ring) { return GradedClass(std::move(ring)); }
  static GradedClass one(RingPtr ring) { return scalar(std::move(ring), Rational(1)); }
  static GradedClass scalar(RingPtr ring, const Rational& value);
  static GradedClass monomial(RingPtr ring, int degree, std::size_t index,
                              const Rational& coeff = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const Rational& coeff(int degree, std::size_t index) const;
  void set_coeff(int degree, std::size_t index, const Rational& value);

  bool is_zero() const;
  bool operator==(const GradedClass& other) const;
  bool operator!=(const GradedClass& other) const { return !(*this == other); }

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<std::vector<Rational>> coeffs_;  // [degree][basis index]
};

GradedClass add(const GradedClass& a, const GradedClass& b);
GradedClass sub(const GradedClass& a, const GradedClass& b);
GradedClass mul(const GradedClass& a, const GradedClass& b);
GradedClass scale(const GradedClass& a, const Rational& r);

GradedClass operator+(const GradedClass& a, const GradedClass& b);
GradedClass operator-(const GradedClass& a, const GradedClass& b);
GradedClass operator*(const GradedClass& a, const GradedClass& b);
GradedClass operator*(const Rational& r, const GradedClass& a);

// Isolates the homogeneous degree-d piece (zero above the truncation).
GradedClass degree_part(const GradedClass& a, int d);

// Multiplicative inverse of a class with constant term exactly 1, by the
// truncated geometric series.  Throws std::invalid_argument otherwise.
GradedClass invert_unit(const GradedClass& a);

// Inverse of any class with a nonzero constant term.
GradedClass invert(const GradedClass& a);

GradedClass pow(const GradedClass& a, int n);  // n may be negative for units

// Coefficient of the point class in the top degree.  Only defined on the
// closed rings; throws std::domain_error on a bundle layer (push forward
// first).
Rational integrate(const GradedClass& a);

// Convenience generators.
GradedClass p3_h();
GradedClass g24_c1();
GradedClass g24_c2();
GradedClass fiber_class(const RingPtr& layer);
GradedClass lift_to_layer(const RingPtr& layer, const GradedClass& base_class);

}  // namespace lie4
