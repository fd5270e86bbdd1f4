#pragma once

#include "lie4/linalg.hpp"
#include "lie4/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lie4 {

// Deterministic generator (splitmix64).  The samplers take a seed and build
// their own generator from it, so identical seeds give identical output on
// every platform; no hidden state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Integer in [lo, hi], inclusive.
  long long next_int(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

// An exact skew tensor c_{ij}^k on an n-dimensional space, 2 <= n <= 4.
// Only i < j is stored; [e_j, e_i] = -[e_i, e_j] holds by construction.
class StructureConstants {
 public:
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }

  static std::size_t pair_count(int dim) {
    return static_cast<std::size_t>(dim) * (dim - 1) / 2;
  }
  static std::size_t pair_index(int i, int j, int dim);

  const Rational& coeff(int i, int j, int k) const;  // requires i < j
  void set_coeff(int i, int j, int k, const Rational& value);

  // [e_i, e_j] for arbitrary i, j (signed lookup; zero when i == j).
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  // Structure constants of the conjugated bracket [x,y]' = g^{-1}[gx, gy];
  // g must be invertible.
  StructureConstants change_basis(const Mat& g) const;

  StructureConstants scaled(const Rational& lambda) const;

  bool operator==(const StructureConstants& other) const {
    return dim_ == other.dim_ && c_ == other.c_;
  }

 private:
  int dim_;
  std::vector<Rational> c_;  // [pair][k]
};

enum class DerivedType { Zero, Ab1, Ab2, Ab3, He3, Sl2, Other };
enum class Component { C1, C2, C3, C4, Boundary, NotLie };

std::string to_string(DerivedType t);
std::string to_string(Component c);

struct LieProfile {
  bool jacobi_ok = false;
  int derived_dim = 0;
  DerivedType derived_type = DerivedType::Zero;
  Component component = Component::Boundary;
  bool is_abelian = false;
  int center_dim = 0;
};

// The cyclic sums [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for all
// triples i < j < k, flattened; n * C(n,3) rationals.  All zero iff the
// bracket is a Lie bracket.
std::vector<Rational> jacobi_defect(const StructureConstants& sc);
bool jacobi_holds(const StructureConstants& sc);

// Splitting of a 3-dimensional skew tensor into a symmetric matrix q and a
// covector u under the identification induced by the volume form
// vol(e1,e2,e3) = volume.  Jacobi holds iff q u = 0.
struct Dim3Decomposition {
  Mat q;  // 3x3 symmetric
  Vec u;  // 3 entries
};

Dim3Decomposition decompose_dim3(const StructureConstants& sc,
                                 const Rational& volume);
StructureConstants assemble_dim3(const Dim3Decomposition& d,
                                 const Rational& volume);
Vec contract_q_u(const Dim3Decomposition& d);

// Dimension and reduced basis of the span of all bracket values.
std::pair<int, std::vector<Vec>> derived_algebra(const StructureConstants& sc);

// Full profile: Jacobi, derived type (exact rank tests: Killing rank 3 for
// sl2, two-step nilpotency for he3), component tag for dimension-4 generic
// points, "boundary" otherwise.
LieProfile classify(const StructureConstants& sc);

// ----- explicit builders for the four parametrized families -----
// These emit structure constants in the standard basis with the relevant
// subspaces coordinate-aligned; every output satisfies Jacobi identically.

// gl2-type family: U = <e1,e2,e3>, symmetric q on U, p|_U = lambda id,
// p(e4) = w in U.
StructureConstants make_c1(const Mat& q, const Rational& lambda, const Vec& w);

// Heisenberg-derived family: L = <e1>, U = <e1,e2,e3>, [e2,e3] = rho e1,
// ad(e4)|_U = B where B preserves <e1> and B_11 = B_22 + B_33.
StructureConstants make_c2(const Rational& rho, const Mat& B);

// Abelian-hyperplane family: U = <e1,e2,e3> abelian, ad(e4)|_U = A.
StructureConstants make_c3(const Mat& A);

// Two-dimensional abelian derived family: U = <e1,e2>,
// ad(e3)|_U = t phi3 m + s3 I, ad(e4)|_U = t phi4 m + s4 I with m traceless,
// [e3,e4] = w in U.
StructureConstants make_c4(const Rational& t, const Vec& phi, const Mat& m,
                           const Vec& s, const Vec& w);

// ----- seeded samplers -----
// Single draw from the family; always Jacobi, not necessarily generic.
StructureConstants sample_c1(std::uint64_t seed);
StructureConstants sample_c2(std::uint64_t seed);
StructureConstants sample_c3(std::uint64_t seed);
StructureConstants sample_c4(std::uint64_t seed);

StructureConstants sample_component(Component tag, std::uint64_t seed);

// Re-draws (advancing the same generator) until the sample classifies to its
// component; nullopt when the budget is exhausted.
std::optional<StructureConstants> sample_generic(Component tag,
                                                 std::uint64_t seed,
                                                 int max_attempts = 32);

// Random invertible rational matrix with small integer entries.
Mat random_invertible(Rng& rng, int n);

}  // namespace lie4
