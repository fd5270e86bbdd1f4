#pragma once

#include "lie4/gradedring.hpp"

namespace lie4 {

// A formal vector bundle over a ChowRing: a nonnegative rank together with a
// total Chern class whose constant term is 1.  No rank-based vanishing is
// enforced beyond ring truncation, so K-theoretic differences can be carried
// through intermediate steps.
struct Bundle {
  RingPtr ring;
  int rank = 0;
  GradedClass total_chern;

  bool operator==(const Bundle& other) const {
    return rank == other.rank && total_chern == other.total_chern;
  }
};

// Chern character: ch_0 is the rank as a rational, ch_k the homogeneous
// degree-k piece.  Stored as a single graded class whose degree-k part is
// ch_k.  Virtual ranks (negative, fractional) are allowed here; a Bundle is
// only materialized from a character with a nonnegative integer ch_0.
class CharacterVector {
 public:
  explicit CharacterVector(GradedClass data) : data_(std::move(data)) {}

  const RingPtr& ring() const { return data_.ring(); }
  const GradedClass& as_class() const { return data_; }
  GradedClass component(int k) const { return degree_part(data_, k); }
  Rational rank() const { return data_.coeff(0, 0); }

  bool operator==(const CharacterVector& o) const { return data_ == o.data_; }

 private:
  GradedClass data_;
};

CharacterVector ch_add(const CharacterVector& a, const CharacterVector& b);
CharacterVector ch_sub(const CharacterVector& a, const CharacterVector& b);
CharacterVector ch_mul(const CharacterVector& a, const CharacterVector& b);
CharacterVector ch_scale(const CharacterVector& a, const Rational& r);

// Second Adams operation: multiplies the degree-k component by 2^k.
CharacterVector adams2(const CharacterVector& v);

// Duality at the character level: negates odd components.
CharacterVector ch_dual(const CharacterVector& v);

// Wraps (ring, rank, total Chern class); the constant term must be 1.
Bundle from_chern(RingPtr ring, int rank, GradedClass total_chern);

Bundle trivial_bundle(RingPtr ring, int rank);
Bundle line_bundle(RingPtr ring, const GradedClass& c1);

// Total Segre class: the formal inverse of the total Chern class.
GradedClass segre(const Bundle& E);

// Degree-k Segre class of E as a homogeneous class; zero for k < 0, which is
// what makes the multinomial sums below safe on their full index range.
GradedClass segre_piece(const Bundle& E, int k);

// Chern classes -> power sums by Newton's identities, then ch_k = p_k / k!.
CharacterVector chern_character(const Bundle& E);

// Inverse dictionary; requires ch_0 to be a nonnegative integer.
Bundle bundle_from_character(const CharacterVector& v);

Bundle dual(const Bundle& E);
Bundle dsum(const Bundle& E, const Bundle& F);
Bundle tensor(const Bundle& E, const Bundle& F);
Bundle hom(const Bundle& E, const Bundle& F);
Bundle det(const Bundle& E);
Bundle twist(const Bundle& E, const Bundle& line);  // line must have rank 1

// ch(Lambda^2 E) = (ch(E)^2 - psi^2 ch(E)) / 2, and with + for Sym^2.
Bundle exterior_square(const Bundle& E);
Bundle sym_square(const Bundle& E);

// Push-forward from a projective bundle layer: a is a polynomial in the
// fiber class xi with base coefficients; each xi^k is replaced by
// s_{k-e+1}(E) (zero for k <= e-2), e = rank of E.  The layer must sit over
// E's ring with matching fiber rank.
GradedClass projbundle_pushforward(const GradedClass& a, const Bundle& E);

}  // namespace lie4
