#include "lie4/bundles.hpp"

#include <stdexcept>

namespace lie4 {

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Power sums p_1..p_top from the Chern classes via Newton's identities:
//   p_k = sum_{m=1}^{k-1} (-1)^{m-1} c_m p_{k-m} + (-1)^{k-1} k c_k.
std::vector<GradedClass> power_sums(const Bundle& E) {
  const int top = E.ring->top_degree();
  std::vector<GradedClass> c(top + 1, GradedClass::zero(E.ring));
  for (int k = 1; k <= top; ++k) c[k] = degree_part(E.total_chern, k);
  std::vector<GradedClass> p(top + 1, GradedClass::zero(E.ring));
  for (int k = 1; k <= top; ++k) {
    GradedClass acc = GradedClass::zero(E.ring);
    for (int m = 1; m < k; ++m) {
      GradedClass term = mul(c[m], p[k - m]);
      acc += (m % 2 == 1) ? term : -term;
    }
    GradedClass tail = scale(c[k], Rational(k));
    acc += (k % 2 == 1) ? tail : -tail;
    p[k] = acc;
  }
  return p;
}

}  // namespace

CharacterVector ch_add(const CharacterVector& a, const CharacterVector& b) {
  return CharacterVector(add(a.as_class(), b.as_class()));
}

CharacterVector ch_sub(const CharacterVector& a, const CharacterVector& b) {
  return CharacterVector(sub(a.as_class(), b.as_class()));
}

CharacterVector ch_mul(const CharacterVector& a, const CharacterVector& b) {
  return CharacterVector(mul(a.as_class(), b.as_class()));
}

CharacterVector ch_scale(const CharacterVector& a, const Rational& r) {
  return CharacterVector(scale(a.as_class(), r));
}

CharacterVector adams2(const CharacterVector& v) {
  GradedClass out = GradedClass::zero(v.ring());
  Rational twok(1);
  for (int k = 0; k <= v.ring()->top_degree(); ++k) {
    out += scale(v.component(k), twok);
    twok *= 2;
  }
  return CharacterVector(out);
}

CharacterVector ch_dual(const CharacterVector& v) {
  GradedClass out = GradedClass::zero(v.ring());
  for (int k = 0; k <= v.ring()->top_degree(); ++k) {
    GradedClass piece = v.component(k);
    out += (k % 2 == 0) ? piece : -piece;
  }
  return CharacterVector(out);
}

Bundle from_chern(RingPtr ring, int rank, GradedClass total_chern) {
  if (rank < 0) throw std::invalid_argument("from_chern: negative rank");
  if (total_chern.coeff(0, 0) != 1)
    throw std::invalid_argument("from_chern: constant term of c(E) is not 1");
  if (!ring->same_ring(*total_chern.ring()))
    throw std::invalid_argument("from_chern: ring mismatch");
  return Bundle{std::move(ring), rank, std::move(total_chern)};
}

Bundle trivial_bundle(RingPtr ring, int rank) {
  GradedClass one = GradedClass::one(ring);
  return from_chern(std::move(ring), rank, std::move(one));
}

Bundle line_bundle(RingPtr ring, const GradedClass& c1) {
  return from_chern(ring, 1, add(GradedClass::one(ring), c1));
}

GradedClass segre(const Bundle& E) { return invert_unit(E.total_chern); }

GradedClass segre_piece(const Bundle& E, int k) {
  if (k < 0) return GradedClass::zero(E.ring);
  return degree_part(segre(E), k);
}

CharacterVector chern_character(const Bundle& E) {
  const auto p = power_sums(E);
  GradedClass out = GradedClass::scalar(E.ring, Rational(E.rank));
  for (int k = 1; k <= E.ring->top_degree(); ++k) {
    out += scale(p[k], 1 / factorial(k));
  }
  return CharacterVector(out);
}

Bundle bundle_from_character(const CharacterVector& v) {
  const Rational r0 = v.rank();
  if (!is_nonneg_integer(r0))
    throw std::invalid_argument(
        "bundle_from_character: ch_0 is not a nonnegative integer");
  const RingPtr& ring = v.ring();
  const int top = ring->top_degree();
  std::vector<GradedClass> p(top + 1, GradedClass::zero(ring));
  for (int k = 1; k <= top; ++k) p[k] = scale(v.component(k), factorial(k));
  // Invert Newton: c_k = (-1)^{k-1} (p_k - sum_{m<k} (-1)^{m-1} c_m p_{k-m}) / k.
  std::vector<GradedClass> c(top + 1, GradedClass::zero(ring));
  GradedClass total = GradedClass::one(ring);
  for (int k = 1; k <= top; ++k) {
    GradedClass acc = p[k];
    for (int m = 1; m < k; ++m) {
      GradedClass term = mul(c[m], p[k - m]);
      acc -= (m % 2 == 1) ? term : -term;
    }
    Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    c[k] = scale(acc, sign / Rational(k));
    total += c[k];
  }
  return from_chern(ring, static_cast<int>(numerator(r0)), total);
}

Bundle dual(const Bundle& E) {
  return bundle_from_character(ch_dual(chern_character(E)));
}

Bundle dsum(const Bundle& E, const Bundle& F) {
  return from_chern(E.ring, E.rank + F.rank, mul(E.total_chern, F.total_chern));
}

Bundle tensor(const Bundle& E, const Bundle& F) {
  return bundle_from_character(
      ch_mul(chern_character(E), chern_character(F)));
}

Bundle hom(const Bundle& E, const Bundle& F) { return tensor(dual(E), F); }

Bundle det(const Bundle& E) {
  return line_bundle(E.ring, degree_part(E.total_chern, 1));
}

Bundle twist(const Bundle& E, const Bundle& line) {
  if (line.rank != 1)
    throw std::invalid_argument("twist: twisting factor must have rank 1");
  return tensor(E, line);
}

Bundle exterior_square(const Bundle& E) {
  CharacterVector ch = chern_character(E);
  CharacterVector out =
      ch_scale(ch_sub(ch_mul(ch, ch), adams2(ch)), Rational(1, 2));
  return bundle_from_character(out);
}

Bundle sym_square(const Bundle& E) {
  CharacterVector ch = chern_character(E);
  CharacterVector out =
      ch_scale(ch_add(ch_mul(ch, ch), adams2(ch)), Rational(1, 2));
  return bundle_from_character(out);
}

GradedClass projbundle_pushforward(const GradedClass& a, const Bundle& E) {
  const RingPtr& layer = a.ring();
  if (layer->kind() != ChowRing::Kind::ProjBundleLayer)
    throw std::invalid_argument(
        "projbundle_pushforward: class does not live on a bundle layer");
  if (!layer->base()->same_ring(*E.ring))
    throw std::invalid_argument(
        "projbundle_pushforward: base ring does not match the bundle");
  if (layer->fiber_bundle_rank() != E.rank)
    throw std::invalid_argument(
        "projbundle_pushforward: fiber rank does not match the bundle");
  const GradedClass s = segre(E);
  const int e = E.rank;
  GradedClass out = GradedClass::zero(E.ring);
  for (int d = 0; d <= layer->top_degree(); ++d) {
    for (std::size_t i = 0; i < layer->basis_size(d); ++i) {
      const Rational& coeff = a.coeff(d, i);
      if (coeff == 0) continue;
      auto [k, bi] = layer->layer_decompose(d, i);
      const int sdeg = k - e + 1;
      if (sdeg < 0 || sdeg > E.ring->top_degree()) continue;
      GradedClass base_monomial =
          GradedClass::monomial(E.ring, d - k, bi, coeff);
      out += mul(degree_part(s, sdeg), base_monomial);
    }
  }
  return out;
}

}  // namespace lie4
