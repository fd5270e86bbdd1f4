#include "lie4/bundles.hpp"
#include "lie4/liealg.hpp"  // Rng

#include <doctest.h>

#include <stdexcept>

using namespace lie4;

namespace {

GradedClass random_unit_class(Rng& rng, const RingPtr& ring) {
  GradedClass out = GradedClass::one(ring);
  for (int d = 1; d <= ring->top_degree(); ++d) {
    for (std::size_t i = 0; i < ring->basis_size(d); ++i) {
      out.set_coeff(d, i, Rational(rng.next_int(-3, 3)));
    }
  }
  return out;
}

Bundle random_bundle(Rng& rng, const RingPtr& ring, int max_rank = 9) {
  const int rank = static_cast<int>(rng.next_int(0, max_rank));
  return from_chern(ring, rank, random_unit_class(rng, ring));
}

Bundle taut_u_p3() {
  const RingPtr p3 = ChowRing::p3();
  return from_chern(p3, 3, invert_unit(GradedClass::one(p3) + p3_h()));
}

}  // namespace

TEST_CASE("from_chern wraps and validates") {
  const RingPtr p3 = ChowRing::p3();
  const Bundle u = taut_u_p3();
  CHECK(u.rank == 3);
  CHECK(segre(u) == GradedClass::one(p3) + p3_h());  // s(U) = 1 + h

  CHECK(segre(trivial_bundle(p3, 5)) == GradedClass::one(p3));

  const RingPtr g = ChowRing::g24();
  const Bundle ustar = from_chern(g, 2, GradedClass::one(g) + g24_c1() + g24_c2());
  CHECK(ustar.total_chern.coeff(1, 0) == 1);

  CHECK_THROWS_AS(from_chern(p3, 2, p3_h()), std::invalid_argument);
  CHECK_THROWS_AS(from_chern(p3, -1, GradedClass::one(p3)), std::invalid_argument);
}

TEST_CASE("Segre classes on G(2,4)") {
  const RingPtr g = ChowRing::g24();
  const GradedClass one = GradedClass::one(g);
  const GradedClass c1 = g24_c1();
  const GradedClass c2 = g24_c2();

  // s(Q) for the bundle with c(Q) = 1 + c1 + c2
  const Bundle q = from_chern(g, 2, one + c1 + c2);
  GradedClass expected_q = one - c1 + mul(c1, c1) - c2;
  CHECK(segre(q) == expected_q);

  // sl(U): c = 1 + 4c2 - c1^2, s = 1 - 4c2 + c1^2 + 10 c2^2
  const Bundle u = from_chern(g, 2, one - c1 + c2);
  const CharacterVector sl_ch =
      ch_sub(chern_character(hom(u, u)), CharacterVector(one));
  const Bundle sl = bundle_from_character(sl_ch);
  CHECK(sl.rank == 3);
  CHECK(sl.total_chern == one + Rational(4) * c2 - mul(c1, c1));
  const GradedClass expected_sl =
      one - Rational(4) * c2 + mul(c1, c1) + Rational(10) * mul(c2, c2);
  CHECK(segre(sl) == expected_sl);
}

TEST_CASE("Chern characters on P3") {
  const Bundle u = taut_u_p3();
  const Bundle ustar = dual(u);

  // ch(U*) = 4 - e^{-h}: components 3, h, -h^2/2, h^3/6
  const CharacterVector ch_ustar = chern_character(ustar);
  CHECK(ch_ustar.rank() == 3);
  CHECK(ch_ustar.component(1).coeff(1, 0) == Rational(1));
  CHECK(ch_ustar.component(2).coeff(2, 0) == Rational(-1, 2));
  CHECK(ch_ustar.component(3).coeff(3, 0) == Rational(1, 6));

  // ch(Lambda^2 U*) = 6 - 4 e^{-h} + e^{-2h}
  const CharacterVector ch_l2 = chern_character(exterior_square(ustar));
  CHECK(ch_l2.rank() == 3);
  CHECK(ch_l2.component(1).coeff(1, 0) == Rational(2));
  CHECK(ch_l2.component(2).coeff(2, 0) == Rational(0));
  CHECK(ch_l2.component(3).coeff(3, 0) == Rational(-2, 3));

  CHECK(chern_character(trivial_bundle(u.ring, 7)) ==
        CharacterVector(GradedClass::scalar(u.ring, Rational(7))));
}

TEST_CASE("character product realizes the rank-9 bundle") {
  const Bundle u = taut_u_p3();
  const CharacterVector prod = ch_mul(chern_character(dual(u)),
                                      chern_character(exterior_square(dual(u))));
  const Bundle e = bundle_from_character(prod);
  CHECK(e.rank == 9);
  // power sums 9h, h^2, -15h^3
  CHECK(scale(prod.component(1), Rational(1)).coeff(1, 0) == 9);
  CHECK(scale(prod.component(2), Rational(2)).coeff(2, 0) == 1);
  CHECK(scale(prod.component(3), Rational(6)).coeff(3, 0) == -15);

  // constant character -> trivial bundle
  const CharacterVector c7(GradedClass::scalar(u.ring, Rational(7)));
  CHECK(bundle_from_character(c7) == trivial_bundle(u.ring, 7));

  // a fractional ch_0 cannot materialize
  const CharacterVector bad(GradedClass::scalar(u.ring, Rational(1, 2)));
  CHECK_THROWS_AS(bundle_from_character(bad), std::invalid_argument);
}

TEST_CASE("constructions: dual, dsum, twist, hom, det") {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  const GradedClass h = p3_h();
  const Bundle u = taut_u_p3();

  // End(U) (x) (V4/U)*: c = (1-h)^17 (1-2h)^{-4} = 1 - 9h + 40h^2 - 112h^3,
  // from the K-theory decomposition 17 Q* - 4 O - 4 Q*^2 of End(U) (x) Q*.
  const Bundle end_u_tw = tensor(hom(u, u), line_bundle(p3, -h));
  CHECK(end_u_tw.rank == 9);
  CHECK(end_u_tw.total_chern ==
        mul(pow(one - h, 17), invert_unit(pow(one - Rational(2) * h, 4))));
  CHECK(degree_part(end_u_tw.total_chern, 1) == Rational(-9) * h);
  CHECK(degree_part(end_u_tw.total_chern, 2) == Rational(40) * mul(h, h));
  CHECK(degree_part(end_u_tw.total_chern, 3) ==
        Rational(-112) * mul(h, mul(h, h)));

  CHECK(dsum(u, trivial_bundle(p3, 0)) == u);

  // det of the tautological bundle has c1 = -h
  CHECK(det(u).total_chern == one - h);

  // twisting by a higher-rank factor is rejected
  CHECK_THROWS_AS(twist(u, u), std::invalid_argument);
}

TEST_CASE("s(R) on G(2,4)") {
  const RingPtr g = ChowRing::g24();
  const GradedClass one = GradedClass::one(g);
  const GradedClass c1 = g24_c1();
  const GradedClass c2 = g24_c2();
  const Bundle u = from_chern(g, 2, one - c1 + c2);
  const Bundle q = from_chern(g, 2, invert_unit(u.total_chern));
  const Bundle r = dsum(dual(q), twist(u, det(u)));
  CHECK(r.rank == 4);
  const GradedClass expected = one + Rational(4) * c1 +
                               Rational(10) * mul(c1, c1) +
                               Rational(40) * mul(c1, c2) +
                               Rational(70) * mul(c2, c2);
  CHECK(segre(r) == expected);
}

TEST_CASE("adams2") {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass h = p3_h();
  const Bundle lh = line_bundle(p3, h);
  const Bundle l2h = line_bundle(p3, Rational(2) * h);
  CHECK(adams2(chern_character(lh)) == chern_character(l2h));

  const CharacterVector c5(GradedClass::scalar(p3, Rational(5)));
  CHECK(adams2(c5) == c5);

  // applying adams2 twice scales degree k by 4^k
  const CharacterVector v = chern_character(taut_u_p3());
  const CharacterVector twice = adams2(adams2(v));
  for (int k = 0; k <= 3; ++k) {
    Rational fourk(1);
    for (int i = 0; i < k; ++i) fourk *= 4;
    CHECK(twice.component(k) == scale(v.component(k), fourk));
  }
}

TEST_CASE("exterior and symmetric squares") {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  const GradedClass h = p3_h();
  const Bundle u = taut_u_p3();

  CHECK(exterior_square(dual(u)).rank == 3);
  const Bundle ext_line = exterior_square(line_bundle(p3, h));
  CHECK(ext_line.rank == 0);
  CHECK(ext_line.total_chern == one);

  // s(Sym^2 U (x) det(U)*) = (1+2h)^4 (1+h)^{-10}
  const Bundle sym_tw = twist(sym_square(u), dual(det(u)));
  CHECK(sym_tw.rank == 6);
  const GradedClass expected =
      mul(pow(one + Rational(2) * h, 4), invert_unit(pow(one + h, 10)));
  CHECK(segre(sym_tw) == expected);
}

TEST_CASE("projective bundle push-forward rules") {
  const RingPtr p3 = ChowRing::p3();
  const RingPtr layer = ChowRing::proj_bundle_layer(p3, 3, "l");
  const Bundle u = taut_u_p3();
  const GradedClass l = fiber_class(layer);
  const GradedClass h = lift_to_layer(layer, p3_h());

  CHECK(projbundle_pushforward(pow(l, 2), u) == GradedClass::one(p3));  // s_0
  CHECK(projbundle_pushforward(l, u).is_zero());                        // k <= e-2
  CHECK(projbundle_pushforward(GradedClass::one(layer), u).is_zero());
  CHECK(projbundle_pushforward(pow(l, 3), u) == p3_h());                // s_1(U)

  // degree of the incidence flag variety: p_*((l+h)^5) integrates to 20
  const GradedClass flag_deg = projbundle_pushforward(pow(l + h, 5), u);
  CHECK(integrate(flag_deg) == 20);

  // mismatched layer and bundle are rejected
  const Bundle wrong_rank = from_chern(p3, 2, u.total_chern);
  CHECK_THROWS_AS(projbundle_pushforward(l, wrong_rank), std::invalid_argument);
  CHECK_THROWS_AS(projbundle_pushforward(p3_h(), u), std::invalid_argument);
}

TEST_CASE("property: character round-trip, 200 random bundles") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    for (const RingPtr& ring : {ChowRing::p3(), ChowRing::g24()}) {
      const Bundle e = random_bundle(rng, ring);
      CHECK(bundle_from_character(chern_character(e)) == e);
    }
  }
}

TEST_CASE("property: tensor multiplicativity of the character") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    for (const RingPtr& ring : {ChowRing::p3(), ChowRing::g24()}) {
      const Bundle e = random_bundle(rng, ring, 5);
      const Bundle f = random_bundle(rng, ring, 5);
      CHECK(chern_character(tensor(e, f)) ==
            ch_mul(chern_character(e), chern_character(f)));
    }
  }
}

TEST_CASE("property: Whitney sum") {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    for (const RingPtr& ring : {ChowRing::p3(), ChowRing::g24()}) {
      const Bundle e = random_bundle(rng, ring);
      const Bundle f = random_bundle(rng, ring);
      const Bundle s = dsum(e, f);
      CHECK(s.total_chern == mul(e.total_chern, f.total_chern));
      CHECK(segre(s) == mul(segre(e), segre(f)));
      CHECK(chern_character(s) ==
            ch_add(chern_character(e), chern_character(f)));
    }
  }
}

TEST_CASE("property: exterior plus symmetric equals tensor square") {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    for (const RingPtr& ring : {ChowRing::p3(), ChowRing::g24()}) {
      const Bundle e = random_bundle(rng, ring, 6);
      const Bundle lhs = dsum(exterior_square(e), sym_square(e));
      CHECK(chern_character(lhs) == chern_character(tensor(e, e)));
      CHECK(exterior_square(e).rank == e.rank * (e.rank - 1) / 2);
      CHECK(sym_square(e).rank == e.rank * (e.rank + 1) / 2);
    }
  }
}

TEST_CASE("property: push-forward is base-linear") {
  Rng rng(11);
  const RingPtr p3 = ChowRing::p3();
  const RingPtr layer = ChowRing::proj_bundle_layer(p3, 3, "l");
  const Bundle u = taut_u_p3();
  for (int t = 0; t < 200; ++t) {
    // random layer class and random base multiplier
    GradedClass a = GradedClass::zero(layer);
    for (int d = 0; d <= layer->top_degree(); ++d) {
      for (std::size_t i = 0; i < layer->basis_size(d); ++i) {
        a.set_coeff(d, i, Rational(rng.next_int(-3, 3)));
      }
    }
    GradedClass b = GradedClass::zero(p3);
    for (int d = 0; d <= 3; ++d) b.set_coeff(d, 0, Rational(rng.next_int(-3, 3)));
    CHECK(projbundle_pushforward(mul(lift_to_layer(layer, b), a), u) ==
          mul(b, projbundle_pushforward(a, u)));
  }
}

TEST_CASE("rank bookkeeping") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const Bundle e = random_bundle(rng, ChowRing::p3(), 4);
    const Bundle f = random_bundle(rng, ChowRing::p3(), 4);
    CHECK(hom(e, f).rank == e.rank * f.rank);
    CHECK(tensor(e, f).rank == e.rank * f.rank);
    CHECK(dual(e).rank == e.rank);
  }
}
