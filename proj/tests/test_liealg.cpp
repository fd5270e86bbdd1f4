#include "lie4/liealg.hpp"

#include <doctest.h>

using namespace lie4;

namespace {

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

StructureConstants sl2() {
  StructureConstants sc(3);
  sc.set_coeff(0, 1, 1, Rational(2));    // [h,e] = 2e
  sc.set_coeff(0, 2, 2, Rational(-2));   // [h,f] = -2f
  sc.set_coeff(1, 2, 0, Rational(1));    // [e,f] = h
  return sc;
}

StructureConstants heisenberg() {
  StructureConstants sc(3);
  sc.set_coeff(0, 1, 2, Rational(1));    // [e1,e2] = e3
  return sc;
}

StructureConstants gl2() {
  StructureConstants sc(4);
  sc.set_coeff(0, 1, 1, Rational(2));
  sc.set_coeff(0, 2, 2, Rational(-2));
  sc.set_coeff(1, 2, 0, Rational(1));
  return sc;  // e4 central
}

StructureConstants two_aff1() {
  StructureConstants sc(4);
  sc.set_coeff(0, 2, 0, Rational(-1));   // [x1, y1] = y1 with x1 = e3, y1 = e1
  sc.set_coeff(1, 3, 1, Rational(-1));   // [x2, y2] = y2 with x2 = e4, y2 = e2
  return sc;
}

Mat zero3() { return Mat(3, Vec(3, Rational(0))); }

}  // namespace

TEST_CASE("jacobi defect on closed-form examples") {
  StructureConstants abelian(4);
  CHECK(all_zero(jacobi_defect(abelian)));
  CHECK(jacobi_defect(abelian).size() == 16);

  CHECK(all_zero(jacobi_defect(sl2())));

  // [e1,e2] = e3, [e1,e3] = e3: the cyclic sum evaluates to
  // [e3,e3] + [0,e1] + [-e3,e2] = 0, so this bracket is a Lie bracket.
  StructureConstants solvable(3);
  solvable.set_coeff(0, 1, 2, Rational(1));
  solvable.set_coeff(0, 2, 2, Rational(1));
  CHECK(all_zero(jacobi_defect(solvable)));

  // [e1,e2] = e1, [e1,e3] = e2: the cyclic sum on (e1,e2,e3) is
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e1,e3] + 0 + 0 = e2.
  StructureConstants broken(3);
  broken.set_coeff(0, 1, 0, Rational(1));
  broken.set_coeff(0, 2, 1, Rational(1));
  const auto defect = jacobi_defect(broken);
  CHECK(defect.size() == 3);
  CHECK(defect[0] == 0);
  CHECK(defect[1] == 1);
  CHECK(defect[2] == 0);
  CHECK(!jacobi_holds(broken));

  // dimension 2 has no triples: always a Lie bracket
  StructureConstants aff1(2);
  aff1.set_coeff(0, 1, 1, Rational(1));
  CHECK(jacobi_defect(aff1).empty());
  CHECK(jacobi_holds(aff1));
}

TEST_CASE("dim-3 decomposition of the standard algebras") {
  const Rational vol(1);

  const auto d_sl2 = decompose_dim3(sl2(), vol);
  CHECK(all_zero(d_sl2.u));
  CHECK(rank(d_sl2.q) == 3);

  const auto d_he3 = decompose_dim3(heisenberg(), vol);
  CHECK(all_zero(d_he3.u));
  CHECK(rank(d_he3.q) == 1);

  const auto d_ab = decompose_dim3(StructureConstants(3), vol);
  CHECK(all_zero(d_ab.u));
  CHECK(rank(d_ab.q) == 0);

  CHECK_THROWS_AS(decompose_dim3(gl2(), vol), std::invalid_argument);
  CHECK_THROWS_AS(decompose_dim3(sl2(), Rational(0)), std::invalid_argument);
}

TEST_CASE("dim-3 decomposition round-trips") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    StructureConstants sc(3);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          sc.set_coeff(i, j, k, Rational(rng.next_int(-5, 5)));
        }
      }
    }
    const Rational vol(rng.next_int(1, 4));
    CHECK(assemble_dim3(decompose_dim3(sc, vol), vol) == sc);
  }
}

TEST_CASE("dim-3: jacobi vanishes iff the contraction of q with u vanishes") {
  Rng rng(32);
  const Rational vol(1);
  int zero_defect_seen = 0, nonzero_defect_seen = 0;
  for (int t = 0; t < 600; ++t) {
    Dim3Decomposition d;
    d.q = zero3();
    d.u = Vec(3, Rational(0));
    const int mode = t % 3;
    if (mode == 0) {
      // fully random
      for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) {
          d.q[a][b] = d.q[b][a] = Rational(rng.next_int(-4, 4));
        }
        d.u[a] = Rational(rng.next_int(-4, 4));
      }
    } else if (mode == 1) {
      // u = 0, arbitrary q: always a Lie algebra
      for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) {
          d.q[a][b] = d.q[b][a] = Rational(rng.next_int(-4, 4));
        }
      }
    } else {
      // u != 0 and q degenerate with u in its kernel
      while (all_zero(d.u)) {
        for (int a = 0; a < 3; ++a) d.u[a] = Rational(rng.next_int(-4, 4));
      }
      const auto kern = kernel_basis(Mat{d.u});
      REQUIRE(kern.size() == 2);
      const Rational a(rng.next_int(-3, 3)), b(rng.next_int(-3, 3)),
          c(rng.next_int(-3, 3));
      for (int r = 0; r < 3; ++r) {
        for (int s = 0; s < 3; ++s) {
          d.q[r][s] = a * kern[0][r] * kern[0][s] + c * kern[1][r] * kern[1][s] +
                      b * (kern[0][r] * kern[1][s] + kern[1][r] * kern[0][s]);
        }
      }
    }
    const StructureConstants sc = assemble_dim3(d, vol);
    const bool defect_zero = jacobi_holds(sc);
    const bool contraction_zero = all_zero(contract_q_u(d));
    CHECK(defect_zero == contraction_zero);
    (defect_zero ? zero_defect_seen : nonzero_defect_seen)++;
  }
  // both directions of the equivalence were exercised
  CHECK(zero_defect_seen >= 200);
  CHECK(nonzero_defect_seen >= 100);
}

TEST_CASE("derived algebra dimensions") {
  CHECK(derived_algebra(StructureConstants(4)).first == 0);
  CHECK(derived_algebra(gl2()).first == 3);
  const auto c4 = sample_generic(Component::C4, 5);
  REQUIRE(c4.has_value());
  CHECK(derived_algebra(*c4).first == 2);
}

TEST_CASE("classification of the model algebras") {
  const LieProfile p_gl2 = classify(gl2());
  CHECK(p_gl2.jacobi_ok);
  CHECK(p_gl2.derived_type == DerivedType::Sl2);
  CHECK(p_gl2.component == Component::C1);
  CHECK(p_gl2.center_dim == 1);

  const LieProfile p_2aff = classify(two_aff1());
  CHECK(p_2aff.jacobi_ok);
  CHECK(p_2aff.derived_dim == 2);
  CHECK(p_2aff.derived_type == DerivedType::Ab2);
  CHECK(p_2aff.component == Component::C4);

  const LieProfile p_ab = classify(StructureConstants(4));
  CHECK(p_ab.is_abelian);
  CHECK(p_ab.component == Component::Boundary);
  CHECK(p_ab.derived_type == DerivedType::Zero);

  StructureConstants broken(4);
  broken.set_coeff(0, 1, 0, Rational(1));
  broken.set_coeff(0, 2, 1, Rational(1));
  CHECK(classify(broken).component == Component::NotLie);

  // a generic heisenberg-derived sample
  const auto c2 = sample_generic(Component::C2, 3);
  REQUIRE(c2.has_value());
  const LieProfile p_c2 = classify(*c2);
  CHECK(p_c2.derived_type == DerivedType::He3);
  CHECK(p_c2.component == Component::C2);

  // dimension 3 inputs never get a component tag; sl2 is its own derived
  // algebra while the heisenberg algebra derives to its center
  CHECK(classify(sl2()).component == Component::Boundary);
  CHECK(classify(sl2()).derived_type == DerivedType::Sl2);
  CHECK(classify(heisenberg()).derived_dim == 1);
  CHECK(classify(heisenberg()).derived_type == DerivedType::Ab1);

  // dimension 2: aff1 has a one-dimensional derived algebra
  StructureConstants aff1(2);
  aff1.set_coeff(0, 1, 1, Rational(1));
  const LieProfile p_aff1 = classify(aff1);
  CHECK(p_aff1.jacobi_ok);
  CHECK(p_aff1.derived_dim == 1);
  CHECK(p_aff1.derived_type == DerivedType::Ab1);
  CHECK(p_aff1.component == Component::Boundary);
}

TEST_CASE("explicit boundary points of the parametrized families") {
  // sigma = 0 in the first family: everything brackets to zero
  const StructureConstants c1_sigma0 = make_c1(zero3(), Rational(3), {Rational(1), Rational(0), Rational(2)});
  CHECK(jacobi_holds(c1_sigma0));
  CHECK(classify(c1_sigma0).is_abelian);

  // Omega = 0, theta = 0 in the second family
  const StructureConstants c2_zero = make_c2(Rational(0), zero3());
  CHECK(classify(c2_zero).is_abelian);

  // theta = 0 in the third family
  const StructureConstants c3_zero = make_c3(zero3());
  CHECK(classify(c3_zero).is_abelian);

  // pure-trace tau in the fourth family still satisfies Jacobi
  Mat m(2, Vec(2, Rational(0)));
  const StructureConstants c4_trace =
      make_c4(Rational(1), {Rational(1), Rational(1)}, m,
              {Rational(2), Rational(3)}, {Rational(1), Rational(0)});
  CHECK(jacobi_holds(c4_trace));
  CHECK(classify(c4_trace).component == Component::Boundary);
}

TEST_CASE("samplers: jacobi always vanishes, 200 seeds per component") {
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      CHECK(all_zero(jacobi_defect(sample_component(tag, seed))));
    }
  }
}

TEST_CASE("samplers: generic draws classify to their component, 200 seeds") {
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto sc = sample_generic(tag, seed);
      REQUIRE(sc.has_value());
      CHECK(classify(*sc).component == tag);
    }
  }
}

TEST_CASE("samplers are deterministic in the seed") {
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    CHECK(sample_component(tag, 42) == sample_component(tag, 42));
  }
}

TEST_CASE("classification is invariant under 50 basis changes per component") {
  Rng rng(321);
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    const auto sc = sample_generic(tag, 17);
    REQUIRE(sc.has_value());
    const LieProfile base = classify(*sc);
    for (int t = 0; t < 50; ++t) {
      const Mat g = random_invertible(rng, 4);
      const LieProfile moved = classify(sc->change_basis(g));
      CHECK(moved.jacobi_ok == base.jacobi_ok);
      CHECK(moved.derived_dim == base.derived_dim);
      CHECK(moved.derived_type == base.derived_type);
      CHECK(moved.component == base.component);
      CHECK(moved.center_dim == base.center_dim);
    }
  }
}

TEST_CASE("scaling preserves jacobi and the component tag") {
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    const auto sc = sample_generic(tag, 7);
    REQUIRE(sc.has_value());
    for (const Rational& lambda : {Rational(2), Rational(-1), Rational(5, 3)}) {
      const StructureConstants scaled = sc->scaled(lambda);
      CHECK(jacobi_holds(scaled));
      CHECK(classify(scaled).component == tag);
    }
  }
}

TEST_CASE("derived type of every sampler output is a listed possibility") {
  for (const Component tag :
       {Component::C1, Component::C2, Component::C3, Component::C4}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DerivedType t = classify(sample_component(tag, seed)).derived_type;
      CHECK(t != DerivedType::Other);
    }
  }
}

TEST_CASE("parameter counts of the birational models") {
  // base choices plus fiber directions add up to the component dimension 11
  CHECK(3 + (4 - 1) + (6 - 1) == 11);  // hyperplane, P(G) and P(H) fibers
  CHECK(5 + (7 - 1) == 11);            // flag and P(F) fiber
  CHECK(3 + (9 - 1) == 11);            // hyperplane and P(E) fiber
  CHECK(4 + 1 + 2 + (5 - 1) == 11);    // G(2,4), Segre factors, P(P) fiber
}
