#include "lie4/lie4degrees.hpp"

#include <sstream>

namespace lie4 {

namespace {

GradedClass piece(const GradedClass& a, int k) {
  if (k < 0) return GradedClass::zero(a.ring());
  return degree_part(a, k);
}

// Power sum p_k = k! ch_k of a character.
GradedClass power_sum(const CharacterVector& v, int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return scale(v.component(k), f);
}

}  // namespace

std::string to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::C1: return "C1";
    case ComponentTag::C2: return "C2";
    case ComponentTag::C3: return "C3";
    case ComponentTag::C4: return "C4";
  }
  return "?";
}

// ----- P^3 side -----

Bundle tautological_sub_p3() {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  return from_chern(p3, 3, invert_unit(one + p3_h()));
}

GradedClass segre_G() {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  return invert_unit(pow(one - p3_h(), 4));
}

GradedClass segre_H_closed_form() {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  const GradedClass h = p3_h();
  return mul(pow(one + Rational(2) * h, 4), invert_unit(pow(one + h, 10)));
}

GradedClass segre_H_from_sym_square() {
  const Bundle u = tautological_sub_p3();
  return segre(twist(sym_square(u), dual(det(u))));
}

Bundle hom_quotient_end_u() {
  const Bundle u = tautological_sub_p3();
  const Bundle quotient = line_bundle(u.ring, p3_h());  // V4/U
  return hom(quotient, hom(u, u));
}

RingPtr flag_layer() {
  static const RingPtr layer = ChowRing::proj_bundle_layer(ChowRing::p3(), 3, "l");
  return layer;
}

GradedClass pushforward_S() {
  const RingPtr layer = flag_layer();
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(layer);
  const GradedClass l = fiber_class(layer);
  const GradedClass h = lift_to_layer(layer, p3_h());

  // c(M) = 1 + h - 2l for the line M = Hom(Lambda^2(U/L), L).
  const GradedClass s_M = invert_unit(one + h - Rational(2) * l);

  // c(Hom(L, U(-1))) = sum_j c_j(U(-1)) (1+l)^{3-j} with c(U(-1)) = (1-h)^4.
  const GradedClass c_u_twist =
      pow(GradedClass::one(p3) - p3_h(), 4);
  GradedClass c_factor = GradedClass::zero(layer);
  for (int j = 0; j <= 3; ++j) {
    c_factor += mul(lift_to_layer(layer, degree_part(c_u_twist, j)),
                    pow(one + l, 3 - j));
  }

  const GradedClass S = mul(s_M, c_factor);
  return projbundle_pushforward(S, tautological_sub_p3());
}

GradedClass pushforward_S_closed_form() {
  const RingPtr p3 = ChowRing::p3();
  const GradedClass one = GradedClass::one(p3);
  const GradedClass h = p3_h();
  const GradedClass three = GradedClass::scalar(p3, Rational(3));

  // e_z(U(-1)) = (1+z-zh)^4/(1+z) at z = 2/(1+h) collapses to
  // (3-h)^4 / ((1+h)^3 (3+h)).
  const GradedClass e =
      mul(pow(three - h, 4), invert(mul(pow(one + h, 3), three + h)));

  // p_*S = (e - 1)/2 + h/(1+h) e, the l^2 and l^3 extractions of S.
  return scale(e - one, Rational(1, 2)) + mul(mul(h, invert(one + h)), e);
}

Rational degree_c2_flag_route() {
  const RingPtr layer = flag_layer();
  const GradedClass l = fiber_class(layer);
  const GradedClass h = lift_to_layer(layer, p3_h());

  const Bundle u = tautological_sub_p3();
  const Bundle u_layer = from_chern(layer, 3, lift_to_layer(layer, u.total_chern));
  const Bundle end_u_layer = hom(u_layer, u_layer);
  const Bundle q_dual_layer = line_bundle(layer, -h);   // (V4/U)*
  const Bundle l_dual_layer = line_bundle(layer, l);    // L*
  const Bundle m_line = line_bundle(layer, h - Rational(2) * l);

  // [F] = [M] + [Q* (x) End U] - [Q* (x) L* (x) U]; the subtracted piece is
  // Hom(Q, Hom(L, U)).
  const CharacterVector ch_f = ch_sub(
      ch_add(chern_character(m_line),
             chern_character(tensor(q_dual_layer, end_u_layer))),
      chern_character(tensor(tensor(q_dual_layer, l_dual_layer), u_layer)));
  const Bundle f = bundle_from_character(ch_f);  // rank 7

  const GradedClass s5 = degree_part(segre(f), 5);
  return integrate(projbundle_pushforward(s5, u));
}

// ----- G(2,4) side -----

Bundle tautological_sub_g24() {
  const RingPtr g = ChowRing::g24();
  return from_chern(g, 2, GradedClass::one(g) - g24_c1() + g24_c2());
}

Bundle quotient_bundle_g24() {
  const RingPtr g = ChowRing::g24();
  return from_chern(g, 2, GradedClass::one(g) + g24_c1() + g24_c2());
}

Bundle sl_u_bundle() {
  const Bundle u = tautological_sub_g24();
  const Bundle end_u = hom(u, u);
  // End(U) minus its trivial summand, at the character level.
  const CharacterVector ch0 =
      ch_sub(chern_character(end_u),
             CharacterVector(GradedClass::one(u.ring)));
  return bundle_from_character(ch0);
}

Bundle r_bundle() {
  const Bundle u = tautological_sub_g24();
  // Tautological quotient: c(Q) = c(U)^{-1} exactly in this ring.
  const Bundle q = from_chern(u.ring, 2, invert_unit(u.total_chern));
  return dsum(dual(q), twist(u, det(u)));
}

// ----- degrees -----

namespace {

Rational degree_c1() {
  const GradedClass s_g = segre_G();
  const GradedClass s_h = segre_H_closed_form();
  Rational total(0);
  for (int i = 0; i <= 11; ++i) {
    const int j = 11 - i;
    total += binomial(11, static_cast<unsigned>(i)) *
             integrate(mul(piece(s_g, i - 3), piece(s_h, j - 5)));
  }
  return total;
}

Rational degree_c2() {
  const GradedClass ps = pushforward_S();
  const GradedClass factor = segre(hom_quotient_end_u());
  return integrate(degree_part(mul(factor, ps), 3));
}

Rational degree_c3() {
  const Bundle u = tautological_sub_p3();
  const CharacterVector ch_prod =
      ch_mul(chern_character(dual(u)), chern_character(exterior_square(dual(u))));
  const GradedClass p1 = power_sum(ch_prod, 1);
  const GradedClass p2 = power_sum(ch_prod, 2);
  const GradedClass p3c = power_sum(ch_prod, 3);
  const GradedClass s3 = scale(
      mul(p1, mul(p1, p1)) + Rational(3) * mul(p1, p2) + Rational(2) * p3c,
      Rational(1, 6));
  return integrate(s3);
}

Rational degree_c4() {
  const GradedClass s_q = segre(quotient_bundle_g24());
  const GradedClass s_sl = segre(sl_u_bundle());
  const GradedClass s_r = segre(r_bundle());
  Rational total(0);
  for (int i = 0; i <= 7; ++i) {
    for (int j = 0; i + j <= 7; ++j) {
      const GradedClass term =
          mul(piece(s_q, i - 1), mul(piece(s_sl, j - 2), piece(s_r, 7 - i - j)));
      total += binomial(static_cast<unsigned>(i + j), static_cast<unsigned>(i)) *
               integrate(term);
    }
  }
  return total;
}

void check(bool ok, const std::string& message, const DegreeReport& report) {
  if (!ok) throw CrossCheckError(message, report);
}

}  // namespace

Rational degree_component(ComponentTag tag) {
  DegreeReport empty;
  switch (tag) {
    case ComponentTag::C1: {
      const Rational d = degree_c1();
      check(segre_H_closed_form() == segre_H_from_sym_square(),
            "s(H): closed form and Sym^2 derivation disagree", empty);
      return d;
    }
    case ComponentTag::C2: {
      check(pushforward_S() == pushforward_S_closed_form(),
            "p_*S: expansion and closed form disagree", empty);
      const Rational d = degree_c2();
      check(d == degree_c2_flag_route(),
            "second component: factored route and flag route disagree", empty);
      return d;
    }
    case ComponentTag::C3: {
      const Rational d = degree_c3();
      check(Rational(d) == integrate(segre_piece(hom_quotient_end_u(), 3)),
            "s_3(E): power-sum formula and Segre class disagree", empty);
      return d;
    }
    case ComponentTag::C4: {
      const Rational d = degree_c4();
      const RingPtr g = ChowRing::g24();
      const GradedClass c_sl =
          GradedClass::one(g) + Rational(4) * g24_c2() - mul(g24_c1(), g24_c1());
      check(segre(sl_u_bundle()) == invert_unit(c_sl),
            "s(sl(U)): bundle construction and direct inversion disagree",
            empty);
      return d;
    }
  }
  throw std::logic_error("degree_component: bad tag");
}

DegreeReport degree_report() {
  DegreeReport report;
  report.degrees = {degree_component(ComponentTag::C1),
                    degree_component(ComponentTag::C2),
                    degree_component(ComponentTag::C3),
                    degree_component(ComponentTag::C4)};
  report.total = Rational(0);
  for (int t = 0; t < 4; ++t) {
    const Rational& d = report.degrees[t];
    if (!is_nonneg_integer(d) || d == 0) {
      throw CrossCheckError("degree of " +
                                to_string(static_cast<ComponentTag>(t)) +
                                " is not a positive integer: " +
                                rational_to_string(d),
                            report);
    }
    report.total += d;
  }

  const Bundle u = tautological_sub_p3();
  const Bundle e = hom_quotient_end_u();
  const CharacterVector ch_prod =
      ch_mul(chern_character(dual(u)), chern_character(exterior_square(dual(u))));
  report.intermediates.emplace_back("s(G)", segre_G());
  report.intermediates.emplace_back("s(H)", segre_H_closed_form());
  report.intermediates.emplace_back("p_*S", pushforward_S());
  report.intermediates.emplace_back("c(Hom(V4/U, End U))", e.total_chern);
  report.intermediates.emplace_back("s(Hom(V4/U, End U))", segre(e));
  report.intermediates.emplace_back("p1(E)", power_sum(ch_prod, 1));
  report.intermediates.emplace_back("p2(E)", power_sum(ch_prod, 2));
  report.intermediates.emplace_back("p3(E)", power_sum(ch_prod, 3));
  report.intermediates.emplace_back("s3(E)", segre_piece(e, 3));
  report.intermediates.emplace_back("s(Q)", segre(quotient_bundle_g24()));
  report.intermediates.emplace_back("c(sl(U))", sl_u_bundle().total_chern);
  report.intermediates.emplace_back("s(sl(U))", segre(sl_u_bundle()));
  report.intermediates.emplace_back("s(R)", segre(r_bundle()));

  for (int t = 0; t < 4; ++t) {
    if (report.degrees[t] != kReferenceDegrees[t]) {
      std::ostringstream os;
      os << to_string(static_cast<ComponentTag>(t)) << ": computed "
         << rational_to_string(report.degrees[t]) << ", reference "
         << kReferenceDegrees[t];
      report.reference_mismatches.push_back(os.str());
    }
  }
  if (report.total != kReferenceTotal) {
    std::ostringstream os;
    os << "total: computed " << rational_to_string(report.total)
       << ", reference " << kReferenceTotal;
    report.reference_mismatches.push_back(os.str());
  }
  if (!report.reference_mismatches.empty()) {
    std::string msg = "degree table deviates from the reference values: ";
    for (std::size_t i = 0; i < report.reference_mismatches.size(); ++i) {
      if (i) msg += "; ";
      msg += report.reference_mismatches[i];
    }
    throw CrossCheckError(msg, report);
  }
  return report;
}

}  // namespace lie4
