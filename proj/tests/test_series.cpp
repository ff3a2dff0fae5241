#include <doctest.h>

#include <stdexcept>

#include <random>

#include "tes/series.hpp"

using namespace tes;

namespace {

MonoidElement key(const char* expr) { return MonoidElement{OperadId::Dup, parse_tree(expr), 0}; }
MonoidElement as_key(int n) { return MonoidElement{OperadId::As, n, 0}; }

GradedSeries dup_diffeo(int trunc, std::vector<std::pair<const char*, RingValue>> terms) {
  GradedSeries s = identity_diffeo(OperadId::Dup, trunc);
  for (auto& [expr, c] : terms) s.set_coeff(key(expr), c);
  return s;
}

}  // namespace

TEST_CASE("monoid multiplication examples") {
  // (x^e + c x^vtx)^2 in the over monoid
  GradedSeries f = unit_series(carrier_over_monoid(), 2);
  RingValue c = RingValue::variable("c");
  f.set_coeff(key("v"), c);
  GradedSeries sq = mul_monoid(f, f);
  CHECK(sq.coeff(MonoidElement::neutral(OperadId::Dup)) == RingValue(1));
  CHECK(sq.coeff(key("v")) == c + c);
  CHECK(sq.coeff(key("v/v")) == c * c);
  CHECK(sq.coeff(key("v\\v")).is_zero());
  CHECK(mul_monoid(f, unit_series(carrier_over_monoid(), 2)) == f);

  // coefficient of ABC in (x^vtx + c x^AB + d x^BA)/(itself) is 2c
  GradedSeries g(carrier_over_monoid(), 3);
  RingValue d = RingValue::variable("d");
  g.set_coeff(key("v"), RingValue(1));
  g.set_coeff(key("v/v"), c);
  g.set_coeff(key("v\\v"), d);
  CHECK(mul_monoid(g, g).coeff(key("v/v/v")) == c + c);

  GradedSeries wrong(carrier_under_monoid(), 3);
  CHECK_THROWS_AS(mul_monoid(g, wrong), std::invalid_argument);
}

TEST_CASE("monoid inverse by geometric series") {
  CHECK(inv_monoid(unit_series(carrier_over_monoid(), 4)) ==
        unit_series(carrier_over_monoid(), 4));
  // inv(x^e - x^vtx) = sum of left combs
  GradedSeries f = unit_series(carrier_over_monoid(), 4);
  f.set_coeff(key("v"), RingValue(Rational(-1)));
  GradedSeries inv = inv_monoid(f);
  for (int n = 0; n <= 4; ++n)
    CHECK(inv.coeff(MonoidElement{OperadId::Dup, comb(n, CombSide::Left), 0}) == RingValue(1));
  CHECK(inv.term_count() == 5);
  CHECK(mul_monoid(f, inv) == unit_series(carrier_over_monoid(), 4));
  CHECK(mul_monoid(inv, f) == unit_series(carrier_over_monoid(), 4));

  // inv(x^e + c x^vtx) alternates over left combs
  GradedSeries g = unit_series(carrier_over_monoid(), 3);
  RingValue c = RingValue::variable("c");
  g.set_coeff(key("v"), c);
  GradedSeries gi = inv_monoid(g);
  CHECK(gi.coeff(key("v")) == -c);
  CHECK(gi.coeff(key("v/v")) == c * c);
  CHECK(gi.coeff(key("v/v/v")) == -(c * c * c));
  CHECK(mul_monoid(g, gi) == unit_series(carrier_over_monoid(), 3));

  GradedSeries bad(carrier_over_monoid(), 2);
  CHECK_THROWS_AS(inv_monoid(bad), std::invalid_argument);
}

TEST_CASE("composition unit laws and the worked quadratic example") {
  RingValue a = RingValue::variable("a"), b = RingValue::variable("b");
  RingValue c = RingValue::variable("c"), d = RingValue::variable("d");
  GradedSeries phi = dup_diffeo(3, {{"v/v", a}, {"v\\v", b}});
  GradedSeries psi = dup_diffeo(3, {{"v/v", c}, {"v\\v", d}});
  CHECK(compose(phi, identity_diffeo(OperadId::Dup, 3)) == phi);
  CHECK(compose(identity_diffeo(OperadId::Dup, 3), psi) == psi);

  GradedSeries comp = compose(phi, psi);
  CHECK(comp.term_count() == 16);
  CHECK(comp.coeff(key("v")) == RingValue(1));
  CHECK(comp.coeff(key("v/v")) == a + c);
  CHECK(comp.coeff(key("v\\v")) == b + d);
  RingValue two(Rational(2));
  CHECK(comp.coeff(key("v/v/v")) == two * a * c);
  CHECK(comp.coeff(key("(v\\v)/v")) == a * d);
  CHECK(comp.coeff(key("v/v\\v")) == a * d + b * c);
  CHECK(comp.coeff(key("v\\(v/v)")) == b * c);
  CHECK(comp.coeff(key("v\\v\\v")) == two * b * d);
  // the eight order-4 coefficients: a * (AB/AB, BA/AB, AB/BA, BA/BA) and
  // b * (AB\AB, AB\BA, BA\AB, BA\BA)
  CHECK(comp.coeff(key("v/v/v/v")) == a * c * c);            // AB/AB
  CHECK(comp.coeff(key("(v\\v)/v/v")) == a * c * d);         // BA/AB
  CHECK(comp.coeff(key("v/v/v\\v")) == a * c * d);           // AB/BA
  CHECK(comp.coeff(key("(v\\v)/v\\v")) == a * d * d);        // BA/BA
  CHECK(comp.coeff(key("(v/v)\\(v/v)")) == b * c * c);       // AB\AB
  CHECK(comp.coeff(key("(v/v)\\(v\\v)")) == b * c * d);      // AB\BA
  CHECK(comp.coeff(key("v\\v\\(v/v)")) == b * c * d);        // BA\AB
  CHECK(comp.coeff(key("v\\v\\v\\v")) == b * d * d);         // BA\BA
}

TEST_CASE("order projection of the worked composition is the classic composition") {
  RingValue a = RingValue::variable("a"), b = RingValue::variable("b");
  RingValue c = RingValue::variable("c"), d = RingValue::variable("d");
  GradedSeries phi = dup_diffeo(3, {{"v/v", a}, {"v\\v", b}});
  GradedSeries psi = dup_diffeo(3, {{"v/v", c}, {"v\\v", d}});
  GradedSeries projected = project_order(compose(phi, psi));
  GradedSeries classic = compose(project_order(phi), project_order(psi));
  CHECK(projected == classic);
  CHECK(projected.coeff(as_key(2)) == a + b + c + d);
}

TEST_CASE("compositional inverse") {
  CHECK(comp_inverse(identity_diffeo(OperadId::Dup, 4)) == identity_diffeo(OperadId::Dup, 4));
  GradedSeries phi = dup_diffeo(3, {{"v/v", RingValue(1)}});
  GradedSeries inv = comp_inverse(phi);
  CHECK(inv.coeff(key("v/v")) == RingValue(Rational(-1)));
  CHECK(inv.coeff(key("v/v/v")) == RingValue(Rational(2)));
  // order-3 part supported only on the left comb
  for (TreeId t : trees_of_order(3))
    if (t != parse_tree("v/v/v"))
      CHECK(inv.coeff(MonoidElement{OperadId::Dup, t, 0}).is_zero());
  CHECK(compose(phi, inv) == identity_diffeo(OperadId::Dup, 3));
  CHECK(compose(inv, phi) == identity_diffeo(OperadId::Dup, 3));

  // classic Lagrange-style coefficients for the inverse of x + x^2
  GradedSeries as_phi = identity_diffeo(OperadId::As, 4);
  as_phi.set_coeff(as_key(2), RingValue(1));
  GradedSeries as_inv = comp_inverse(as_phi);
  CHECK(as_inv.coeff(as_key(2)) == RingValue(Rational(-1)));
  CHECK(as_inv.coeff(as_key(3)) == RingValue(Rational(2)));
  CHECK(as_inv.coeff(as_key(4)) == RingValue(Rational(-5)));
  CHECK(as_inv.coeff(as_key(5)) == RingValue(Rational(14)));

  GradedSeries bad(Carrier::operad(OperadId::Dup), 2);
  CHECK_THROWS_AS(comp_inverse(bad), std::invalid_argument);
}

TEST_CASE("action examples") {
  GradedSeries f = unit_series(carrier_over_monoid(), 3);
  f.set_coeff(key("v"), RingValue(1));
  GradedSeries psi = dup_diffeo(3, {{"v/v", RingValue(2)}, {"v\\v", RingValue(3)}});
  CHECK(act(f, identity_diffeo(OperadId::Dup, 3)) == f);
  // (x^e + x^vtx)^psi = x^e + psi
  GradedSeries acted = act(f, psi);
  CHECK(acted.coeff(MonoidElement::neutral(OperadId::Dup)) == RingValue(1));
  for (const auto& [k, v] : psi.terms()) CHECK(acted.coeff(k) == v);
  CHECK(acted.term_count() == psi.term_count() + 1);

  // classic substitution over As: (1 + x)^{x + x^2} = 1 + x + x^2
  GradedSeries g = unit_series(carrier_as_monoid(), 2);
  g.set_coeff(as_key(1), RingValue(1));
  GradedSeries h = identity_diffeo(OperadId::As, 2);
  h.set_coeff(as_key(2), RingValue(1));
  GradedSeries gh = act(g, h);
  CHECK(gh.coeff(MonoidElement::neutral(OperadId::As)) == RingValue(1));
  CHECK(gh.coeff(as_key(1)) == RingValue(1));
  CHECK(gh.coeff(as_key(2)) == RingValue(1));
}

TEST_CASE("semidirect product unit and action-by-identity") {
  SemidirectElement u = semidirect_unit(OperadId::Dup, dup_over_generator(), 3);
  GradedSeries f = unit_series(carrier_over_monoid(), 3);
  f.set_coeff(key("v"), RingValue(2));
  GradedSeries g = unit_series(carrier_over_monoid(), 3);
  g.set_coeff(key("v\\v"), RingValue(5));
  SemidirectElement A{identity_diffeo(OperadId::Dup, 3), f};
  SemidirectElement B{identity_diffeo(OperadId::Dup, 3), g};
  CHECK(semidirect_mul(u, A) == A);
  CHECK(semidirect_mul(A, u) == A);
  SemidirectElement AB = semidirect_mul(A, B);
  CHECK(AB.phi == identity_diffeo(OperadId::Dup, 3));
  CHECK(AB.f == mul_monoid(f, g));
}

TEST_CASE("lambda and rho embeddings") {
  OperadElement over2 = dup_over_generator(), under2 = dup_under_generator();
  GradedSeries e = unit_series(carrier_over_monoid(), 2);
  CHECK(embed_lambda_rho(e, EmbedSide::Rho, over2) ==
        identity_diffeo(OperadId::Dup, 2));

  GradedSeries f = unit_series(carrier_over_monoid(), 2);
  RingValue c = RingValue::variable("c");
  f.set_coeff(key("v/v"), c);
  GradedSeries rf = embed_lambda_rho(f, EmbedSide::Rho, over2);
  CHECK(rf.coeff(key("v")) == RingValue(1));
  CHECK(rf.coeff(key("v/v/v")) == c);  // AB/vtx = ABC
  CHECK(extract_lambda_rho(rf, EmbedSide::Rho, over2) == f);

  GradedSeries g = unit_series(carrier_under_monoid(), 2);
  g.set_coeff(MonoidElement{OperadId::Dup, parse_tree("v/v"), 0}, c);
  GradedSeries lg = embed_lambda_rho(g, EmbedSide::Lambda, under2);
  CHECK(lg.coeff(key("v")) == RingValue(1));
  CHECK(lg.coeff(MonoidElement{OperadId::Dup, v_wrap(parse_tree("v/v")), 0}) == c);
  CHECK(extract_lambda_rho(lg, EmbedSide::Lambda, under2) == g);

  CHECK_THROWS_AS(embed_lambda_rho(f, EmbedSide::Rho, OperadElement{OperadId::Dup,
                                                                    parse_tree("v/v/v"), 0}),
                  std::invalid_argument);
  GradedSeries not_rho = dup_diffeo(2, {{"v\\v", c}});
  CHECK_THROWS_AS(extract_lambda_rho(not_rho, EmbedSide::Rho, over2), std::invalid_argument);
}

TEST_CASE("alpha construction and membership") {
  // alpha_from(0) = x^vtx
  GradedSeries zero(carrier_over_monoid(), 2);
  CHECK(alpha_from(zero, 3) == identity_diffeo(OperadId::Dup, 3));

  // alpha_from(c x^leaf): geometric series on left combs shifted by one
  RingValue c = RingValue::variable("c");
  GradedSeries f(carrier_over_monoid(), 3);
  f.set_coeff(MonoidElement::neutral(OperadId::Dup), c);
  GradedSeries a = alpha_from(f, 4);
  CHECK(a.coeff(key("v")) == RingValue(1));
  CHECK(a.coeff(key("v/v")) == c);
  CHECK(a.coeff(key("v/v/v")) == c * c);
  CHECK(a.coeff(key("v/v/v/v")) == c * c * c);
  CHECK(alpha_membership(a));

  // alpha_from(c x^vtx): first correction on BA/vtx = BAC
  GradedSeries g(carrier_over_monoid(), 3);
  g.set_coeff(key("v"), c);
  GradedSeries ag = alpha_from(g, 4);
  CHECK(ag.coeff(key("v")) == RingValue(1));
  CHECK(ag.coeff(key("(v\\v)/v")) == c);
  CHECK(alpha_membership(ag));

  CHECK(alpha_membership(identity_diffeo(OperadId::Dup, 3)));

  // rho_g with g_vtx = 2, g_AB = 4 = g_vtx^2, g_BA = 5, g_ACA = 10 = g_vtx g_BA
  GradedSeries ok = unit_series(carrier_over_monoid(), 3);
  ok.set_coeff(key("v"), RingValue(2));
  ok.set_coeff(key("v/v"), RingValue(4));
  ok.set_coeff(key("v\\v"), RingValue(5));
  ok.set_coeff(key("v/v\\v"), RingValue(10));
  ok.set_coeff(key("v/v/v"), RingValue(8));           // AB/vtx factors (leaf,leaf,leaf)
  ok.set_coeff(key("(v\\v)/v"), RingValue(10));       // V(vtx)/V(leaf)
  CHECK(alpha_membership(embed_lambda_rho(ok, EmbedSide::Rho, dup_over_generator())));

  GradedSeries badg = unit_series(carrier_over_monoid(), 2);
  badg.set_coeff(key("v"), RingValue(2));
  badg.set_coeff(key("v/v"), RingValue(5));  // violates g_AB = g_vtx^2
  CHECK(!alpha_membership(embed_lambda_rho(badg, EmbedSide::Rho, dup_over_generator())));
}

TEST_CASE("order projection and comb sections") {
  GradedSeries s(carrier_over_monoid(), 2);
  s.set_coeff(MonoidElement::neutral(OperadId::Dup), RingValue(1));
  s.set_coeff(key("v"), RingValue(1));
  s.set_coeff(key("v/v"), RingValue(3));
  s.set_coeff(key("v\\v"), RingValue(4));
  GradedSeries p = project_order(s);
  CHECK(p.coeff(as_key(0)) == RingValue(1));
  CHECK(p.coeff(as_key(1)) == RingValue(1));
  CHECK(p.coeff(as_key(2)) == RingValue(7));

  GradedSeries q = unit_series(carrier_as_monoid(), 3);
  q.set_coeff(as_key(3), RingValue(1));
  GradedSeries sec = section_comb(q, CombSide::Left, SectionKind::Inv);
  CHECK(sec.coeff(MonoidElement{OperadId::Dup, comb(3, CombSide::Left), 0}) == RingValue(1));
  CHECK(project_order(sec) == q);

  GradedSeries d = identity_diffeo(OperadId::As, 1);
  d.set_coeff(as_key(2), RingValue(1));
  GradedSeries secd = section_comb(d, CombSide::Right, SectionKind::Dif);
  CHECK(secd.coeff(key("v")) == RingValue(1));
  CHECK(secd.coeff(key("v\\v")) == RingValue(1));
}

TEST_CASE("factor_under_rho on the frozen examples") {
  // eta = x^vtx factors as (x, x^e)
  UnderRhoFactorization triv = factor_under_rho(identity_diffeo(OperadId::Dup, 2));
  CHECK(triv.psi == identity_diffeo(OperadId::As, 2));
  CHECK(triv.g == unit_series(carrier_over_monoid(), 2));

  // eta = x^vtx + a AB + b BA -> (x + b x^2, x^e + a x^vtx)
  RingValue a = RingValue::variable("a"), b = RingValue::variable("b");
  GradedSeries eta = dup_diffeo(1, {{"v/v", a}, {"v\\v", b}});
  UnderRhoFactorization fac = factor_under_rho(eta);
  CHECK(fac.psi.coeff(as_key(1)) == RingValue(1));
  CHECK(fac.psi.coeff(as_key(2)) == b);
  CHECK(fac.g.coeff(MonoidElement::neutral(OperadId::Dup)) == RingValue(1));
  CHECK(fac.g.coeff(key("v")) == a);
  GradedSeries back = compose(section_comb(fac.psi, CombSide::Right, SectionKind::Dif),
                              embed_lambda_rho(fac.g, EmbedSide::Rho, dup_over_generator()));
  CHECK(back == eta);
}

TEST_CASE("series truncation rules") {
  GradedSeries f = unit_series(carrier_over_monoid(), 4);
  GradedSeries g = unit_series(carrier_over_monoid(), 2);
  CHECK(mul_monoid(f, g).truncation() == 2);
  GradedSeries s(carrier_over_monoid(), 1);
  CHECK_THROWS_AS(s.set_coeff(key("v/v"), RingValue(1)), std::invalid_argument);
}
