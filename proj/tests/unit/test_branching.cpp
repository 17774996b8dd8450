#include <doctest.h>

#include "pbound/branching.hpp"
#include "pbound/sysparse.hpp"

using namespace pbound;

namespace {

OdeSystem fold_system(const Rational& mu) {
  return parse_system("dw/dz = (z^2 + m*w) / (z + w^2); m = " + mu.str()).sys;
}

OdeSystem lv(const std::string& a, const std::string& b, const std::string& c) {
  return parse_system("dz/dt = z*(z + c*w - 1); dw/dt = w*(b*z + w - a); a=" + a + "; b=" + b + "; c=" + c).sys;
}

std::string show(const std::vector<Term>& terms, size_t n) {
  std::string s;
  for (size_t i = 0; i < std::min(n, terms.size()); ++i) {
    s += "[" + terms[i].exp.str() + ":" + terms[i].coeff.str() + "]";
  }
  return s;
}

}  // namespace

TEST_CASE("coefficient profiles and support points") {
  CoeffProfile pr = coeff_profile(fold_system(0));
  CHECK(pr.P(0).finite);
  CHECK(pr.P(0).exp == Rational(2));
  CHECK_FALSE(pr.P(1).finite);
  CHECK(pr.Q(0).exp == Rational(1));
  CHECK(pr.Q(2).exp == Rational(0));

  auto pts = support_points(coeff_profile(fold_system(1)));
  REQUIRE(pts.size() == 3);
  CHECK((pts[0].x == 0 && pts[0].y == Rational(2) && pts[0].origin == Origin::P));
  CHECK((pts[1].x == 1 && pts[1].y == Rational(0) && pts[1].origin == Origin::Both));
  CHECK((pts[2].x == 3 && pts[2].y == Rational(-1) && pts[2].origin == Origin::Q));

  NewtonDiagram d = lower_hull(pts);
  REQUIRE(d.edges.size() == 2);
  CHECK(d.edges[0].lambda == Rational(2));
  CHECK(d.edges[1].lambda == Rational(1, 2));

  // LV at the origin with (a,b,c) = (-1,0,0)
  CoeffProfile lp = coeff_profile(lv("-1", "0", "0"));
  CHECK(lp.P(1).exp == Rational(0));
  CHECK(lp.P(1).coeff == ExtElem(1));
  CHECK(lp.P(2).exp == Rational(0));
  CHECK(lp.Q(0).exp == Rational(1));
  CHECK(lp.Q(0).coeff == ExtElem(-1));
  CHECK_FALSE(lp.Q(1).finite);
  auto lpts = support_points(lp);
  REQUIRE(lpts.size() == 2);
  CHECK(lpts[0].origin == Origin::Both);
  NewtonDiagram ld = lower_hull(lpts);
  CHECK(ld.edges.size() == 1);
  CHECK_FALSE(ld.edges[0].admissible());
  CHECK(ld.vertex_candidates.size() == 1);

  // P = w, Q = 1
  auto tp = support_points(coeff_profile({BiPoly::w(), BiPoly::constant(ExtElem(1))}));
  REQUIRE(tp.size() == 2);
  CHECK((tp[0].origin == Origin::P && tp[1].origin == Origin::Q));
  CHECK(lower_hull({tp[0]}).edges.empty());
}

TEST_CASE("edge polynomials") {
  auto d = lower_hull(support_points(coeff_profile(fold_system(0))));
  // (2 - mu) alpha - 1 at mu = 0
  ExtPoly phi = d.edges[0].char_poly.strip_x_power();
  CHECK(phi.degree() == 1);
  CHECK(-phi[0] / phi[1] == ExtElem(Rational(1, 2)));
  // (1/2) alpha (alpha^2 - (2 mu - 1)) at mu = -4
  auto d4 = lower_hull(support_points(coeff_profile(fold_system(-4))));
  ExtPoly psi = d4.edges[1].char_poly;
  CHECK(psi.degree() == 3);
  CHECK(psi[3] == ExtElem(Rational(1, 2)));
  CHECK(psi[1] == ExtElem(Rational(9, 2)));
  CHECK(psi[2].is_zero());
}

TEST_CASE("vertex criticality") {
  auto check = [](const Rational& mu) {
    auto v = vertex_critical_check(lower_hull(support_points(coeff_profile(fold_system(mu)))));
    for (auto& x : v) {
      if (x.kind == VertexVerdict::Kind::Critical) return true;
    }
    return false;
  };
  CHECK(check(Rational(3, 2)));
  CHECK_FALSE(check(Rational(3)));
  CHECK_FALSE(check(Rational(1, 2)));
  CHECK_FALSE(check(Rational(2)));
  CHECK_FALSE(check(Rational(-1)));

  // scaling P and Q by a constant changes nothing
  OdeSystem s = fold_system(Rational(3, 2));
  OdeSystem s7{s.P * ExtElem(7), s.Q * ExtElem(7)};
  auto v = vertex_critical_check(lower_hull(support_points(coeff_profile(s7))));
  CHECK(v[0].kind == VertexVerdict::Kind::Critical);
  CHECK(v[0].lambda == Rational(3, 2));
}

TEST_CASE("point transforms") {
  OdeSystem s = lv("-1", "0", "0");
  OdeSystem inf = transform_point(s, PointTarget::infinity(0));
  // P̄ = -w̄(b z w̄ + 1 - a w̄), Q̄ = z(z w̄ + c - w̄)
  // c = 0 leaves a common factor w̄, which is cancelled
  CHECK(inf.P == parse_poly("-(1 + w)"));
  CHECK(inf.Q == parse_poly("z*(z - 1)"));

  OdeSystem s2 = lv("-1", "3", "2");
  OdeSystem inf2 = transform_point(s2, PointTarget::infinity(0));
  CHECK(inf2.P == parse_poly("-w*(3*z*w + 1 + w)"));
  CHECK(inf2.Q == parse_poly("z*(z*w + 2 - w)"));

  OdeSystem at_a = transform_point(s2, PointTarget::finite(0, ExtElem(-1)));
  CoeffProfile pr = coeff_profile(at_a);
  CHECK(pr.P(0).exp == Rational(1));
  CHECK(pr.P(0).coeff == ExtElem(-3));  // a b
  CHECK(pr.Q(0).coeff == ExtElem(-3));  // c a - 1

  OdeSystem id = transform_point(s2, PointTarget::shear(1, 0, 1));
  CHECK(id.P == s2.P);
  CHECK(id.Q == s2.Q);
  CHECK_THROWS_WITH(transform_point(s2, PointTarget::shear(0, 1, 1)), "degenerate shear");
  CHECK_THROWS_WITH(transform_point(s2, PointTarget::shear(1, 1, 0)), "degenerate shear");
}

TEST_CASE("branch substitution") {
  OdeSystem s = fold_system(0);
  OdeSystem r = substitute_branch(s, 2, ExtElem(Rational(1, 2)));
  // lowest terms 2 z^5 in the numerator and -8 z in the denominator, up to a common scale
  CoeffProfile pr = coeff_profile(r);
  ExtElem ratio = pr.P(0).coeff / pr.Q(0).coeff;
  CHECK(pr.P(0).exp - pr.Q(0).exp == Rational(4));
  CHECK(ratio == ExtElem(Rational(2, -8)));

  OdeSystem s4 = fold_system(-4);
  auto [t, theta] = adjoin_root(nullptr, ExtPoly({ExtElem(9), ExtElem(0), ExtElem(1)}), false);
  OdeSystem r4 = substitute_branch(s4, Rational(1, 2), theta);
  CoeffProfile p4 = coeff_profile(r4);
  CHECK(r4.nu() == 2);
  // denominator starts with 4 mu z^{3/2}, relative to the original scale z^0
  OdeSystem raw{s4.P.compose_w(BiPoly::monomial(theta, Rational(1, 2), 0) + BiPoly::w()),
                s4.Q.compose_w(BiPoly::monomial(theta, Rational(1, 2), 0) + BiPoly::w())};
  (void)p4;
  CHECK(raw.Q.w_coeff(1).min_zexp() == Rational(1, 2));
  CHECK(raw.Q.w_coeff(1).coeff(Rational(1, 2), 0) == theta * ExtElem(2));

  OdeSystem tr{BiPoly::w(), BiPoly::constant(ExtElem(1))};
  CHECK_THROWS_WITH(substitute_branch(tr, 1, ExtElem(1)), "not an acceptable pair");
}

TEST_CASE("residual valuation") {
  OdeSystem s = fold_system(0);
  std::vector<Term> b{{Rational(2), ExtElem(Rational(1, 2))}, {Rational(5), ExtElem(Rational(-1, 20))}};
  CHECK(residual_valuation(s, b, 1) == Rational(5));
  auto v2 = residual_valuation(s, b, 2);
  REQUIRE(v2);
  CHECK(*v2 >= Rational(8));

  OdeSystem l = lv("-1", "0", "0");
  OdeSystem at = transform_point(l, PointTarget::finite(0, ExtElem(-1)));
  CHECK_FALSE(residual_valuation(at, {{Rational(1), ExtElem(1)}}, 1).has_value());
}

TEST_CASE("closure check") {
  OdeSystem r = substitute_branch(fold_system(0), 2, ExtElem(Rational(1, 2)));
  CHECK(closure_check(coeff_profile(r), 2).verdict == ClosureVerdict::ClosedUnique);
  OdeSystem z2{BiPoly::z().pow(2), BiPoly::constant(ExtElem(1))};
  CHECK(closure_check(coeff_profile(z2), 0).verdict == ClosureVerdict::ClosedUnique);
  OdeSystem r3 = substitute_branch(fold_system(3), 2, ExtElem(-1));
  Closure c3 = closure_check(coeff_profile(r3), 2);
  CHECK(c3.verdict == ClosureVerdict::Continue);
  CHECK(*c3.rho == Rational(3));
}

TEST_CASE("fold example at mu = 0 has three branches") {
  MultiplicityResult m = multiplicity_at(fold_system(0), PointTarget::finite(0, ExtElem(0)));
  REQUIRE(m.finite());
  CHECK(m.count == 3);
  REQUIRE(m.branches.size() == 2);
  const auto& b1 = m.branches[0].branch;
  const auto& b2 = m.branches[1].branch;
  CHECK(show(b2.terms, 2) == "[2:1/2][5:-1/20]");
  CHECK(b2.conjugacy == 1);
  CHECK(b1.conjugacy == 2);
  CHECK(b1.terms[0].exp == Rational(1, 2));
  CHECK(b1.terms[0].coeff * b1.terms[0].coeff == ExtElem(-1));
  CHECK(b1.terms[1].exp == Rational(2));
  CHECK(b1.terms[1].coeff == ExtElem(-1));
  for (const auto& l : m.branches) {
    CHECK(l.status == BranchStatus::ClosedUnique);
    std::optional<Rational> prev;
    for (size_t T = 1; T <= l.branch.terms.size(); ++T) {
      auto v = residual_valuation(fold_system(0), l.branch.terms, T);
      if (!v) break;
      if (prev) CHECK(*v > *prev);
      prev = v;
    }
  }
}

TEST_CASE("fold example criticality table") {
  auto run = [](const Rational& mu) { return multiplicity_at(fold_system(mu), PointTarget::finite(0, ExtElem(0))); };
  auto m = run(Rational(3, 2));
  REQUIRE(m.kind == MultiplicityResult::Kind::Critical);
  CHECK(m.witness->step == 0);
  CHECK(m.witness->lambda == Rational(3, 2));
  CHECK(m.witness->rule == "vertex");
  for (Rational mu : {Rational(3), Rational(7, 2)}) {
    auto r = run(mu);
    REQUIRE(r.kind == MultiplicityResult::Kind::Critical);
    CHECK(r.witness->step == 1);
    CHECK(r.witness->lambda == mu);
  }
  auto r17 = run(Rational(17, 2));
  REQUIRE(r17.kind == MultiplicityResult::Kind::Critical);
  CHECK(r17.witness->rule == "resonance");
  CHECK(r17.witness->step == 3);
  CHECK(r17.witness->lambda == Rational(17, 2));

  auto r4 = run(-4);
  REQUIRE(r4.finite());
  CHECK(r4.count == 3);
  bool found = false;
  for (auto& l : r4.branches) {
    if (l.branch.conjugacy == 2) {
      found = true;
      CHECK(l.branch.terms[0].coeff * l.branch.terms[0].coeff == ExtElem(-9));
    }
  }
  CHECK(found);

  auto r5 = run(5);
  REQUIRE(r5.finite());
  CHECK(r5.count == 2);
}

TEST_CASE("LV multiplicities") {
  OdeSystem s = lv("-1", "0", "0");
  auto m00 = multiplicity_at(s, PointTarget::finite(0, ExtElem(0)));
  CHECK(m00.finite());
  CHECK(m00.count == 0);
  auto minf = multiplicity_at(s, PointTarget::infinity(0));
  CHECK(minf.finite());
  CHECK(minf.count == 0);
  auto s5 = lv("-1", "5", "0");
  auto ma = multiplicity_at(s5, PointTarget::finite(0, ExtElem(-1)));
  CHECK(ma.finite());
  CHECK(ma.count == 0);
  // c = -2 makes the point at infinity critical
  auto mc = multiplicity_at(lv("-1", "0", "-2"), PointTarget::infinity(0));
  CHECK(mc.kind == MultiplicityResult::Kind::Critical);
  CHECK(mc.witness->lambda == Rational(1, 2));
}

TEST_CASE("regular points") {
  OdeSystem s{parse_poly("1 + z*w"), parse_poly("1")};
  auto m = multiplicity_at(s, PointTarget::finite(0, ExtElem(0)));
  CHECK(m.finite());
  CHECK(m.count == 1);
  OdeSystem c{parse_poly("w"), parse_poly("1")};
  auto mc = multiplicity_at(c, PointTarget::finite(1, ExtElem(0)));
  CHECK(mc.count == 0);
}

TEST_CASE("caps produce capped results") {
  Caps caps;
  caps.depth = 1;
  auto m = multiplicity_at(fold_system(Rational(17, 2)), PointTarget::finite(0, ExtElem(0)), caps);
  CHECK(m.kind == MultiplicityResult::Kind::Capped);
  Caps t;
  t.tower = 1;
  auto m2 = multiplicity_at(fold_system(0), PointTarget::finite(0, ExtElem(0)), t);
  CHECK(m2.kind == MultiplicityResult::Kind::Capped);
  CHECK(m2.count == 1);
}
