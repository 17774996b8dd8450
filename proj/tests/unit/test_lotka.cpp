#include <random>

#include "doctest.h"
#include "pbound/lotka.hpp"

using namespace pbound;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

// The LV curve a(z-1) + w pulled back along (Z, W), with denominators cleared by z.
BiPoly pulled_curve(const SymmetryImage& im, bool clear_z) {
  BiPoly g = (im.Z - BiPoly::constant(ExtElem(1))) * ExtElem(im.params.a) + im.W;
  return clear_z ? g.mul_zpow(Rational(1)) : g;
}

}  // namespace

TEST_CASE("genericity clauses") {
  for (int b : {-3, 0, 7}) CHECK(genericity_check({-1, b, 0}).holds);
  Genericity half = genericity_check({Rational(1, 2), 0, 0});
  CHECK_FALSE(half.holds);
  CHECK(half.violated == "a");
  Genericity neg = genericity_check({-1, 0, -3});
  CHECK_FALSE(neg.holds);
  CHECK(neg.violated == "c");
  Genericity zero = genericity_check({0, 1, 1});
  CHECK_FALSE(zero.holds);
  REQUIRE(zero.clauses.size() == 3);
  CHECK_FALSE(zero.clauses[2].defined);
  // c - 1/a = 2 lies in the excluded set, c - 1/a = 1 does not
  CHECK_FALSE(genericity_check({-1, 0, 1}).holds);
  CHECK(genericity_check({-1, 0, 0}).holds);
}

TEST_CASE("classification") {
  LvClassification s = classify({-1, 0, 0});
  CHECK(s.kind == LvClassification::Kind::StrictCurve);
  CHECK(s.curve_text == "-(z-1)+w");
  REQUIRE(s.curve);
  CHECK(s.curve->cofactor.str() == "z+w");
  CHECK(s.curve->strict);

  LvClassification n = classify({-1, 5, 0});
  CHECK(n.kind == LvClassification::Kind::NoStrictCurve);
  CHECK(n.discriminant == Rational(-5));
  REQUIRE(n.search);
  for (const auto& c : n.search->certificates) CHECK_FALSE(c.strict);

  CHECK(classify({2, 1, 1}).kind == LvClassification::Kind::Inapplicable);
}

TEST_CASE("symmetry examples") {
  SymmetryImage sw = apply_symmetry({-1, 0, 0}, LvSymmetry::Swap);
  CHECK(sw.params.a == Rational(-1));
  CHECK(sw.params.b == Rational(0));
  CHECK(sw.params.c == Rational(0));
  CHECK(sw.Z.str() == "-w");
  CHECK(sw.W.str() == "-z");
  SymmetryImage inv = apply_symmetry({-1, 0, 0}, LvSymmetry::Inversion);
  CHECK(inv.params.a == Rational(1));
  CHECK(inv.params.b == Rational(2));
  CHECK(inv.params.c == Rational(0));
  CHECK_THROWS(apply_symmetry({-1, 0, 1}, LvSymmetry::Inversion));
  CHECK_THROWS(apply_symmetry({0, 0, 0}, LvSymmetry::Swap));
}

TEST_CASE("symmetries map LV fields to LV fields on seeded parameters") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    LvParams p{random_rational(rng), random_rational(rng), random_rational(rng)};
    for (auto which : {LvSymmetry::Swap, LvSymmetry::Inversion}) {
      if (which == LvSymmetry::Swap && p.a.is_zero()) continue;
      if (which == LvSymmetry::Inversion && p.c == Rational(1)) continue;
      SymmetryImage im = apply_symmetry(p, which);
      CHECK_MESSAGE(symmetry_holds(p, im), p.str());
      // a wrong parameter map must be detected
      SymmetryImage off = im;
      off.params.b = off.params.b + Rational(1);
      CHECK_FALSE(symmetry_holds(p, off));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("the symmetries carry the strict curve to the strict curve") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    Rational a = random_rational(rng), c = random_rational(rng);
    LvParams p{a, Rational(1) + a * (Rational(1) - c), c};  // a(1-c) + (1-b) = 0
    BiPoly curve = (BiPoly::z() - BiPoly::constant(ExtElem(1))) * ExtElem(a) + BiPoly::w();
    for (auto which : {LvSymmetry::Swap, LvSymmetry::Inversion}) {
      if (which == LvSymmetry::Swap && p.a.is_zero()) continue;
      if (which == LvSymmetry::Inversion && p.c == Rational(1)) continue;
      SymmetryImage im = apply_symmetry(p, which);
      const LvParams& q = im.params;
      CHECK((q.a * (Rational(1) - q.c) + (Rational(1) - q.b)).is_zero());
      // the image curve pulls back to a constant multiple of the original
      BiPoly back = pulled_curve(im, which == LvSymmetry::Inversion);
      REQUIRE(back.is_polynomial());
      ExtElem ratio = back.coeff(Rational(0), 1) * curve.coeff(Rational(0), 1).inverse();
      CHECK(back == curve * ratio);
      ++checked;
    }
  }
  CHECK(checked >= 70);
}

TEST_CASE("classification verdicts agree across generic symmetry pairs") {
  // Over ℚ both ends stay generic only for the swap at (-1,0,0) and the inversion at (-1,2,0).
  struct Pair {
    LvParams p;
    LvSymmetry which;
  };
  for (const Pair& c : {Pair{{-1, 0, 0}, LvSymmetry::Swap}, Pair{{-1, 2, 0}, LvSymmetry::Inversion}}) {
    SymmetryImage im = apply_symmetry(c.p, c.which);
    REQUIRE(genericity_check(c.p).holds);
    REQUIRE(genericity_check(im.params).holds);
    CHECK(classify(c.p).kind == classify(im.params).kind);
  }
  CHECK_FALSE(genericity_check(apply_symmetry({-1, 5, 0}, LvSymmetry::Swap).params).holds);
}

TEST_CASE("multiplicity triple under genericity") {
  // (-1, 5, 0) meets genericity and reproduces (0, <=1, 0)
  LvTriple t = lv_triple({-1, 5, 0});
  CHECK(t.at_infinity.finite());
  CHECK(t.at_infinity.count == 0);
  CHECK(t.at_a.finite());
  CHECK(t.at_a.count <= 1);
  CHECK(t.at_origin.finite());
  CHECK(t.at_origin.count == 0);
}
