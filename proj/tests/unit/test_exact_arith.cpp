#include <random>
#include <set>

#include "doctest.h"
#include "pbound/factor.hpp"
#include "pbound/tower.hpp"

using namespace pbound;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

// Brute-force oracle: every ±(divisor of a0)/(divisor of lc), tested by evaluation.
std::set<Rational> brute_roots(const std::vector<long>& c) {
  std::set<Rational> out;
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) out.insert(Rational(0));
  if (lo + 1 >= c.size()) return out;
  long a0 = std::labs(c[lo]), an = std::labs(c.back());
  QPoly p = qp(c);
  for (long u = 1; u <= a0; ++u) {
    if (a0 % u) continue;
    for (long v = 1; v <= an; ++v) {
      if (an % v) continue;
      for (int s : {-1, 1}) {
        Rational r(s * u, v);
        if (p.eval(r).is_zero()) out.insert(r);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational basics") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("squarefree part and rational roots") {
  auto r = squarefree_and_rational_roots(qp({0, 1, 1}));  // w(w+1)
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].root == Rational(-1));
  CHECK(r.roots[1].root == Rational(0));
  CHECK(r.squarefree.degree() == 2);

  auto cube = squarefree_and_rational_roots(qp({-8, 12, -6, 1}));  // (w-2)^3
  REQUIRE(cube.roots.size() == 1);
  CHECK(cube.roots[0].root == Rational(2));
  CHECK(cube.roots[0].multiplicity == 3);
  CHECK(cube.squarefree == qp({-2, 1}));

  auto irr = squarefree_and_rational_roots(qp({-2, 0, 1}));
  CHECK(irr.roots.empty());
  CHECK(irr.squarefree.degree() == 2);
  CHECK_THROWS_WITH(squarefree_and_rational_roots(QPoly()), "zero polynomial");
}

TEST_CASE("factor_univariate") {
  auto f = factor_univariate(qp({-1, 0, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].poly == qp({-1, 1}));
  CHECK(f[1].poly == qp({1, 1, 1}));
  CHECK(factor_univariate(qp({-2, 0, 1})).size() == 1);
  // edge polynomial (2 - mu) a - 1 at mu = 0
  auto lin = factor_univariate(QPoly({Rational(-1), Rational(2)}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].poly[0] == Rational(-1, 2));
  CHECK_THROWS_WITH(factor_univariate(qp({1, 0, 0, 0, 0, 0, 0, 0, 0, 1})), "factor cap exceeded");
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime
  auto sd = factor_univariate(qp({1, 0, -10, 0, 1}));
  CHECK(sd.size() == 1);
  // (x^2+1)(x^2-3)(2x+5)^2
  QPoly big = qp({1, 0, 1}) * qp({-3, 0, 1}) * qp({5, 2}).pow(2);
  auto bf = factor_univariate(big);
  REQUIRE(bf.size() == 3);
  CHECK(bf[0].poly == QPoly({Rational(5, 2), Rational(1)}));
  CHECK(bf[0].multiplicity == 2);
}

TEST_CASE("factor and roots agree with oracles on seeded samples") {
  std::mt19937_64 rng(20261017);
  for (int iter = 0; iter < 150; ++iter) {
    // build from random small factors so rational roots actually occur
    QPoly p = qp({1});
    int nf = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nf; ++k) {
      int d = 1 + static_cast<int>(rng() % 2);
      std::vector<long> c;
      for (int i = 0; i <= d; ++i) c.push_back(static_cast<long>(rng() % 7) - 3);
      if (c.back() == 0) c.back() = 1;
      p = p * qp(c);
    }
    if (p.is_zero() || p.degree() < 1) continue;
    std::vector<long> ic;
    for (const auto& c : p.coeffs()) ic.push_back(c.num().get_si());
    auto oracle = brute_roots(ic);
    auto got = rational_roots(p);
    CHECK(std::set<Rational>(got.begin(), got.end()) == oracle);

    auto facs = factor_univariate(p, 8);
    QPoly prod = qp({1});
    for (const auto& f : facs) prod = prod * f.poly.pow(f.multiplicity);
    CHECK(prod == p.monic());
  }
}

TEST_CASE("tower arithmetic") {
  auto [t, i] = adjoin_root(nullptr, to_ext(qp({1, 0, 1})), false);
  CHECK((i * i) == ExtElem(-1));
  CHECK(i.inverse() == -i);
  CHECK_THROWS_WITH(adjoin_root(nullptr, to_ext(qp({-4, 0, 1})), false), "adjoin of reducible linear part");

  auto [t9, th] = adjoin_root(nullptr, to_ext(qp({9, 0, 1})), false);
  CHECK(th * th == ExtElem(-9));
  ExtElem e = th + ExtElem(1);
  auto inv = try_invert(e);
  REQUIRE(std::holds_alternative<Inverse>(inv));
  ExtElem ie = std::get<Inverse>(inv).value;
  CHECK(ie * e == ExtElem(1));
  CHECK(ie == (th - ExtElem(1)) * ExtElem(Rational(-1, 10)));

  // deliberately reducible modulus
  auto lvl = std::make_shared<TowerLevel>();
  lvl->modulus = to_ext(qp({-1, 0, 1}));
  lvl->degree = 2;
  lvl->depth = 1;
  lvl->total_degree = 2;
  lvl->name = "x";
  lvl->presumed_irreducible = true;
  Tower bad = lvl;
  ExtElem x = ExtElem::generator(bad);
  auto sp = try_invert(x - ExtElem(1));
  REQUIRE(std::holds_alternative<Split>(sp));
  auto s = std::get<Split>(sp);
  CHECK((s.first * s.second) == lvl->modulus);
  CHECK(std::min(s.first.degree(), s.second.degree()) == 1);
  CHECK_THROWS_AS((void)ExtElem(0).inverse(), std::domain_error);

  CHECK_THROWS_AS(adjoin_root(t, to_ext(qp({2, 0, 1})), true, 2), CapError);
}

TEST_CASE("field axioms on seeded tower samples") {
  auto [t1, a] = adjoin_root(nullptr, to_ext(qp({-2, 0, 1})), false);
  auto [t2, b] = adjoin_root(t1, ExtPoly({-a, ExtElem(0), ExtElem(1)}), true);  // b^2 = sqrt 2
  std::mt19937_64 rng(7);
  auto rnd = [&]() {
    auto r = [&]() { return ExtElem(Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4))); };
    return r() + r() * a + (r() + r() * a) * b;
  };
  for (int i = 0; i < 60; ++i) {
    ExtElem x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!x.is_zero()) {
      auto inv = try_invert(x);
      if (std::holds_alternative<Inverse>(inv)) CHECK(std::get<Inverse>(inv).value * x == ExtElem(1));
    }
    Rational q(static_cast<long>(rng() % 9) - 4, 3);
    CHECK((ExtElem(q) + b - b).is_rational());
  }
}
