#include <random>

#include "doctest.h"
#include "pbound/branching.hpp"
#include "pbound/darboux.hpp"
#include "pbound/sysparse.hpp"

using namespace pbound;

namespace {

BiPoly random_poly(std::mt19937_64& rng, int deg, bool vanish_at_origin) {
  std::uniform_int_distribution<int> num(-3, 3), keep(0, 2);
  BiPoly f;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) {
      if ((vanish_at_origin && i + j == 0) || keep(rng) == 0) continue;
      int n = num(rng);
      if (n != 0) f.add_term(ExtElem(n), Rational(i), j);
    }
  }
  return f;
}

bool usable(const OdeSystem& s) {
  return !s.P.is_zero() && !s.Q.is_zero() && common_factor(s).total_degree() == 0;
}

}  // namespace

TEST_CASE("finite multiplicity is at most max(deg_w P, deg_w Q + 1)") {
  std::mt19937_64 rng(101);
  int counted = 0;
  for (int t = 0; t < 600 && counted < 40; ++t) {
    OdeSystem s{random_poly(rng, 3, true), random_poly(rng, 3, true)};
    if (!usable(s)) continue;
    MultiplicityResult m = multiplicity_at(s, PointTarget::finite(0, ExtElem(0)));
    if (!m.finite()) continue;
    CHECK_MESSAGE(m.count <= std::max(s.P.deg_w(), s.Q.deg_w() + 1), print_system(s));
    ++counted;
  }
  CHECK(counted == 40);
}

TEST_CASE("multiplicity at infinity is at most M for axis forms") {
  std::mt19937_64 rng(102);
  int counted = 0;
  for (int t = 0; t < 600 && counted < 30; ++t) {
    BiPoly Q = random_poly(rng, 2, false);
    OdeSystem ax{random_poly(rng, 2, false), BiPoly::z() * Q};
    if (Q.is_zero() || !usable(ax)) continue;
    MultiplicityResult m = multiplicity_at(ax, PointTarget::infinity(0));
    if (!m.finite()) continue;
    CHECK_MESSAGE(m.count <= ax.degree(), print_system(ax));
    ++counted;
  }
  CHECK(counted == 30);
}

TEST_CASE("shear relation with the constant-solution corrections") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> small(1, 3), sign(0, 1);
  int counted = 0;
  for (int t = 0; t < 600 && counted < 25; ++t) {
    Rational a(small(rng)), b(sign(rng) ? small(rng) : -small(rng)), c(small(rng));
    OdeSystem s{random_poly(rng, 2, true), random_poly(rng, 2, true)};
    if (t % 3 == 0) s.P = s.P * BiPoly::w();
    if (!usable(s)) continue;
    MultiplicityResult o = multiplicity_at(s, PointTarget::finite(0, ExtElem(0)));
    MultiplicityResult sh = multiplicity_at(s, PointTarget::shear(a, b, c));
    if (!o.finite() || !sh.finite()) continue;
    BiPoly line = BiPoly::z() * ExtElem(-b / a);
    bool w0 = s.P.compose_w(BiPoly()).is_zero();
    bool l0 = (s.P.compose_w(line) - s.Q.compose_w(line) * ExtElem(-b / a)).is_zero();
    CHECK_MESSAGE(o.count + int(w0) == sh.count + int(l0), print_system(s));
    ++counted;
  }
  CHECK(counted == 25);
}

TEST_CASE("residual valuation increases along closed branches") {
  std::mt19937_64 rng(104);
  int branches = 0;
  for (int t = 0; t < 200 && branches < 40; ++t) {
    OdeSystem s{random_poly(rng, 3, true), random_poly(rng, 3, true)};
    if (!usable(s)) continue;
    MultiplicityResult m = multiplicity_at(s, PointTarget::finite(0, ExtElem(0)));
    for (const auto& leaf : m.branches) {
      if (leaf.status != BranchStatus::ClosedUnique) continue;
      const auto& terms = leaf.branch.terms;
      std::optional<Rational> prev = residual_valuation(m.local, terms, 1);
      for (size_t T = 2; T <= terms.size(); ++T) {
        auto v = residual_valuation(m.local, terms, T);
        if (!prev) {
          CHECK_FALSE(v);
        } else {
          CHECK((!v || *v > *prev));
        }
        prev = v;
      }
      ++branches;
    }
  }
  CHECK(branches >= 40);
}

TEST_CASE("Darboux polynomials multiply with additive cofactors") {
  std::mt19937_64 rng(105);
  OdeSystem s = parse_system("dz/dt = z*(z + 2*w - 1); dw/dt = w*(3*z + w + 1)").sys;
  DarbouxSearch found = search_darboux(s, 1);
  REQUIRE(found.certificates.size() >= 2);
  std::uniform_int_distribution<size_t> pick(0, found.certificates.size() - 1);
  for (int t = 0; t < 10; ++t) {
    const auto& f = found.certificates[pick(rng)];
    const auto& g = found.certificates[pick(rng)];
    auto v = verify_darboux(s, f.f * g.f);
    REQUIRE(std::holds_alternative<DarbouxCertificate>(v));
    CHECK(std::get<DarbouxCertificate>(v).cofactor == f.cofactor + g.cofactor);
  }
}
