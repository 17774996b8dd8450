#include "pbound/bounds.hpp"

#include <future>
#include <random>
#include <stdexcept>

#include "pbound/darboux.hpp"
#include "pbound/elim.hpp"

namespace pbound {

std::string AxisPoint::str() const {
  switch (kind) {
    case Kind::Infinity:
      return "inf";
    case Kind::Rational:
      return value.str();
    case Kind::Algebraic:
      if (capped) return "root of " + factor.str("w") + " (tower cap)";
      return value.str() + " [" + describe_tower(value.tower()) + "]";
  }
  return "";
}

PointTarget AxisPoint::target() const {
  return kind == Kind::Infinity ? PointTarget::infinity(0) : PointTarget::finite(0, value);
}

AxisPoints axis_singular_points(const OdeSystem& axis, const Caps& caps) {
  if (!axis.P.is_polynomial() || !axis.Q.is_polynomial() || axis.Q.min_zexp() < Rational(1)) {
    throw std::invalid_argument("denominator is not divisible by z");
  }
  QPoly p0 = eval_z(axis.P, Rational(0));
  if (p0.is_zero()) throw std::invalid_argument("axis is not isolated: P(0,w) vanishes identically");
  AxisPoints out;
  out.points.push_back({});
  if (p0.degree() == 0) return out;
  SquarefreeRoots sr = squarefree_and_rational_roots(p0);
  out.k = sr.squarefree.degree();
  QPoly rest = sr.squarefree;
  for (const auto& r : sr.roots) {
    out.points.push_back({AxisPoint::Kind::Rational, ExtElem(r.root), QPoly({-r.root, Rational(1)}), 1});
    rest = rest / QPoly({-r.root, Rational(1)});
  }
  if (rest.degree() > 0) {
    for (const auto& f : factor_univariate(rest, caps.factor)) {
      try {
        auto [t, theta] = adjoin_root(nullptr, to_ext(f.poly), false, caps.tower);
        out.points.push_back({AxisPoint::Kind::Algebraic, theta, f.poly, f.poly.degree()});
      } catch (const CapError&) {
        out.points.push_back({AxisPoint::Kind::Algebraic, ExtElem(0), f.poly, f.poly.degree(), true});
      }
    }
  }
  return out;
}

BiPoly Line::poly() const {
  return BiPoly::z() * u + BiPoly::w() * v + BiPoly::constant(t);
}

std::string Line::str() const {
  std::string s = poly().str();
  if (tower) s += " [" + describe_tower(tower) + "]";
  return s;
}

BoundReport axis_degree_bound(const OdeSystem& axis, const Caps& caps) {
  BoundReport rep;
  rep.axis = axis;
  rep.M_axis = axis.degree();
  AxisPoints ap = axis_singular_points(axis, caps);
  rep.k = ap.k;
  rep.points = ap.points;
  auto mul = [&axis, &caps](const AxisPoint& p) {
    if (!p.capped) return multiplicity_at(axis, p.target(), caps);
    MultiplicityResult m;
    m.kind = MultiplicityResult::Kind::Capped;
    m.diagnostics.push_back("tower cap reached while adjoining the point");
    return m;
  };
  if (caps.threads > 1) {
    std::vector<std::future<MultiplicityResult>> jobs;
    for (const auto& p : rep.points) jobs.push_back(std::async(std::launch::async, mul, p));
    for (auto& j : jobs) rep.muls.push_back(j.get());
  } else {
    for (const auto& p : rep.points) rep.muls.push_back(mul(p));
  }
  int sum = 0;
  bool capped = false;
  for (size_t i = 0; i < rep.points.size(); ++i) {
    const auto& m = rep.muls[i];
    rep.summands.push_back(rep.points[i].weight * m.count);
    sum += rep.summands.back();
    if (m.kind == MultiplicityResult::Kind::Critical && !rep.blocking) rep.blocking = i;
    if (m.kind == MultiplicityResult::Kind::Capped) capped = true;
  }
  if (rep.blocking) {
    rep.flags.push_back("critical point at " + rep.points[*rep.blocking].str() + ": no finite bound from this method");
  } else if (capped) {
    rep.inconclusive = true;
    rep.lower_bound = sum;
    rep.flags.push_back("a multiplicity hit a cap; the sum is only a lower bound");
  } else {
    rep.sum_bound = sum;
    rep.fallback_bound = rep.M_axis * (rep.k + 1);
  }
  return rep;
}

LineTransform line_transform(const OdeSystem& sys, const Rational& a0, const Rational& b0, const Rational& c0) {
  if (a0.is_zero() && b0.is_zero()) throw std::invalid_argument("degenerate line");
  LineTransform out;
  OdeSystem s = sys;
  Rational a = a0, b = b0, c = c0;
  if (a.is_zero()) {
    s = {swap_zw(sys.Q), swap_zw(sys.P)};
    a = b;
    b = Rational(0);
    out.swapped = true;
  }
  BiPoly L = BiPoly::z() * ExtElem(a) + BiPoly::w() * ExtElem(b) + BiPoly::constant(ExtElem(c));
  BiDivision d = bivariate_divide(apply_field(s, L), L);
  if (!d.remainder.is_zero()) throw std::invalid_argument("line is not invariant: remainder " + d.remainder.str());
  out.cofactor = d.quotient;
  BiPoly zs = (BiPoly::z() - BiPoly::w() * ExtElem(b) - BiPoly::constant(ExtElem(c))) * ExtElem(a.inverse());
  BiPoly ws = BiPoly::w();
  out.axis = {s.P.compose(zs, ws), BiPoly::z() * d.quotient.compose(zs, ws)};
  return out;
}

BoundReport line_degree_bound(const OdeSystem& sys, const Rational& a, const Rational& b, const Rational& c,
                              const Caps& caps) {
  LineTransform lt = line_transform(sys, a, b, c);
  BoundReport rep = axis_degree_bound(lt.axis, caps);
  rep.line = Line{ExtElem(a), ExtElem(b), ExtElem(c), nullptr, 1};
  rep.swapped = lt.swapped;
  int M = sys.degree();
  rep.M_line = M;
  if (!rep.blocking && !rep.inconclusive) rep.line_bound = M * (M + 1);
  return rep;
}

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients in z of P(z, s z + r) - s Q(z, s z + r), as polynomials in (s, r)
// stored with s in the z slot and r in the w slot.
std::vector<BiPoly> line_conditions(const OdeSystem& sys) {
  std::map<int, BiPoly> byz;
  auto add = [&](const BiPoly& f, bool is_q) {
    for (const auto& [key, c] : f.terms()) {
      int i = static_cast<int>(f.zexp(key).num().get_si()), j = key.first;
      for (int k = 0; k <= j; ++k) {
        ExtElem coef = c * ExtElem(binom(j, k));
        if (is_q) coef = -coef;
        byz[i + k].add_term(coef, Rational(k + (is_q ? 1 : 0)), j - k);
      }
    }
  };
  add(sys.P, false);
  add(sys.Q, true);
  std::vector<BiPoly> out;
  for (auto& [i, c] : byz) {
    if (!c.is_zero()) out.push_back(c);
  }
  return out;
}

// Calls emit(root, tower, conjugacy) for every root of f (over the field of its
// coefficients), one representative per irreducible factor.
template <class Emit>
void for_each_root(const ExtPoly& f, const Tower& base, int conj, const Caps& caps, Emit emit) {
  if (f.degree() <= 0) return;
  if (all_rational(f) && base == nullptr) {
    for (const auto& fac : factor_univariate(to_rational(f), std::max(caps.factor, f.degree()))) {
      if (fac.poly.degree() == 1) {
        emit(ExtElem(-fac.poly[0]), base, conj);
      } else {
        auto [t, theta] = adjoin_root(base, to_ext(fac.poly), false, caps.tower);
        emit(theta, t, conj * fac.poly.degree());
      }
    }
    return;
  }
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    (void)mult;
    if (part.degree() == 1) {
      ExtPoly m = part.monic();
      emit(-m[0], base, conj);
      continue;
    }
    auto [t, theta] = adjoin_root(base, part, true, caps.tower);
    try {
      emit(theta, t, conj * part.degree());
    } catch (const TowerSplit& s) {
      if (s.level != t) throw;
      for_each_root(s.first, base, conj, caps, emit);
      for_each_root(s.second, base, conj, caps, emit);
    }
  }
}

ExtPoly specialize_s(const BiPoly& c, const ExtElem& s0) {
  std::vector<ExtElem> out;
  for (const auto& q : as_w_poly(c)) out.push_back(to_ext(q).eval(s0));
  return ExtPoly(std::move(out));
}

}  // namespace

LineScan detect_invariant_lines(const OdeSystem& sys, const Caps& caps) {
  LineScan scan;
  // vertical lines z = r0
  QPoly vq = content_w(sys.Q);
  if (vq.degree() > 0) {
    for_each_root(to_ext(vq), nullptr, 1, caps, [&](const ExtElem& r0, const Tower& t, int conj) {
      scan.lines.push_back({ExtElem(1), ExtElem(0), -r0, t, conj});
    });
  }
  std::vector<BiPoly> conds = line_conditions(sys);
  if (conds.empty()) {
    scan.dicritical = true;
    scan.flags.push_back("every line is invariant");
    return scan;
  }
  BiPoly g = conds[0];
  for (size_t i = 1; i < conds.size(); ++i) g = bivariate_gcd(g, conds[i]);
  if (g.total_degree() > 0) {
    scan.dicritical = true;
    scan.flags.push_back("one-parameter family of invariant lines w = s*z + r with " + g.str("s", "r") + " = 0");
    for (auto& c : conds) c = bivariate_divide(c, g).quotient;
  }
  for (const auto& c : conds) {
    if (c.total_degree() == 0) return scan;  // a nonzero constant condition
  }
  if (conds.size() == 1) return scan;  // cannot happen after removing the gcd
  // candidates for s: common roots of two random combinations, intersected twice
  std::mt19937_64 rng(20240531);
  std::uniform_int_distribution<int> coef(-7, 7);
  auto combo = [&] {
    BiPoly acc;
    for (const auto& c : conds) acc += c * ExtElem(coef(rng));
    return acc;
  };
  QPoly sres;
  for (int attempt = 0; attempt < 6; ++attempt) {
    QPoly r1 = resultant_w(combo(), combo());
    if (r1.is_zero()) continue;
    sres = sres.is_zero() ? r1 : gcd(sres, r1);
    if (attempt >= 1 && !sres.is_zero()) break;
  }
  if (sres.is_zero()) {
    scan.flags.push_back("line elimination degenerated");
    return scan;
  }
  if (sres.degree() == 0) return scan;
  for_each_root(to_ext(sres), nullptr, 1, caps, [&](const ExtElem& s0, const Tower& ts, int cs) {
    ExtPoly rg;
    for (const auto& c : conds) rg = gcd(rg, specialize_s(c, s0));
    if (rg.degree() <= 0) return;
    for_each_root(rg, ts, cs, caps, [&](const ExtElem& r0, const Tower& tr, int cr) {
      scan.lines.push_back({-s0, ExtElem(1), -r0, tr, cr});
    });
  });
  std::stable_sort(scan.lines.begin(), scan.lines.end(), [](const Line& a, const Line& b) {
    if (a.v.is_zero() != b.v.is_zero()) return a.v.is_zero();
    if (a.conjugacy != b.conjugacy) return a.conjugacy < b.conjugacy;
    int cu = compare_canonical(a.u, b.u);
    if (cu != 0) return cu < 0;
    return compare_canonical(a.t, b.t) < 0;
  });
  return scan;
}

}  // namespace pbound
