#include "pbound/newton.hpp"

#include <algorithm>

namespace pbound {

std::vector<SupportPoint> support_points(const CoeffProfile& profile) {
  std::vector<SupportPoint> pts;
  int n = static_cast<int>(std::max(profile.p.size(), profile.q.size()));
  for (int x = 0; x <= n; ++x) {
    const LowTerm& p = profile.P(x);
    const LowTerm& q = profile.Q(x - 1);
    if (p.finite && q.finite && p.exp == q.exp - Rational(1)) {
      pts.push_back({x, p.exp, Origin::Both, p.coeff, q.coeff});
      continue;
    }
    if (p.finite) pts.push_back({x, p.exp, Origin::P, p.coeff, ExtElem(0)});
    if (q.finite) pts.push_back({x, q.exp - Rational(1), Origin::Q, ExtElem(0), q.coeff});
  }
  return pts;
}

NewtonDiagram lower_hull(const std::vector<SupportPoint>& points) {
  NewtonDiagram d;
  d.points = points;
  // lowest point per abscissa
  std::vector<const SupportPoint*> low;
  for (const auto& p : points) {
    if (!low.empty() && low.back()->x == p.x) {
      if (p.y < low.back()->y) low.back() = &p;
    } else {
      low.push_back(&p);
    }
  }
  std::sort(low.begin(), low.end(), [](auto a, auto b) { return a->x < b->x; });
  std::vector<const SupportPoint*> hull;
  for (const auto* p : low) {
    while (hull.size() >= 2) {
      const auto* a = hull[hull.size() - 2];
      const auto* b = hull.back();
      // drop b unless it lies strictly below segment a-p
      Rational cross = (b->y - a->y) * Rational(p->x - a->x) - (p->y - a->y) * Rational(b->x - a->x);
      if (cross >= Rational(0)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    Edge e;
    e.x1 = hull[i]->x;
    e.y1 = hull[i]->y;
    e.x2 = hull[i + 1]->x;
    e.y2 = hull[i + 1]->y;
    e.lambda = (e.y1 - e.y2) / Rational(e.x2 - e.x1);
    e.char_poly = edge_char_poly(points, e.lambda);
    for (const auto& p : points) {
      if (p.x >= e.x1 && p.x <= e.x2 && p.y + e.lambda * Rational(p.x) == e.y1 + e.lambda * Rational(e.x1)) {
        e.on_edge.push_back(p.x);
      }
    }
    d.edges.push_back(std::move(e));
  }
  for (const auto* h : hull) {
    if (h->origin == Origin::Both) d.vertex_candidates.push_back({h->x, h->y, h->p / h->q});
  }
  return d;
}

ExtPoly edge_char_poly(const std::vector<SupportPoint>& points, const Rational& lambda) {
  if (points.empty()) return {};
  Rational m = points.front().y + lambda * Rational(points.front().x);
  for (const auto& p : points) m = std::min(m, p.y + lambda * Rational(p.x));
  std::vector<ExtElem> c;
  for (const auto& p : points) {
    if (p.y + lambda * Rational(p.x) != m) continue;
    if (c.size() <= static_cast<size_t>(p.x)) c.resize(static_cast<size_t>(p.x) + 1, ExtElem(0));
    ExtElem v(0);
    if (p.origin != Origin::P) v += p.q * ExtElem(lambda);
    if (p.origin != Origin::Q) v -= p.p;
    c[static_cast<size_t>(p.x)] += v;
  }
  return ExtPoly(std::move(c));
}

std::vector<VertexVerdict> vertex_critical_check(const NewtonDiagram& d, const Rational& lambda_floor) {
  std::vector<VertexVerdict> out;
  for (const auto& v : d.vertex_candidates) {
    VertexVerdict verdict;
    verdict.x = v.x;
    verdict.ratio = v.ratio;
    if (!v.ratio.is_rational()) {
      verdict.kind = VertexVerdict::Kind::DicriticalSuspect;
      out.push_back(verdict);
      continue;
    }
    const Rational& ls = v.ratio.rational();
    verdict.lambda = ls;
    bool ok = ls.is_positive() && ls > lambda_floor;
    for (const auto& p : d.points) {
      if (!ok) break;
      if (p.x == v.x && p.y == v.y) continue;
      if (!(p.y + Rational(p.x) * ls > v.y + Rational(v.x) * ls)) ok = false;
    }
    if (ok) verdict.kind = VertexVerdict::Kind::Critical;
    out.push_back(verdict);
  }
  return out;
}

bool is_acceptable(const CoeffProfile& profile, const Rational& lambda, const ExtElem& alpha) {
  if (alpha.is_zero() || !lambda.is_positive()) return false;
  ExtPoly phi = edge_char_poly(support_points(profile), lambda);
  return phi.eval(alpha).is_zero();
}

}  // namespace pbound
