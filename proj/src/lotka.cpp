#include "pbound/lotka.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbound {

std::string LvParams::str() const { return a.str() + "," + b.str() + "," + c.str(); }

OdeSystem lv_system(const LvParams& p) {
  BiPoly z = BiPoly::z(), w = BiPoly::w();
  BiPoly one = BiPoly::constant(ExtElem(1));
  BiPoly zdot = z * (z + w * ExtElem(p.c) - one);
  BiPoly wdot = w * (z * ExtElem(p.b) + w - BiPoly::constant(ExtElem(p.a)));
  return {wdot, zdot};
}

Genericity genericity_check(const LvParams& p) {
  Genericity g;
  g.clauses.push_back({"a", true, !p.a.is_positive(), "a = " + p.a.str()});
  g.clauses.push_back({"c", true, !p.c.is_negative(), "c = " + p.c.str()});
  if (p.a.is_zero()) {
    g.clauses.push_back({"c-1/a", false, false, "undefined for a = 0"});
  } else {
    Rational d = p.c - p.a.inverse();
    g.clauses.push_back({"c-1/a", true, !d.is_positive() || d == Rational(1), "c - 1/a = " + d.str()});
  }
  for (const auto& c : g.clauses) {
    if (!c.ok) {
      g.holds = false;
      if (g.violated.empty()) g.violated = c.name;
    }
  }
  return g;
}

LvTriple lv_triple(const LvParams& p, const Caps& caps) {
  OdeSystem axis = line_transform(lv_system(p), 1, 0, 0).axis;
  return {multiplicity_at(axis, PointTarget::infinity(0), caps),
          multiplicity_at(axis, PointTarget::finite(0, ExtElem(p.a)), caps),
          multiplicity_at(axis, PointTarget::finite(0, ExtElem(0)), caps)};
}

std::string to_string(LvClassification::Kind k) {
  switch (k) {
    case LvClassification::Kind::StrictCurve:
      return "strict-curve";
    case LvClassification::Kind::NoStrictCurve:
      return "no-strict-curve";
    case LvClassification::Kind::Inapplicable:
      return "inapplicable";
    case LvClassification::Kind::Inconclusive:
      return "inconclusive";
  }
  return "";
}

namespace {

std::string curve_text(const Rational& a) {
  if (a == Rational(1)) return "(z-1)+w";
  if (a == Rational(-1)) return "-(z-1)+w";
  return a.str() + "*(z-1)+w";
}

}  // namespace

LvClassification classify(const LvParams& p, const Caps& caps) {
  LvClassification out;
  out.genericity = genericity_check(p);
  out.discriminant = p.a * (Rational(1) - p.c) + (Rational(1) - p.b);
  if (!out.genericity.holds) {
    out.kind = LvClassification::Kind::Inapplicable;
    out.notes.push_back("genericity clause '" + out.genericity.violated + "' fails");
    return out;
  }
  OdeSystem sys = lv_system(p);
  if (out.discriminant.is_zero()) {
    BiPoly f = (BiPoly::z() - BiPoly::constant(ExtElem(1))) * ExtElem(p.a) + BiPoly::w();
    auto v = verify_darboux(sys, f);
    if (auto* cert = std::get_if<DarbouxCertificate>(&v)) {
      out.kind = LvClassification::Kind::StrictCurve;
      out.curve = *cert;
      out.curve_text = curve_text(p.a);
    } else {
      out.kind = LvClassification::Kind::Inconclusive;
      out.notes.push_back("expected curve failed verification");
    }
    return out;
  }
  BoundReport rep = axis_degree_bound(line_transform(sys, 1, 0, 0).axis, caps);
  std::optional<int> bound = rep.sum_bound;
  out.bound = rep;
  int n = bound ? std::clamp(*bound, 1, 3) : 3;
  out.search_degree = n;
  out.search = search_darboux(sys, n, caps);
  bool found_strict = false;
  for (const auto& c : out.search->certificates) {
    if (c.strict) found_strict = true;
  }
  if (found_strict) {
    out.kind = LvClassification::Kind::Inconclusive;
    out.notes.push_back("strict certificate found although the discriminant is nonzero");
  } else if (!bound || *bound > 3 || out.search->partial) {
    out.kind = LvClassification::Kind::Inconclusive;
    out.notes.push_back("no strict curve up to total degree " + std::to_string(n) + ", but the degree bound is not covered");
  } else {
    out.kind = LvClassification::Kind::NoStrictCurve;
    out.notes.push_back("deg_w bound " + std::to_string(*bound) + "; searched total degree " + std::to_string(n));
  }
  return out;
}

SymmetryImage apply_symmetry(const LvParams& p, LvSymmetry which) {
  SymmetryImage out;
  if (which == LvSymmetry::Swap) {
    if (p.a.is_zero()) throw std::invalid_argument("swap symmetry needs a != 0");
    ExtElem ia(p.a.inverse());
    out.params = {p.a.inverse(), p.c, p.b};
    out.Z = BiPoly::w() * ia;
    out.W = BiPoly::z() * ia;
    return out;
  }
  if (p.c == Rational(1)) throw std::invalid_argument("inversion symmetry needs c != 1");
  out.params = {Rational(1) - p.b, Rational(1) - p.a, p.c / (p.c - Rational(1))};
  out.Z = BiPoly::monomial(ExtElem(1), Rational(-1), 0);
  out.W = BiPoly::monomial(ExtElem(Rational(1) - p.c), Rational(-1), 1);
  return out;
}

bool symmetry_holds(const LvParams& p, const SymmetryImage& im) {
  OdeSystem s = lv_system(p);
  auto lie = [&](const BiPoly& f) { return s.Q * f.dz() + s.P * f.dw(); };
  BiPoly Zdot = lie(im.Z), Wdot = lie(im.W);
  const LvParams& q = im.params;
  BiPoly one = BiPoly::constant(ExtElem(1));
  BiPoly Zexp = im.Z * (im.Z + im.W * ExtElem(q.c) - one);
  BiPoly Wexp = im.W * (im.Z * ExtElem(q.b) + im.W - BiPoly::constant(ExtElem(q.a)));
  return (Zdot * Wexp - Wdot * Zexp).is_zero();
}

}  // namespace pbound
