#include "pbound/ode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pbound/newton.hpp"

namespace pbound {

long OdeSystem::nu() const { return std::lcm(P.nu(), Q.nu()); }

BiPoly common_factor(const OdeSystem& sys) { return bivariate_gcd(sys.P, sys.Q); }

namespace {

std::vector<LowTerm> low_terms(const BiPoly& f, int size) {
  std::vector<LowTerm> out(static_cast<size_t>(size));
  for (const auto& [k, c] : f.terms()) {
    auto& slot = out[static_cast<size_t>(k.first)];
    Rational e = f.zexp(k);
    if (!slot.finite || e < slot.exp) slot = {true, e, c};
  }
  for (auto& s : out) {
    if (s.finite) (void)s.coeff.certified_nonzero();
  }
  return out;
}

const LowTerm kAbsent{};

}  // namespace

const LowTerm& CoeffProfile::P(int i) const {
  return (i >= 0 && i < static_cast<int>(p.size())) ? p[static_cast<size_t>(i)] : kAbsent;
}
const LowTerm& CoeffProfile::Q(int i) const {
  return (i >= 0 && i < static_cast<int>(q.size())) ? q[static_cast<size_t>(i)] : kAbsent;
}

CoeffProfile coeff_profile(const OdeSystem& sys) {
  int n = std::max(sys.P.deg_w(), sys.Q.deg_w()) + 1;
  return {low_terms(sys.P, n), low_terms(sys.Q, n)};
}

std::string PointTarget::str() const {
  switch (kind) {
    case Kind::Finite:
      return "(" + z0.str() + "," + w0.str() + ")";
    case Kind::Infinity:
      return "(" + z0.str() + ",inf)";
    case Kind::Shear:
      return "shear(" + a.str() + "," + b.str() + "," + c.str() + ")@(" + z0.str() + "," + w0.str() + ")";
  }
  return "";
}

OdeSystem cancel_monomial_content(const OdeSystem& sys, bool cancel_z) {
  if (sys.P.is_zero() || sys.Q.is_zero()) return sys;
  int wmin = -1;
  for (const BiPoly* f : {&sys.P, &sys.Q}) {
    for (const auto& [k, c] : f->terms()) wmin = wmin < 0 ? k.first : std::min(wmin, k.first);
  }
  Rational zmin = std::min(sys.P.min_zexp(), sys.Q.min_zexp());
  auto shrink = [&](const BiPoly& f) {
    BiPoly out;
    for (const auto& [k, c] : f.terms()) out.add_term(c, cancel_z ? f.zexp(k) - zmin : f.zexp(k), k.first - wmin);
    return out;
  };
  return {shrink(sys.P), shrink(sys.Q)};
}

OdeSystem transform_point(const OdeSystem& sys, const PointTarget& t) {
  BiPoly z = BiPoly::z(), w = BiPoly::w();
  switch (t.kind) {
    case PointTarget::Kind::Finite: {
      BiPoly zs = z + BiPoly::constant(ExtElem(t.z0));
      BiPoly ws = w + BiPoly::constant(t.w0);
      return {sys.P.compose(zs, ws), sys.Q.compose(zs, ws)};
    }
    case PointTarget::Kind::Infinity: {
      BiPoly zs = z + BiPoly::constant(ExtElem(t.z0));
      BiPoly P = sys.P.compose(zs, w), Q = sys.Q.compose(zs, w);
      int D = std::max(P.deg_w(), Q.deg_w());
      // w̄ = 1/w: dw̄/dz = -w̄² P(z, 1/w̄) / Q(z, 1/w̄), both scaled by w̄^D
      BiPoly Pb, Qb;
      for (const auto& [k, c] : P.terms()) Pb.add_term(-c, P.zexp(k), D - k.first + 2);
      for (const auto& [k, c] : Q.terms()) Qb.add_term(c, Q.zexp(k), D - k.first);
      return cancel_monomial_content({Pb, Qb});
    }
    case PointTarget::Kind::Shear: {
      if (t.a.is_zero() || t.c.is_zero()) throw std::invalid_argument("degenerate shear");
      ExtElem ia(t.a.inverse()), ic(t.c.inverse());
      BiPoly zs = BiPoly::constant(ExtElem(t.z0)) + z * ic;
      BiPoly ws = BiPoly::constant(t.w0) + (w - z * (ExtElem(t.b) * ic)) * ia;
      BiPoly P = sys.P.compose(zs, ws), Q = sys.Q.compose(zs, ws);
      return {P * ExtElem(t.a) + Q * ExtElem(t.b), Q * ExtElem(t.c)};
    }
  }
  throw std::logic_error("unknown target");
}

OdeSystem substitute_unchecked(const OdeSystem& sys, const Rational& lambda, const ExtElem& alpha) {
  BiPoly W = BiPoly::monomial(alpha, lambda, 0) + BiPoly::w();
  BiPoly P = sys.P.compose_w(W);
  BiPoly Q = sys.Q.compose_w(W);
  BiPoly P1 = P - Q * BiPoly::monomial(alpha * ExtElem(lambda), lambda - Rational(1), 0);
  Rational m = Q.min_zexp();
  if (!P1.is_zero()) m = std::min(m, P1.min_zexp());
  return {P1.mul_zpow(-m), Q.mul_zpow(-m)};
}

OdeSystem substitute_branch(const OdeSystem& sys, const Rational& lambda, const ExtElem& alpha) {
  if (!lambda.is_positive() || alpha.is_zero() || !is_acceptable(coeff_profile(sys), lambda, alpha)) {
    throw std::invalid_argument("not an acceptable pair");
  }
  return substitute_unchecked(sys, lambda, alpha);
}

BiPoly series_poly(const std::vector<Term>& terms, size_t order) {
  BiPoly b;
  for (size_t i = 0; i < std::min(order, terms.size()); ++i) b.add_term(terms[i].coeff, terms[i].exp, 0);
  return b;
}

std::optional<Rational> residual_valuation(const OdeSystem& sys, const std::vector<Term>& terms, size_t order) {
  BiPoly b = series_poly(terms, order);
  BiPoly r = sys.Q.compose_w(b) * b.dz() - sys.P.compose_w(b);
  if (r.is_zero()) return std::nullopt;
  return r.min_zexp();
}

}  // namespace pbound
