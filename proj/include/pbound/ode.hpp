#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbound/bipoly.hpp"

namespace pbound {

/// dw/dz = P(z, w) / Q(z, w).
struct OdeSystem {
  BiPoly P, Q;

  OdeSystem() = default;
  OdeSystem(BiPoly p, BiPoly q) : P(std::move(p)), Q(std::move(q)) {}

  /// max{deg P, deg Q} for polynomial systems.
  int degree() const { return std::max(P.total_degree(), Q.total_degree()); }
  int deg_w_P() const { return P.deg_w(); }
  int deg_w_Q() const { return Q.deg_w(); }
  long nu() const;
};

/// Checks the top-level coprimality requirement; returns the normalized common
/// factor (constant 1 when coprime).
BiPoly common_factor(const OdeSystem& sys);

struct LowTerm {
  bool finite = false;
  Rational exp;  // lowest z-exponent
  ExtElem coeff;
};

/// Lowest z-term of each w-coefficient of P and Q; index = power of w.
struct CoeffProfile {
  std::vector<LowTerm> p, q;
  const LowTerm& P(int i) const;
  const LowTerm& Q(int i) const;
};

CoeffProfile coeff_profile(const OdeSystem& sys);

/// Where to move the origin: a finite point, a point at w = ∞, or a shear.
struct PointTarget {
  enum class Kind { Finite, Infinity, Shear };
  Kind kind = Kind::Finite;
  Rational z0;
  ExtElem w0;
  Rational a{1}, b{0}, c{1};  // shear W = a(w - w0) + b(z - z0), Z = c(z - z0)

  static PointTarget finite(Rational z0, ExtElem w0) { return {Kind::Finite, std::move(z0), std::move(w0)}; }
  static PointTarget infinity(Rational z0) { return {Kind::Infinity, std::move(z0), ExtElem(0)}; }
  static PointTarget shear(Rational a, Rational b, Rational c, Rational z0 = Rational(0), ExtElem w0 = ExtElem(0)) {
    return {Kind::Shear, std::move(z0), std::move(w0), std::move(a), std::move(b), std::move(c)};
  }
  std::string str() const;
};

OdeSystem transform_point(const OdeSystem& sys, const PointTarget& target);

/// Removes the monomial content z^i w^j shared by P and Q.
OdeSystem cancel_monomial_content(const OdeSystem& sys, bool cancel_z = true);

struct Term {
  Rational exp;
  ExtElem coeff;
};

struct PuiseuxBranch {
  std::vector<Term> terms;
  long nu = 1;
  int conjugacy = 1;  // number of conjugate branches represented
  Tower tower;        // field of the coefficients
  bool exact = false; // the listed terms are the whole solution
};

/// Equation for the remainder w1 after w = α z^λ + w1. Throws "not an acceptable pair".
OdeSystem substitute_branch(const OdeSystem& sys, const Rational& lambda, const ExtElem& alpha);
/// Same transformation without the acceptability check.
OdeSystem substitute_unchecked(const OdeSystem& sys, const Rational& lambda, const ExtElem& alpha);

/// Lowest z-exponent of Q(z,b) b' - P(z,b) for the first `order` terms of b;
/// nullopt means the residual vanishes identically.
std::optional<Rational> residual_valuation(const OdeSystem& sys, const std::vector<Term>& terms, size_t order);

BiPoly series_poly(const std::vector<Term>& terms, size_t order);

}  // namespace pbound
