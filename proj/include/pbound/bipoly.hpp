#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbound/tower.hpp"

namespace pbound {

/// Sparse polynomial in w whose coefficients are Laurent–Puiseux polynomials in z:
/// z-exponents are integers divided by a shared ramification ν.
class BiPoly {
 public:
  using Key = std::pair<int, long>;  // (w-exponent, z-exponent numerator over nu)

  BiPoly() = default;
  static BiPoly constant(const ExtElem& c);
  static BiPoly z();
  static BiPoly w();
  static BiPoly monomial(const ExtElem& c, const Rational& zexp, int wexp);

  long nu() const { return nu_; }
  /// Re-expresses exponents over a multiple of the current ν.
  BiPoly with_nu(long nu) const;
  /// Drops ν to the smallest value compatible with the stored exponents.
  void reduce_nu();

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, ExtElem>& terms() const { return terms_; }
  Rational zexp(const Key& k) const { return Rational(k.second, nu_); }
  ExtElem coeff(const Rational& zexp, int wexp) const;
  void add_term(const ExtElem& c, const Rational& zexp, int wexp);

  int deg_w() const;    // -1 for zero
  /// Total degree for ν = 1 polynomials with nonnegative exponents.
  int total_degree() const;
  Rational min_zexp() const;
  Rational max_zexp() const;
  bool is_polynomial() const;  // ν = 1 and all z-exponents >= 0
  bool all_rational() const;

  /// The coefficient of w^i as a polynomial in z alone.
  BiPoly w_coeff(int i) const;
  BiPoly mul_zpow(const Rational& e) const;

  /// f(z, s) for a polynomial s(z, w).
  BiPoly compose_w(const BiPoly& s) const;
  /// f(zs, ws) for ν = 1 polynomials with nonnegative exponents.
  BiPoly compose(const BiPoly& zs, const BiPoly& ws) const;

  BiPoly dz() const;
  BiPoly dw() const;
  BiPoly pow(int e) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) { return a * ExtElem(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const ExtElem& s);
  friend BiPoly operator*(const ExtElem& s, const BiPoly& a) { return a * s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return (a - b).is_zero(); }

  /// Compact text such as "z^2+m*w" with the given variable names.
  std::string str(const std::string& zname = "z", const std::string& wname = "w") const;

 private:
  std::map<Key, ExtElem> terms_;
  long nu_ = 1;
};

/// Polynomials over ℚ in z, w, viewed as polynomials in w with ℚ[z] coefficients.
std::vector<UPoly<Rational>> as_w_poly(const BiPoly& f);
BiPoly from_w_poly(const std::vector<UPoly<Rational>>& c);

/// gcd over ℚ[z, w] of ν = 1 rational polynomials, normalized to a monic leading term.
BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b);

struct BiDivision {
  BiPoly quotient, remainder;
};
/// Lex (w, then z) division of ν = 1 polynomials; remainder collects terms whose
/// leading monomial is not divisible by lm(d). Exact when d | n.
BiDivision bivariate_divide(const BiPoly& n, const BiPoly& d);

}  // namespace pbound
