#pragma once

#include <vector>

#include "pbound/bipoly.hpp"
#include "pbound/factor.hpp"

namespace pbound {

/// Resultant of two univariate polynomials over a field (Euclidean remainder sequence).
template <class F>
F resultant(UPoly<F> a, UPoly<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F acc(1);
  while (b.degree() > 0) {
    UPoly<F> r = a % b;
    if (r.is_zero()) return F(0);
    int m = a.degree(), n = b.degree(), k = r.degree();
    F lb = b.lead(), pw(1);
    for (int i = 0; i < m - k; ++i) pw = pw * lb;
    acc = acc * pw;
    if ((m % 2 == 1) && (n % 2 == 1)) acc = F(0) - acc;
    a = std::move(b);
    b = std::move(r);
  }
  F pw(1);
  for (int i = 0; i < a.degree(); ++i) pw = pw * b.lead();
  return acc * pw;
}

/// The unique polynomial of degree < n through n points with distinct abscissae.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Determinant by Gaussian elimination; the matrix is consumed.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Basis of {x : m x = 0} over ℚ; m has `cols` columns.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, size_t cols);

/// f(z0, w) for a ν = 1 rational polynomial.
QPoly eval_z(const BiPoly& f, const Rational& z0);
/// f(z, w0) for a ν = 1 rational polynomial.
QPoly eval_w(const BiPoly& f, const Rational& w0);

/// f(w, z).
BiPoly swap_zw(const BiPoly& f);
/// gcd of the w-coefficients, a polynomial in z alone (monic).
QPoly content_w(const BiPoly& f);
/// Embeds a univariate polynomial as a polynomial in z (or w when in_w is set).
BiPoly from_qpoly(const QPoly& p, bool in_w = false);

/// Res_w(a, b) as a polynomial in z, by evaluation and interpolation.
QPoly resultant_w(const BiPoly& a, const BiPoly& b);

}  // namespace pbound
