#include "pbound/elim.hpp"

#include <stdexcept>

namespace pbound {

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences
  size_t n = xs.size();
  std::vector<Rational> d = ys;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  QPoly p;
  for (size_t k = n; k-- > 0;) {
    p = p * QPoly({-xs[k], Rational(1)}) + QPoly::constant(d[k]);
  }
  return p;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, size_t cols) {
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t piv = row;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rational inv = m[row][c].inverse();
    for (size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<size_t>(pivot_col[r])] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

BiPoly swap_zw(const BiPoly& f) { return f.compose(BiPoly::w(), BiPoly::z()); }

QPoly content_w(const BiPoly& f) {
  QPoly g;
  for (const auto& c : as_w_poly(f)) g = gcd(g, c);
  return g;
}

BiPoly from_qpoly(const QPoly& p, bool in_w) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (!p[i].is_zero()) out.add_term(ExtElem(p[i]), in_w ? Rational(0) : Rational(i), in_w ? i : 0);
  }
  return out;
}

QPoly eval_z(const BiPoly& f, const Rational& z0) {
  auto ws = as_w_poly(f);
  std::vector<Rational> c;
  for (const auto& q : ws) c.push_back(q.eval(z0));
  return QPoly(std::move(c));
}

QPoly eval_w(const BiPoly& f, const Rational& w0) {
  auto ws = as_w_poly(f);
  QPoly acc;
  for (size_t i = ws.size(); i-- > 0;) acc = acc * QPoly::constant(w0) + ws[i];
  return acc;
}

QPoly resultant_w(const BiPoly& a, const BiPoly& b) {
  auto wa = as_w_poly(a), wb = as_w_poly(b);
  if (wa.empty() || wb.empty()) return {};
  int da = static_cast<int>(wa.size()) - 1, db = static_cast<int>(wb.size()) - 1;
  int sa = 0, sb = 0;
  for (const auto& q : wa) sa = std::max(sa, q.degree());
  for (const auto& q : wb) sb = std::max(sb, q.degree());
  int bound = da * sb + db * sa;
  std::vector<Rational> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= bound; ++t) {
    Rational x(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
    if (wa.back().eval(x).is_zero() || wb.back().eval(x).is_zero()) continue;
    xs.push_back(x);
    ys.push_back(resultant(eval_z(a, x), eval_z(b, x)));
  }
  return interpolate(xs, ys);
}

}  // namespace pbound
