#include "pbound/darboux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pbound/elim.hpp"

namespace pbound {

BiPoly apply_field(const OdeSystem& sys, const BiPoly& f) { return sys.Q * f.dz() + sys.P * f.dw(); }

namespace {

int deg_z(const BiPoly& f) {
  int d = -1;
  for (const auto& [k, c] : f.terms()) d = std::max(d, static_cast<int>(f.zexp(k).num().get_si()));
  return d;
}

// Factors of a one-variable polynomial, as bivariate polynomials.
std::vector<BiPoly> univariate_components(const QPoly& p, bool in_w) {
  std::vector<BiPoly> out;
  if (p.degree() <= 0) return out;
  for (const auto& f : factor_univariate(p, std::max(8, p.degree()))) out.push_back(from_qpoly(f.poly, in_w));
  return out;
}

bool irreducible_q(const QPoly& p) {
  auto fs = factor_univariate(p, std::max(8, p.degree()));
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

struct Irreducibility {
  bool irreducible = false;
  bool certified = false;
};

// A primitive f whose specialization at z0 keeps its w-degree and is irreducible
// cannot factor, since any factorization would specialize.
Irreducibility check_irreducible(const BiPoly& f) {
  if (f.deg_w() == 0) return {irreducible_q(as_w_poly(f)[0]), true};
  if (deg_z(f) == 0) return {irreducible_q(eval_z(f, Rational(0))), true};
  if (content_w(f).degree() > 0 || content_w(swap_zw(f)).degree() > 0) return {false, true};
  for (const BiPoly& g : {f, swap_zw(f)}) {
    QPoly lc = as_w_poly(g).back();
    int tries = 0;
    for (long t = 0; tries < 12; ++t) {
      Rational x(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
      if (lc.eval(x).is_zero()) continue;
      ++tries;
      if (irreducible_q(eval_z(g, x))) return {true, true};
    }
  }
  return {true, false};
}

}  // namespace

Strictness strictness_check(const BiPoly& f) {
  Strictness s;
  for (bool in_w : {false, true}) {
    QPoly c = content_w(in_w ? swap_zw(f) : f);
    for (auto& comp : univariate_components(c, in_w)) s.components.push_back(comp);
  }
  s.strict = s.components.empty();
  return s;
}

BiPoly normalize_curve(const BiPoly& f) {
  if (f.is_zero()) return f;
  // map keys are (w-exp, z-exp) so the last entry leads
  return f * f.terms().rbegin()->second.inverse();
}

std::variant<DarbouxCertificate, NotDarboux> verify_darboux(const OdeSystem& sys, const BiPoly& f) {
  if (f.is_zero() || f.total_degree() == 0) throw std::invalid_argument("constant candidate");
  BiDivision d = bivariate_divide(apply_field(sys, f), f);
  if (!d.remainder.is_zero()) return NotDarboux{d.remainder};
  DarbouxCertificate c;
  c.f = f;
  c.cofactor = d.quotient;
  Strictness s = strictness_check(f);
  c.strict = s.strict;
  c.constant_components = s.components;
  Irreducibility irr = check_irreducible(f);
  c.irreducible = irr.irreducible;
  c.certified = irr.certified;
  return c;
}

BiPoly extactic(const OdeSystem& sys, int n) {
  std::vector<BiPoly> basis;
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) basis.push_back(BiPoly::monomial(ExtElem(1), Rational(i), d - i));
  }
  size_t m = basis.size();
  // rows[k][j] = X^k(v_j)
  std::vector<std::vector<BiPoly>> rows{basis};
  for (size_t k = 1; k < m; ++k) {
    std::vector<BiPoly> next;
    for (const auto& e : rows.back()) next.push_back(apply_field(sys, e));
    rows.push_back(std::move(next));
  }
  int dz = 0, dw = 0;
  for (const auto& row : rows) {
    int rz = 0, rw = 0;
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      rz = std::max(rz, deg_z(e));
      rw = std::max(rw, e.deg_w());
    }
    dz += rz;
    dw += rw;
  }
  auto point = [](long t) { return Rational(t % 2 == 0 ? t / 2 : -(t + 1) / 2); };
  std::vector<Rational> zs, ws;
  for (long t = 0; t <= dz; ++t) zs.push_back(point(t));
  for (long t = 0; t <= dw; ++t) ws.push_back(point(t));
  // coefficient of w^j as values over zs
  std::vector<std::vector<Rational>> by_power(static_cast<size_t>(dw) + 1);
  for (const auto& z0 : zs) {
    std::vector<std::vector<QPoly>> specialized(m, std::vector<QPoly>(m));
    for (size_t k = 0; k < m; ++k) {
      for (size_t j = 0; j < m; ++j) specialized[k][j] = rows[k][j].is_zero() ? QPoly() : eval_z(rows[k][j], z0);
    }
    std::vector<Rational> vals;
    for (const auto& w0 : ws) {
      std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
      for (size_t k = 0; k < m; ++k) {
        for (size_t j = 0; j < m; ++j) mat[k][j] = specialized[k][j].eval(w0);
      }
      vals.push_back(determinant(std::move(mat)));
    }
    QPoly inw = interpolate(ws, vals);
    for (int j = 0; j <= dw; ++j) by_power[static_cast<size_t>(j)].push_back(inw[j]);
  }
  std::vector<QPoly> coeffs;
  for (const auto& v : by_power) coeffs.push_back(interpolate(zs, v));
  return from_w_poly(coeffs);
}

namespace {

// Lifts g0 * h0 = E(z0, w) to E(z0 + t, w) mod t^N with G monic in w.
std::vector<QPoly> hensel_lift(const std::vector<QPoly>& e, const QPoly& g0, int N) {
  QPoly h0 = e[0] / g0;
  XGcd<Rational> x = xgcd(g0, h0);
  std::vector<QPoly> G{g0}, H{h0};
  for (int k = 1; k < N; ++k) {
    QPoly r = static_cast<size_t>(k) < e.size() ? e[static_cast<size_t>(k)] : QPoly();
    for (int i = 1; i < k; ++i) r -= G[static_cast<size_t>(i)] * H[static_cast<size_t>(k - i)];
    QPoly gk = (r * x.t) % g0;
    QPoly hk = (r - gk * h0) / g0;
    G.push_back(gk);
    H.push_back(hk);
  }
  return G;
}

// Finds the smallest ℓ(t) with ℓ·G a polynomial of total degree ≤ n.
std::optional<BiPoly> recover(const std::vector<QPoly>& G, int d, int n, const Rational& z0) {
  int N = static_cast<int>(G.size());
  auto gcoef = [&](int j, int k) -> Rational {
    return (k >= 0 && k < N) ? G[static_cast<size_t>(k)][j] : Rational(0);
  };
  for (int L = 0; L <= n - d; ++L) {
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j < d; ++j) {
      for (int k = n - j + 1; k < N; ++k) {
        std::vector<Rational> row(static_cast<size_t>(L) + 1);
        for (int i = 0; i <= L; ++i) row[static_cast<size_t>(i)] = gcoef(j, k - i);
        rows.push_back(std::move(row));
      }
    }
    auto ns = nullspace(rows, static_cast<size_t>(L) + 1);
    if (ns.empty()) continue;
    const auto& ell = ns[0];
    BiPoly f;
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k <= n - j; ++k) {
        Rational c(0);
        for (int i = 0; i <= std::min(L, k); ++i) c += ell[static_cast<size_t>(i)] * (j == d ? (k == i ? Rational(1) : Rational(0)) : gcoef(j, k - i));
        if (!c.is_zero()) f.add_term(ExtElem(c), Rational(k), j);
      }
    }
    return f.compose(BiPoly::z() - BiPoly::constant(ExtElem(z0)), BiPoly::w());
  }
  return std::nullopt;
}

}  // namespace

DarbouxSearch search_darboux(const OdeSystem& sys, int max_degree, const Caps& caps) {
  DarbouxSearch out;
  std::vector<BiPoly> seen;
  auto consider = [&](const BiPoly& cand) {
    BiPoly f = normalize_curve(cand);
    if (f.total_degree() <= 0) return;
    for (const auto& s : seen) {
      if (s == f) return;
    }
    seen.push_back(f);
    auto v = verify_darboux(sys, f);
    if (auto* c = std::get_if<DarbouxCertificate>(&v); c && c->irreducible) out.certificates.push_back(*c);
  };
  for (int n = 1; n <= max_degree; ++n) {
    int m = (n + 1) * (n + 2) / 2;
    if (m > caps.extactic_dim) {
      out.partial = true;
      out.flags.push_back("extactic cap reached at degree " + std::to_string(n));
      break;
    }
    BiPoly E = extactic(sys, n);
    if (E.is_zero()) {
      out.flags.push_back("extactic vanishes identically at degree " + std::to_string(n));
      continue;
    }
    QPoly cont = content_w(E);
    if (cont.degree() > 0) {
      for (const auto& f : small_factors(cont, n)) consider(from_qpoly(f.poly));
    }
    if (E.deg_w() == 0) continue;
    BiPoly prim = bivariate_divide(E, from_qpoly(cont)).quotient;
    BiPoly sqf = bivariate_divide(prim, bivariate_gcd(prim, prim.dw())).quotient;
    QPoly lc = as_w_poly(sqf).back();
    Rational z0;
    QPoly specialized;
    for (long t = 0;; ++t) {
      z0 = Rational(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
      if (lc.eval(z0).is_zero()) continue;
      specialized = eval_z(sqf, z0);
      if (gcd(specialized, specialized.derivative()).degree() == 0) break;
    }
    auto fs = small_factors(specialized, n);
    std::vector<QPoly> e = as_w_poly(swap_zw(sqf.compose(BiPoly::z() + BiPoly::constant(ExtElem(z0)), BiPoly::w())));
    // e[k] is the coefficient of t^k as a polynomial in w
    size_t nf = fs.size();
    if (nf > 20) {
      out.partial = true;
      out.flags.push_back("too many modular factors at degree " + std::to_string(n));
      nf = 20;
    }
    for (unsigned long mask = 1; mask < (1UL << nf); ++mask) {
      QPoly g0 = QPoly::constant(1);
      for (size_t i = 0; i < nf; ++i) {
        if (mask & (1UL << i)) g0 = g0 * fs[i].poly;
      }
      if (g0.degree() > n) continue;
      g0 = g0.monic();
      auto G = hensel_lift(e, g0, 2 * n + 2);
      if (auto f = recover(G, g0.degree(), n, z0)) consider(*f);
    }
  }
  std::sort(out.certificates.begin(), out.certificates.end(), [](const auto& a, const auto& b) {
    if (a.f.total_degree() != b.f.total_degree()) return a.f.total_degree() < b.f.total_degree();
    if (a.f.deg_w() != b.f.deg_w()) return a.f.deg_w() < b.f.deg_w();
    return a.f.str() < b.f.str();
  });
  return out;
}

}  // namespace pbound
