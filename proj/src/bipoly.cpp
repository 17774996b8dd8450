#include "pbound/bipoly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace pbound {
namespace {

long exp_num(const Rational& e, long nu) {
  Rational scaled = e * Rational(nu);
  if (!scaled.is_integer()) throw std::logic_error("exponent not on the ramification grid");
  return scaled.num().get_si();
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace

BiPoly BiPoly::constant(const ExtElem& c) {
  BiPoly p;
  if (!c.is_zero()) p.terms_[{0, 0}] = c;
  return p;
}

BiPoly BiPoly::z() { return monomial(ExtElem(1), Rational(1), 0); }
BiPoly BiPoly::w() { return monomial(ExtElem(1), Rational(0), 1); }

BiPoly BiPoly::monomial(const ExtElem& c, const Rational& zexp, int wexp) {
  BiPoly p;
  p.nu_ = zexp.den().get_si();
  p.add_term(c, zexp, wexp);
  return p;
}

BiPoly BiPoly::with_nu(long nu) const {
  if (nu % nu_ != 0) throw std::logic_error("ramification must be a multiple");
  if (nu == nu_) return *this;
  long f = nu / nu_;
  BiPoly out;
  out.nu_ = nu;
  for (const auto& [k, c] : terms_) out.terms_[{k.first, k.second * f}] = c;
  return out;
}

void BiPoly::reduce_nu() {
  long g = nu_;
  for (const auto& [k, c] : terms_) g = std::gcd(g, k.second);
  if (g <= 1) return;
  std::map<Key, ExtElem> t;
  for (auto& [k, c] : terms_) t[{k.first, k.second / g}] = c;
  terms_ = std::move(t);
  nu_ /= g;
}

ExtElem BiPoly::coeff(const Rational& zexp, int wexp) const {
  Rational scaled = zexp * Rational(nu_);
  if (!scaled.is_integer()) return ExtElem(0);
  auto it = terms_.find({wexp, scaled.num().get_si()});
  return it == terms_.end() ? ExtElem(0) : it->second;
}

void BiPoly::add_term(const ExtElem& c, const Rational& zexp, int wexp) {
  if (c.is_zero()) return;
  long d = zexp.den().get_si();
  if (nu_ % d != 0) *this = with_nu(lcm_long(nu_, d));
  Key k{wexp, exp_num(zexp, nu_)};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPoly::deg_w() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::total_degree() const {
  if (!is_polynomial()) throw std::logic_error("total degree of a non-polynomial");
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second + k.first);
  return static_cast<int>(d);
}

Rational BiPoly::min_zexp() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial");
  long m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return Rational(m, nu_);
}

Rational BiPoly::max_zexp() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial");
  long m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return Rational(m, nu_);
}

bool BiPoly::is_polynomial() const {
  if (nu_ != 1) {
    BiPoly t = *this;
    t.reduce_nu();
    if (t.nu_ != 1) return false;
  }
  for (const auto& [k, c] : terms_) {
    if (k.second < 0) return false;
  }
  return true;
}

bool BiPoly::all_rational() const {
  for (const auto& [k, c] : terms_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

BiPoly BiPoly::w_coeff(int i) const {
  BiPoly out;
  out.nu_ = nu_;
  for (const auto& [k, c] : terms_) {
    if (k.first == i) out.terms_[{0, k.second}] = c;
  }
  out.reduce_nu();
  return out;
}

BiPoly BiPoly::mul_zpow(const Rational& e) const {
  long d = e.den().get_si();
  BiPoly base = nu_ % d == 0 ? *this : with_nu(lcm_long(nu_, d));
  long s = exp_num(e, base.nu_);
  BiPoly out;
  out.nu_ = base.nu_;
  for (const auto& [k, c] : base.terms_) out.terms_[{k.first, k.second + s}] = c;
  out.reduce_nu();
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  long L = lcm_long(nu_, o.nu_);
  if (L != nu_) *this = with_nu(L);
  BiPoly other = o.nu_ == L ? o : o.with_nu(L);
  for (const auto& [k, c] : other.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  reduce_nu();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += (o * ExtElem(-1)); }

BiPoly operator*(const BiPoly& a, const ExtElem& s) {
  BiPoly out;
  if (s.is_zero()) return out;
  out.nu_ = a.nu_;
  for (const auto& [k, c] : a.terms_) {
    ExtElem v = c * s;
    if (!v.is_zero()) out.terms_[k] = v;
  }
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  long L = lcm_long(a.nu_, b.nu_);
  BiPoly x = a.nu_ == L ? a : a.with_nu(L);
  BiPoly y = b.nu_ == L ? b : b.with_nu(L);
  out.nu_ = L;
  for (const auto& [ka, ca] : x.terms_) {
    for (const auto& [kb, cb] : y.terms_) {
      BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      ExtElem v = ca * cb;
      auto it = out.terms_.find(k);
      if (it == out.terms_.end()) {
        out.terms_.emplace(k, v);
      } else {
        it->second += v;
      }
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (it->second.is_zero()) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  out.reduce_nu();
  return out;
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r = constant(ExtElem(1)), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BiPoly BiPoly::compose_w(const BiPoly& s) const {
  int dw = deg_w();
  BiPoly out;
  BiPoly spow = constant(ExtElem(1));
  for (int i = 0; i <= dw; ++i) {
    BiPoly ci = w_coeff(i);
    if (!ci.is_zero()) out += ci * spow;
    if (i < dw) spow = spow * s;
  }
  return out;
}

BiPoly BiPoly::compose(const BiPoly& zs, const BiPoly& ws) const {
  if (!is_polynomial()) throw std::logic_error("compose needs a polynomial");
  std::map<long, BiPoly> zpow;
  std::map<int, BiPoly> wpow;
  auto zp = [&](long e) -> const BiPoly& {
    auto it = zpow.find(e);
    if (it != zpow.end()) return it->second;
    return zpow.emplace(e, zs.pow(static_cast<int>(e))).first->second;
  };
  auto wp = [&](int e) -> const BiPoly& {
    auto it = wpow.find(e);
    if (it != wpow.end()) return it->second;
    return wpow.emplace(e, ws.pow(e)).first->second;
  };
  BiPoly red = *this;
  red.reduce_nu();
  BiPoly out;
  for (const auto& [k, c] : red.terms_) out += (zp(k.second) * wp(k.first)) * c;
  return out;
}

BiPoly BiPoly::dz() const {
  BiPoly out;
  out.nu_ = nu_;
  for (const auto& [k, c] : terms_) {
    if (k.second == 0) continue;
    out.terms_[{k.first, k.second - nu_}] = c * ExtElem(Rational(k.second, nu_));
  }
  out.reduce_nu();
  return out;
}

BiPoly BiPoly::dw() const {
  BiPoly out;
  out.nu_ = nu_;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) continue;
    out.terms_[{k.first - 1, k.second}] = c * ExtElem(k.first);
  }
  out.reduce_nu();
  return out;
}

std::string BiPoly::str(const std::string& zname, const std::string& wname) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, const ExtElem*>> order;
  for (const auto& [k, c] : terms_) order.emplace_back(k, &c);
  // total degree descending, then z-exponent descending
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    long ta = a.first.second + static_cast<long>(a.first.first) * nu_;
    long tb = b.first.second + static_cast<long>(b.first.first) * nu_;
    if (ta != tb) return ta > tb;
    return a.first.second > b.first.second;
  });
  std::string out;
  for (const auto& [k, cp] : order) {
    std::string mono;
    Rational ze(k.second, nu_);
    if (!ze.is_zero()) {
      mono = zname;
      if (ze != Rational(1)) mono += ze.is_integer() ? "^" + ze.str() : "^(" + ze.str() + ")";
    }
    if (k.first > 0) {
      if (!mono.empty()) mono += "*";
      mono += wname;
      if (k.first > 1) mono += "^" + std::to_string(k.first);
    }
    std::string cs = cp->str();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (compound) cs = "(" + cs + ")";
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

std::vector<UPoly<Rational>> as_w_poly(const BiPoly& f) {
  if (!f.is_polynomial() || !f.all_rational()) throw std::logic_error("expected a rational polynomial");
  BiPoly g = f;
  g.reduce_nu();
  std::vector<std::vector<Rational>> c(static_cast<size_t>(std::max(g.deg_w(), -1) + 1));
  for (const auto& [k, v] : g.terms()) {
    auto& row = c[static_cast<size_t>(k.first)];
    if (row.size() <= static_cast<size_t>(k.second)) row.resize(static_cast<size_t>(k.second) + 1, Rational(0));
    row[static_cast<size_t>(k.second)] = v.rational();
  }
  std::vector<UPoly<Rational>> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

BiPoly from_w_poly(const std::vector<UPoly<Rational>>& c) {
  BiPoly out;
  for (size_t i = 0; i < c.size(); ++i) {
    for (int j = 0; j <= c[i].degree(); ++j) out.add_term(ExtElem(c[i][j]), Rational(j), static_cast<int>(i));
  }
  return out;
}

namespace {

using QP = UPoly<Rational>;
using WPoly = std::vector<QP>;

void wtrim(WPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

QP wcontent(const WPoly& a) {
  QP g;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

WPoly wdiv_scalar(const WPoly& a, const QP& c) {
  WPoly out;
  for (const auto& x : a) out.push_back(x / c);
  return out;
}

QP eval_at(const WPoly& a, const Rational& z0) {
  std::vector<Rational> c;
  for (const auto& q : a) c.push_back(q.eval(z0));
  return QP(std::move(c));
}

QP interpolate_q(const std::vector<Rational>& xs, std::vector<Rational> d) {
  size_t n = xs.size();
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  QP p;
  for (size_t k = n; k-- > 0;) p = p * QP(std::vector<Rational>{-xs[k], Rational(1)}) + QP::constant(d[k]);
  return p;
}

// gcd of w-primitive polynomials by evaluation in z; the leading coefficient is
// forced to gcd(lc A, lc B)(z_i) at every point, then the content is removed.
std::optional<WPoly> primitive_gcd(const WPoly& A, const WPoly& B, size_t extra) {
  QP gam = gcd(A.back(), B.back());
  auto zdeg = [](const WPoly& p) {
    int m = 0;
    for (const auto& c : p) m = std::max(m, c.degree());
    return m;
  };
  int dz = std::min(zdeg(A), zdeg(B));
  size_t need = static_cast<size_t>(dz + gam.degree()) + 1 + extra;
  std::vector<Rational> xs;
  std::vector<QP> gs;
  int dmin = -1;
  for (long t = 0; xs.size() < need; ++t) {
    Rational x(t % 2 == 0 ? t / 2 : -(t + 1) / 2);
    if (A.back().eval(x).is_zero() || B.back().eval(x).is_zero()) continue;
    QP g = gcd(eval_at(A, x), eval_at(B, x));
    if (dmin >= 0 && g.degree() > dmin) continue;
    if (g.degree() < dmin || dmin < 0) {
      dmin = g.degree();
      xs.clear();
      gs.clear();
    }
    if (dmin == 0) return WPoly{QP::constant(Rational(1))};
    xs.push_back(x);
    gs.push_back(g * gam.eval(x));
  }
  WPoly H;
  for (int j = 0; j <= dmin; ++j) {
    std::vector<Rational> ys;
    for (const auto& g : gs) ys.push_back(g[j]);
    H.push_back(interpolate_q(xs, ys));
  }
  wtrim(H);
  H = wdiv_scalar(H, wcontent(H));
  BiPoly h = from_w_poly(H);
  if (!bivariate_divide(from_w_poly(A), h).remainder.is_zero()) return std::nullopt;
  if (!bivariate_divide(from_w_poly(B), h).remainder.is_zero()) return std::nullopt;
  return H;
}

}  // namespace

BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b) {
  WPoly A = as_w_poly(a), B = as_w_poly(b);
  wtrim(A);
  wtrim(B);
  if (A.empty()) return b.is_zero() ? b : b * b.terms().rbegin()->second.inverse();
  if (B.empty()) return a * a.terms().rbegin()->second.inverse();
  QP ca = wcontent(A), cb = wcontent(B);
  QP cg = gcd(ca, cb);
  A = wdiv_scalar(A, ca);
  B = wdiv_scalar(B, cb);
  WPoly g{QP::constant(Rational(1))};
  if (A.size() > 1 && B.size() > 1) {
    std::optional<WPoly> r;
    for (size_t extra = 0; !r; extra = extra * 2 + 4) r = primitive_gcd(A, B, extra);
    g = *r;
  }
  for (auto& c : g) c = c * cg;
  BiPoly out = from_w_poly(g);
  ExtElem lc = out.terms().rbegin()->second;
  return out * lc.inverse();
}

BiDivision bivariate_divide(const BiPoly& n, const BiPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  BiDivision out;
  BiPoly r = n;
  auto lead = *d.terms().rbegin();
  ExtElem lc_inv = lead.second.inverse();
  Rational dz = d.zexp(lead.first);
  int dwd = lead.first.first;
  while (!r.is_zero()) {
    auto top = *r.terms().rbegin();
    Rational rz = r.zexp(top.first);
    int rw = top.first.first;
    BiPoly t = BiPoly::monomial(top.second, rz, rw);
    if (rw >= dwd && rz >= dz) {
      BiPoly q = BiPoly::monomial(top.second * lc_inv, rz - dz, rw - dwd);
      out.quotient += q;
      r -= q * d;
    } else {
      out.remainder += t;
      r -= t;
    }
  }
  return out;
}

}  // namespace pbound
