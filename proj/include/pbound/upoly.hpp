#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbound {

/// Dense univariate polynomial over a field F, coefficients in ascending degree.
/// F must provide field arithmetic, `is_zero()` and `str()`.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& c) { return UPoly(std::vector<F>{c}); }
  static UPoly monomial(const F& c, int deg) {
    std::vector<F> v(static_cast<size_t>(deg) + 1, F(0));
    v.back() = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F operator[](int i) const { return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : F(0); }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("zero polynomial");
    return c_.back();
  }
  /// Lowest power with a nonzero coefficient (-1 for the zero polynomial).
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
  }

  F eval(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<F> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    F inv = F(1) / c_.back();
    return *this * inv;
  }

  /// Divides out x^k where k is the valuation.
  UPoly strip_x_power() const {
    int v = valuation();
    if (v <= 0) return *this;
    return UPoly(std::vector<F>(c_.begin() + v, c_.end()));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a * F(-1); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const F& s) {
    std::vector<F> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(c * s);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const F& s, const UPoly& a) { return a * s; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
    }
    return true;
  }

  /// Euclidean division; the divisor's leading coefficient must be invertible.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
    F inv = F(1) / b.lead();
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
      const F& top = rem[static_cast<size_t>(k)];
      if (top.is_zero()) continue;
      F q = top * inv;
      quo[static_cast<size_t>(k - db)] = q;
      for (int i = 0; i <= db; ++i) {
        auto idx = static_cast<size_t>(k - db + i);
        rem[idx] = rem[idx] - q * b.c_[static_cast<size_t>(i)];
      }
      rem[static_cast<size_t>(k)] = F(0);
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  UPoly pow(int e) const {
    UPoly r = constant(F(1)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Composition this(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<size_t>(i)];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      bool neg = !compound && !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (compound) cs = "(" + cs + ")";
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct XGcd {
  UPoly<F> g, s, t;  // s*a + t*b == g, g monic
};

template <class F>
XGcd<F> xgcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly<F>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Yun's square-free decomposition: p = lc * prod f_i^i; returns (f_i, i) with deg f_i > 0.
template <class F>
std::vector<std::pair<UPoly<F>, int>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<std::pair<UPoly<F>, int>> out;
  if (p.degree() <= 0) return out;
  UPoly<F> a = p.monic();
  UPoly<F> d = a.derivative();
  UPoly<F> g = gcd(a, d);
  UPoly<F> b = a / g;
  UPoly<F> c = d / g;
  UPoly<F> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<F> f = gcd(b, e);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = b / f;
    c = e / f;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace pbound
