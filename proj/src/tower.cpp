#include "pbound/tower.hpp"

#include "pbound/factor.hpp"

namespace pbound {

int tower_depth(const Tower& t) { return t ? t->depth : 0; }
int tower_degree(const Tower& t) { return t ? t->total_degree : 1; }

bool is_ancestor(const Tower& anc, const Tower& t) {
  for (const TowerLevel* l = t.get(); l; l = l->parent.get()) {
    if (l == anc.get()) return true;
  }
  return anc == nullptr;
}

Tower common_tower(const Tower& a, const Tower& b) {
  if (a == b) return a;
  if (tower_depth(a) >= tower_depth(b)) {
    if (is_ancestor(b, a)) return a;
  } else if (is_ancestor(a, b)) {
    return b;
  }
  throw std::logic_error("elements from incompatible towers");
}

std::vector<Tower> tower_levels(const Tower& t) {
  std::vector<Tower> out;
  for (Tower l = t; l; l = l->parent) out.insert(out.begin(), l);
  return out;
}

ExtElem::ExtElem(Tower t, std::vector<ExtElem> coords) : t_(std::move(t)), c_(std::move(coords)) {
  if (!t_) {
    q_ = c_.empty() ? Rational(0) : c_.front().rational();
    c_.clear();
    return;
  }
  c_.resize(static_cast<size_t>(t_->degree), ExtElem(0));
  normalize();
}

ExtElem ExtElem::generator(const Tower& t) {
  std::vector<ExtElem> c(static_cast<size_t>(t->degree), ExtElem(0));
  c[1] = ExtElem(1);
  return ExtElem(t, std::move(c));
}

const Rational& ExtElem::rational() const {
  if (t_) throw std::logic_error("element is not rational");
  return q_;
}

void ExtElem::normalize() {
  if (!t_) return;
  for (size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return;
  }
  ExtElem low = c_[0];
  *this = std::move(low);
}

bool ExtElem::certified_nonzero() const {
  if (is_zero()) return false;
  if (t_ && t_->any_presumed()) (void)inverse();
  return true;
}

namespace {

ExtElem add_impl(const ExtElem& a, const ExtElem& b, bool negate_b);

}  // namespace

ExtElem operator+(const ExtElem& a, const ExtElem& b) { return add_impl(a, b, false); }
ExtElem operator-(const ExtElem& a, const ExtElem& b) { return add_impl(a, b, true); }

ExtElem operator-(const ExtElem& a) {
  if (a.is_rational()) return ExtElem(-a.q_);
  std::vector<ExtElem> c;
  c.reserve(a.c_.size());
  for (const auto& x : a.c_) c.push_back(-x);
  return ExtElem(a.t_, std::move(c));
}

namespace {

ExtElem add_impl(const ExtElem& a, const ExtElem& b, bool negate_b) {
  if (a.is_rational() && b.is_rational()) {
    return ExtElem(negate_b ? a.rational() - b.rational() : a.rational() + b.rational());
  }
  Tower t = common_tower(a.tower(), b.tower());
  int d = t->degree;
  std::vector<ExtElem> c(static_cast<size_t>(d), ExtElem(0));
  auto place = [&](const ExtElem& x, bool neg) {
    if (x.tower() == t) {
      for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] += neg ? -x.coords()[static_cast<size_t>(i)] : x.coords()[static_cast<size_t>(i)];
    } else {
      c[0] += neg ? -x : x;
    }
  };
  place(a, false);
  place(b, negate_b);
  return ExtElem(t, std::move(c));
}

}  // namespace

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  if (a.is_rational() && b.is_rational()) return ExtElem(a.q_ * b.q_);
  if (a.is_zero() || b.is_zero()) return ExtElem(0);
  Tower t = common_tower(a.t_, b.t_);
  int d = t->degree;
  if (a.t_ != t || b.t_ != t) {
    const ExtElem& top = a.t_ == t ? a : b;
    const ExtElem& low = a.t_ == t ? b : a;
    std::vector<ExtElem> c;
    c.reserve(static_cast<size_t>(d));
    for (const auto& x : top.c_) c.push_back(x * low);
    return ExtElem(t, std::move(c));
  }
  std::vector<ExtElem> prod(static_cast<size_t>(2 * d - 1), ExtElem(0));
  for (int i = 0; i < d; ++i) {
    const ExtElem& ai = a.c_[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const ExtElem& bj = b.c_[static_cast<size_t>(j)];
      if (bj.is_zero()) continue;
      prod[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  const auto& m = t->modulus.coeffs();
  for (int k = 2 * d - 2; k >= d; --k) {
    ExtElem top = prod[static_cast<size_t>(k)];
    if (top.is_zero()) continue;
    for (int i = 0; i < d; ++i) prod[static_cast<size_t>(k - d + i)] -= top * m[static_cast<size_t>(i)];
    prod[static_cast<size_t>(k)] = ExtElem(0);
  }
  prod.resize(static_cast<size_t>(d));
  return ExtElem(t, std::move(prod));
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return ExtElem(q_.inverse());
  ExtPoly a(c_);
  auto r = xgcd(a, t_->modulus);
  if (r.g.degree() > 0) throw TowerSplit(t_, r.g, t_->modulus / r.g);
  auto inv = r.s % t_->modulus;
  return ExtElem(t_, inv.coeffs());
}

std::string ExtElem::str() const {
  if (is_rational()) return q_.str();
  return ExtPoly(c_).str(t_->name);
}

std::pair<Tower, ExtElem> adjoin_root(const Tower& base, const ExtPoly& m, bool presumed, int tower_cap) {
  if (m.degree() < 2) throw std::invalid_argument("adjoined polynomial must have degree >= 2");
  for (const auto& c : m.coeffs()) {
    if (!is_ancestor(c.tower(), base)) throw std::logic_error("modulus outside the base tower");
  }
  if (all_rational(m) && !rational_roots(to_rational(m)).empty()) {
    throw std::invalid_argument("adjoin of reducible linear part");
  }
  long total = static_cast<long>(tower_degree(base)) * m.degree();
  if (total > tower_cap) throw CapError("tower", "tower cap exceeded");
  auto lvl = std::make_shared<TowerLevel>();
  lvl->parent = base;
  lvl->modulus = m.monic();
  lvl->degree = m.degree();
  lvl->depth = tower_depth(base) + 1;
  lvl->total_degree = static_cast<int>(total);
  lvl->name = "t" + std::to_string(lvl->depth);
  lvl->presumed_irreducible = presumed;
  Tower t = lvl;
  return {t, ExtElem::generator(t)};
}

std::variant<Inverse, Split> try_invert(const ExtElem& e) {
  try {
    return Inverse{e.inverse()};
  } catch (const TowerSplit& s) {
    return Split{s.level, s.first.monic(), s.second.monic()};
  }
}

int compare_canonical(const ExtElem& a, const ExtElem& b) {
  int da = tower_depth(a.tower()), db = tower_depth(b.tower());
  if (da != db) return da < db ? -1 : 1;
  if (a.is_rational()) {
    auto c = a.rational() <=> b.rational();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.coords().size() != b.coords().size()) return a.coords().size() < b.coords().size() ? -1 : 1;
  for (size_t i = a.coords().size(); i-- > 0;) {
    int c = compare_canonical(a.coords()[i], b.coords()[i]);
    if (c != 0) return c;
  }
  return 0;
}

ExtPoly to_ext(const UPoly<Rational>& p) {
  std::vector<ExtElem> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return ExtPoly(std::move(c));
}

bool all_rational(const ExtPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_rational()) return false;
  }
  return true;
}

UPoly<Rational> to_rational(const ExtPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational());
  return UPoly<Rational>(std::move(c));
}

std::string describe_tower(const Tower& t) {
  std::string out;
  for (const auto& l : tower_levels(t)) {
    if (!out.empty()) out += ", ";
    out += l->modulus.str(l->name) + "=0";
  }
  return out;
}

}  // namespace pbound
