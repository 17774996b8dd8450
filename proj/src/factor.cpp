#include "pbound/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace pbound {
namespace {

using ZVec = std::vector<mpz_class>;  // ascending integer coefficients
using MVec = std::vector<uint64_t>;   // ascending coefficients mod a small prime

// --- integer helpers ---------------------------------------------------------

void ztrim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec primitive_integer(const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  ZVec z;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (den / c.den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0) {
    for (auto& v : z) v /= g;
  }
  if (!z.empty() && z.back() < 0) {
    for (auto& v : z) v = -v;
  }
  return z;
}

QPoly to_qpoly(const ZVec& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

void zmod_sym(ZVec& v, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : v) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(v);
}

void zmod_pos(ZVec& v, const mpz_class& m) {
  for (auto& c : v) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(v);
}

// Exact division over ℤ when it exists.
bool zdivides(const ZVec& d, const ZVec& n, ZVec* quo) {
  auto [q, r] = QPoly::divmod(to_qpoly(n), to_qpoly(d));
  if (!r.is_zero()) return false;
  ZVec out;
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer()) return false;
    out.push_back(c.num());
  }
  if (quo) *quo = std::move(out);
  return true;
}

ZVec primitive(ZVec v) {
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
  if (!v.empty() && v.back() < 0) {
    for (auto& c : v) c = -c;
  }
  return v;
}

// --- arithmetic mod p (p < 2^31) ---------------------------------------------

struct Zp {
  uint64_t p;

  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t pw(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pw(a, p - 2); }

  static void trim(MVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  MVec reduce(const ZVec& z) const {
    MVec v;
    mpz_class pp = static_cast<unsigned long>(p), t;
    for (const auto& c : z) {
      mpz_mod(t.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
      v.push_back(t.get_ui());
    }
    trim(v);
    return v;
  }
  MVec mulp(const MVec& a, const MVec& b) const {
    if (a.empty() || b.empty()) return {};
    MVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  MVec subp(MVec a, const MVec& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  MVec addp(MVec a, const MVec& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = add(a[i], b[i]);
    trim(a);
    return a;
  }
  MVec scale(MVec a, uint64_t s) const {
    for (auto& c : a) c = mul(c, s);
    trim(a);
    return a;
  }
  void divmod(const MVec& a, const MVec& b, MVec* q, MVec* r) const {
    MVec rem = a;
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    MVec quo(da >= db ? static_cast<size_t>(da - db + 1) : 0, 0);
    uint64_t li = inv(b.back());
    for (int k = da; k >= db; --k) {
      uint64_t top = rem[static_cast<size_t>(k)];
      if (!top) continue;
      uint64_t c = mul(top, li);
      quo[static_cast<size_t>(k - db)] = c;
      for (int i = 0; i <= db; ++i) {
        auto idx = static_cast<size_t>(k - db + i);
        rem[idx] = sub(rem[idx], mul(c, b[static_cast<size_t>(i)]));
      }
    }
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
  }
  MVec modp(const MVec& a, const MVec& b) const {
    MVec r;
    divmod(a, b, nullptr, &r);
    return r;
  }
  MVec monic(MVec a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }
  MVec gcd(MVec a, MVec b) const {
    while (!b.empty()) {
      MVec r = modp(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 (inputs coprime)
  void xgcd(const MVec& a, const MVec& b, MVec* s, MVec* t) const {
    MVec r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      MVec q, r;
      divmod(r0, r1, &q, &r);
      r0 = std::move(r1);
      r1 = std::move(r);
      MVec s2 = subp(s0, mulp(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      MVec t2 = subp(t0, mulp(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    uint64_t li = inv(r0.back());
    *s = scale(s0, li);
    *t = scale(t0, li);
  }
  MVec deriv(const MVec& a) const {
    MVec d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }
  MVec powmod(MVec base, const mpz_class& e, const MVec& m) const {
    MVec r{1};
    base = modp(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = modp(mulp(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = modp(mulp(r, base), m);
    }
    return r;
  }
};

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<MVec, int>> ddf(const Zp& F, MVec f) {
  std::vector<std::pair<MVec, int>> out;
  MVec x{0, 1};
  MVec h = x;
  mpz_class p = static_cast<unsigned long>(F.p);
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, p, f);
    MVec g = F.gcd(F.subp(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      MVec q;
      F.divmod(f, g, &q, nullptr);
      f = q;
      h = F.modp(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Equal-degree splitting (Cantor–Zassenhaus), p odd.
void edf(const Zp& F, const MVec& g, int d, std::mt19937_64& rng, std::vector<MVec>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    MVec a(static_cast<size_t>(n));
    for (auto& c : a) c = rng() % F.p;
    Zp::trim(a);
    if (a.size() < 2) continue;
    MVec b = F.subp(F.powmod(a, e, g), MVec{1});
    MVec h = F.gcd(b, g);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < n) {
      MVec q;
      F.divmod(g, h, &q, nullptr);
      edf(F, h, d, rng, out);
      edf(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

std::vector<MVec> factor_mod_p(const Zp& F, const MVec& f) {
  std::mt19937_64 rng(0x5eed1234ULL + F.p);
  std::vector<MVec> out;
  for (auto& [g, d] : ddf(F, F.monic(f))) edf(F, g, d, rng, out);
  return out;
}

// Lifts f ≡ g*h (mod p), g monic, to modulus p^k.
void hensel2(const ZVec& f, const MVec& g0, const MVec& h0, uint64_t p, int k, ZVec* g_out, ZVec* h_out) {
  Zp F{p};
  MVec s, t;
  F.xgcd(g0, h0, &s, &t);
  auto lift = [](const MVec& v) {
    ZVec z;
    for (auto c : v) z.emplace_back(static_cast<unsigned long>(c));
    return z;
  };
  ZVec g = lift(g0), h = lift(h0);
  mpz_class pj = static_cast<unsigned long>(p);
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  for (int j = 1; j < k; ++j) {
    ZVec gh = zmul(g, h);
    ZVec e = f;
    if (gh.size() > e.size()) e.resize(gh.size(), 0);
    for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c /= pj;
    MVec em = F.reduce(e);
    if (!em.empty()) {
      MVec te = F.mulp(t, em), q, dg;
      MVec gm = F.reduce(g);
      F.divmod(te, gm, &q, &dg);
      MVec dh = F.addp(F.mulp(s, em), F.mulp(q, F.reduce(h)));
      ZVec dgz = lift(dg), dhz = lift(dh);
      if (dgz.size() > g.size()) g.resize(dgz.size(), 0);
      for (size_t i = 0; i < dgz.size(); ++i) g[i] += pj * dgz[i];
      if (dhz.size() > h.size()) h.resize(dhz.size(), 0);
      for (size_t i = 0; i < dhz.size(); ++i) h[i] += pj * dhz[i];
    }
    pj *= static_cast<unsigned long>(p);
  }
  zmod_pos(g, pk);
  zmod_pos(h, pk);
  *g_out = std::move(g);
  *h_out = std::move(h);
}

// Lifts f ≡ lc(f) * prod(factors) (mod p) to monic factors mod p^k.
std::vector<ZVec> hensel_multi(const ZVec& f, const std::vector<MVec>& factors, uint64_t p, int k) {
  Zp F{p};
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  if (factors.size() == 1) {
    mpz_class li;
    mpz_invert(li.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZVec g = f;
    for (auto& c : g) c *= li;
    zmod_pos(g, pk);
    return {g};
  }
  MVec rest{F.reduce(ZVec{f.back()})};
  for (size_t i = 1; i < factors.size(); ++i) rest = F.mulp(rest, factors[i]);
  ZVec g, h;
  hensel2(f, factors[0], rest, p, k, &g, &h);
  std::vector<MVec> tail(factors.begin() + 1, factors.end());
  auto lifted = hensel_multi(h, tail, p, k);
  lifted.insert(lifted.begin(), g);
  return lifted;
}

struct PrimeChoice {
  uint64_t p = 0;
  std::vector<MVec> factors;
};

PrimeChoice choose_prime(const ZVec& f) {
  PrimeChoice best;
  int tried = 0;
  for (uint64_t p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Zp F{p};
    mpz_class r = f.back() % static_cast<unsigned long>(p);
    if (r == 0) continue;
    MVec fm = F.reduce(f);
    if (F.gcd(fm, F.deriv(fm)).size() != 1) continue;
    ++tried;
    auto facs = factor_mod_p(F, fm);
    if (best.p == 0 || facs.size() < best.factors.size()) best = {p, std::move(facs)};
    if (best.factors.size() == 1) break;
  }
  if (best.p == 0) throw std::runtime_error("no suitable prime for factorization");
  return best;
}

// Irreducible factors of a primitive squarefree integer polynomial; with max_degree
// set, only subsets of total degree <= max_degree are recombined.
std::vector<ZVec> zassenhaus(ZVec f, int max_degree) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return {};
  if (n == 1) return {f};
  PrimeChoice pc = choose_prime(f);
  if (pc.factors.size() == 1) {
    if (n <= max_degree) return {f};
    return {};
  }
  mpz_class maxc = 0;
  for (const auto& c : f) {
    mpz_class a = abs(c);
    if (a > maxc) maxc = a;
  }
  mpz_class bound = abs(f.back()) * maxc * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  int k = 1;
  mpz_class pk = static_cast<unsigned long>(pc.p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(pc.p);
    ++k;
  }
  std::vector<ZVec> lifted = hensel_multi(f, pc.factors, pc.p, k);

  std::vector<ZVec> found;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      int deg = 0;
      for (auto i : idx) deg += static_cast<int>(lifted[i].size()) - 1;
      if (deg <= max_degree) {
        ZVec cand{f.back()};
        for (auto i : idx) {
          cand = zmul(cand, lifted[i]);
          zmod_sym(cand, pk);
        }
        cand = primitive(cand);
        ZVec quo;
        if (cand.size() > 1 && zdivides(cand, f, &quo)) {
          found.push_back(cand);
          f = primitive(quo);
          std::vector<ZVec> rest;
          for (size_t i = 0, j = 0; i < lifted.size(); ++i) {
            if (j < s && idx[j] == i) {
              ++j;
            } else {
              rest.push_back(lifted[i]);
            }
          }
          lifted = std::move(rest);
          hit = true;
          break;
        }
      }
      // next combination
      size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (f.size() > 1 && static_cast<int>(f.size()) - 1 <= max_degree) found.push_back(f);
  return found;
}

std::vector<Factor> factor_impl(const QPoly& p, int max_degree) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<Factor> out;
  for (auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& z : zassenhaus(primitive_integer(part), max_degree)) out.push_back({to_qpoly(z).monic(), mult, false});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  return out;
}

}  // namespace

bool factor_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Factor> factor_univariate(const QPoly& p, int cap) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() > cap) throw std::invalid_argument("factor cap exceeded");
  return factor_impl(p, p.degree());
}

std::vector<Factor> small_factors(const QPoly& p, int max_degree) { return factor_impl(p, max_degree); }

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  for (const auto& f : small_factors(p, 1)) roots.push_back(-f.poly[0]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

SquarefreeRoots squarefree_and_rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  SquarefreeRoots out;
  out.squarefree = QPoly::constant(Rational(1));
  for (const auto& f : small_factors(p, 1)) out.roots.push_back({-f.poly[0], f.multiplicity});
  for (const auto& [part, mult] : squarefree_decomposition(p)) out.squarefree = out.squarefree * part;
  std::sort(out.roots.begin(), out.roots.end(), [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
  return out;
}

}  // namespace pbound
