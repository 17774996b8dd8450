#include "pbound/branching.hpp"

#include <algorithm>
#include <numeric>

#include "pbound/factor.hpp"

namespace pbound {

std::string to_string(BranchStatus s) {
  switch (s) {
    case BranchStatus::Open:
      return "open";
    case BranchStatus::ClosedUnique:
      return "closed";
    case BranchStatus::CriticalFamily:
      return "critical";
    case BranchStatus::NonAlgebraic:
      return "non-algebraic";
    case BranchStatus::CapExceeded:
      return "capped";
  }
  return "";
}

Closure closure_check(const CoeffProfile& rem, const Rational& lambda_prev) {
  const LowTerm& k1 = rem.P(1);
  const LowTerm& l0 = rem.Q(0);
  if (!k1.finite || !l0.finite || k1.exp != l0.exp - Rational(1)) return {};
  ExtElem rho = k1.coeff / l0.coeff;
  if (!rho.is_rational()) return {};
  const Rational& r = rho.rational();
  if (!r.is_positive() || r <= lambda_prev) return {};
  return {ClosureVerdict::Continue, r};
}

namespace {

// Nonzero roots of an edge polynomial grouped as (factor over the current field, multiplicity).
struct CharFactor {
  ExtPoly poly;  // monic
  int multiplicity = 1;
  bool certified = true;
};

std::vector<CharFactor> split_char_poly(const ExtPoly& phi, const Tower& tower, int factor_cap) {
  ExtPoly f = phi.strip_x_power();
  std::vector<CharFactor> out;
  if (f.degree() <= 0) return out;
  if (all_rational(f)) {
    for (auto& fac : factor_univariate(to_rational(f), factor_cap)) {
      out.push_back({to_ext(fac.poly), fac.multiplicity, tower == nullptr});
    }
    return out;
  }
  for (auto& [part, mult] : squarefree_decomposition(f)) out.push_back({part, mult, false});
  return out;
}

// Single nonzero root of a degree-one edge polynomial.
std::optional<ExtElem> linear_root(const ExtPoly& phi) {
  ExtPoly f = phi.strip_x_power();
  if (f.degree() != 1) return std::nullopt;
  return -f[0] / f[1];
}

bool term_less(const std::vector<Term>& a, const std::vector<Term>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
    int c = compare_canonical(a[i].coeff, b[i].coeff);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

struct State {
  std::vector<Term> terms;
  Rational lambda_prev{0};
  int fold = 0;
  int conj = 1;
  Tower tower;
  long nu = 1;
  bool root = true;
};

class Expander {
 public:
  Expander(const Caps& caps, BranchTree& tree) : caps_(caps), tree_(tree) {}

  void expand(const OdeSystem& sys, const State& st) {
    if (static_cast<int>(st.terms.size()) >= caps_.depth) {
      leaf(st, BranchStatus::CapExceeded, "depth");
      return;
    }
    CoeffProfile prof = coeff_profile(sys);
    NewtonDiagram diag = lower_hull(support_points(prof));
    for (const auto& v : vertex_critical_check(diag, st.lambda_prev)) {
      if (v.kind == VertexVerdict::Kind::Critical) {
        auto& l = leaf(st, BranchStatus::CriticalFamily);
        l.witness = CriticalWitness{"vertex", v.lambda, static_cast<int>(st.terms.size()), st.terms};
        return;
      }
      if (v.kind == VertexVerdict::Kind::DicriticalSuspect) {
        tree_.flags.push_back("dicritical-suspect: irrational vertex ratio " + v.ratio.str() + " after " +
                              std::to_string(st.terms.size()) + " terms");
      }
    }
    if (!st.root && st.fold == 1) {
      Closure cl = closure_check(prof, st.lambda_prev);
      if (cl.verdict == ClosureVerdict::ClosedUnique) {
        continue_unique(sys, st);
        return;
      }
      Resonance r = resolve_resonance(sys, st.lambda_prev, *cl.rho, caps_);
      State end = st;
      end.terms.insert(end.terms.end(), r.terms.begin(), r.terms.end());
      for (const auto& t : r.terms) end.nu = std::lcm(end.nu, t.exp.den().get_si());
      switch (r.outcome) {
        case ResonanceOutcome::CriticalFamily: {
          auto& l = leaf(end, BranchStatus::CriticalFamily);
          l.witness = CriticalWitness{r.steps > 0 ? "resonance" : "vertex", r.lambda,
                                      static_cast<int>(end.terms.size()), end.terms};
          if (r.steps > 0) l.flags.push_back("resonance-family");
          break;
        }
        case ResonanceOutcome::NonAlgebraic:
          leaf(end, BranchStatus::NonAlgebraic).flags.push_back("resonance-inconsistent");
          break;
        case ResonanceOutcome::ClosedUnique:
          leaf(end, BranchStatus::ClosedUnique).branch.exact = true;
          break;
        case ResonanceOutcome::CapExceeded:
          leaf(end, BranchStatus::CapExceeded, "depth");
          break;
      }
      return;
    }
    size_t before = tree_.leaves.size();
    if (!st.root && !prof.P(0).finite) leaf(st, BranchStatus::ClosedUnique).branch.exact = true;
    for (const auto& e : diag.edges) {
      if (!e.admissible() || e.lambda <= st.lambda_prev) continue;
      std::vector<CharFactor> facs;
      try {
        facs = split_char_poly(e.char_poly, st.tower, caps_.factor);
      } catch (const std::invalid_argument&) {
        leaf(st, BranchStatus::CapExceeded, "factor");
        continue;
      }
      for (const auto& f : facs) handle_factor(sys, st, e.lambda, f);
    }
    if (!st.root && tree_.leaves.size() == before) leaf(st, BranchStatus::NonAlgebraic);
  }

 private:
  void handle_factor(const OdeSystem& sys, const State& st, const Rational& lambda, const CharFactor& f) {
    if (f.poly.degree() == 1) {
      child(sys, st, lambda, -f.poly[0], f.multiplicity, st.tower, st.conj);
      return;
    }
    Tower t2;
    ExtElem theta;
    try {
      std::tie(t2, theta) = adjoin_root(st.tower, f.poly, !f.certified, caps_.tower);
    } catch (const CapError&) {
      State s = st;
      s.conj *= f.poly.degree();
      leaf(s, BranchStatus::CapExceeded, "tower");
      return;
    }
    size_t mark = tree_.leaves.size();
    size_t flag_mark = tree_.flags.size();
    try {
      child(sys, st, lambda, theta, f.multiplicity, t2, st.conj * f.poly.degree());
    } catch (const TowerSplit& s) {
      if (s.level != t2) throw;
      tree_.leaves.resize(mark);
      tree_.flags.resize(flag_mark);
      for (const ExtPoly* part : {&s.first, &s.second}) handle_factor(sys, st, lambda, {part->monic(), f.multiplicity, false});
    }
  }

  void child(const OdeSystem& sys, const State& st, const Rational& lambda, const ExtElem& alpha, int fold,
             const Tower& tower, int conj) {
    State s = st;
    s.terms.push_back({lambda, alpha});
    s.nu = std::lcm(st.nu, lambda.den().get_si());
    s.tower = tower;
    s.conj = conj;
    s.fold = fold;
    s.lambda_prev = lambda;
    s.root = false;
    if (s.nu > caps_.ramification) {
      leaf(s, BranchStatus::CapExceeded, "ramification");
      return;
    }
    expand(substitute_unchecked(sys, lambda, alpha), s);
  }

  // Extends a uniquely determined branch for display; the count is already settled.
  void continue_unique(OdeSystem sys, State st) {
    bool exact = false;
    while (static_cast<int>(st.terms.size()) < caps_.display_terms) {
      CoeffProfile prof = coeff_profile(sys);
      if (!prof.P(0).finite) {
        exact = true;
        break;
      }
      NewtonDiagram diag = lower_hull(support_points(prof));
      std::optional<ExtElem> alpha;
      Rational lambda;
      for (const auto& e : diag.edges) {
        if (!e.admissible() || e.lambda <= st.lambda_prev) continue;
        alpha = linear_root(e.char_poly);
        lambda = e.lambda;
        break;
      }
      if (!alpha) break;
      long nu = std::lcm(st.nu, lambda.den().get_si());
      if (nu > caps_.ramification) break;
      sys = substitute_unchecked(sys, lambda, *alpha);
      st.terms.push_back({lambda, *alpha});
      st.nu = nu;
      st.lambda_prev = lambda;
    }
    if (!exact && static_cast<int>(st.terms.size()) >= caps_.display_terms) {
      exact = !coeff_profile(sys).P(0).finite;
    }
    leaf(st, BranchStatus::ClosedUnique).branch.exact = exact;
  }

  BranchLeaf& leaf(const State& st, BranchStatus status, std::string cap = {}) {
    BranchLeaf l;
    l.branch.terms = st.terms;
    l.branch.nu = st.nu;
    l.branch.conjugacy = st.conj;
    l.branch.tower = st.tower;
    l.status = status;
    l.fold = st.fold;
    l.cap = std::move(cap);
    tree_.leaves.push_back(std::move(l));
    return tree_.leaves.back();
  }

  const Caps& caps_;
  BranchTree& tree_;
};

}  // namespace

Resonance resolve_resonance(const OdeSystem& remainder, const Rational& lambda_prev, const Rational& rho,
                            const Caps& caps) {
  Resonance out;
  out.lambda = rho;
  OdeSystem sys = remainder;
  Rational lp = lambda_prev;
  for (int step = 0; step < caps.depth; ++step) {
    out.steps = step;
    CoeffProfile prof = coeff_profile(sys);
    NewtonDiagram diag = lower_hull(support_points(prof));
    for (const auto& v : vertex_critical_check(diag, lp)) {
      if (v.kind == VertexVerdict::Kind::Critical) {
        out.outcome = ResonanceOutcome::CriticalFamily;
        out.lambda = v.lambda;
        return out;
      }
    }
    if (!prof.P(0).finite) {
      out.outcome = ResonanceOutcome::ClosedUnique;
      return out;
    }
    const Edge* next = nullptr;
    for (const auto& e : diag.edges) {
      if (e.admissible() && e.lambda > lp) {
        next = &e;
        break;
      }
    }
    if (!next) {
      out.outcome = ResonanceOutcome::NonAlgebraic;
      return out;
    }
    auto alpha = linear_root(next->char_poly);
    if (!alpha) {
      // the linear coefficient cancels exactly at the resonant exponent
      out.outcome = ResonanceOutcome::NonAlgebraic;
      out.lambda = next->lambda;
      return out;
    }
    sys = substitute_unchecked(sys, next->lambda, *alpha);
    out.terms.push_back({next->lambda, *alpha});
    lp = next->lambda;
  }
  out.outcome = ResonanceOutcome::CapExceeded;
  return out;
}

BranchTree expand_branches(const OdeSystem& sys, const Caps& caps) {
  BranchTree tree;
  tree.root = sys;
  Expander ex(caps, tree);
  ex.expand(sys, State{});
  std::stable_sort(tree.leaves.begin(), tree.leaves.end(), [](const BranchLeaf& a, const BranchLeaf& b) {
    if (term_less(a.branch.terms, b.branch.terms)) return true;
    if (term_less(b.branch.terms, a.branch.terms)) return false;
    return static_cast<int>(a.status) < static_cast<int>(b.status);
  });
  std::sort(tree.flags.begin(), tree.flags.end());
  tree.flags.erase(std::unique(tree.flags.begin(), tree.flags.end()), tree.flags.end());
  return tree;
}

MultiplicityResult summarize(const BranchTree& tree) {
  MultiplicityResult r;
  r.local = tree.root;
  r.branches = tree.leaves;
  r.flags = tree.flags;
  bool capped = false;
  for (const auto& l : tree.leaves) {
    switch (l.status) {
      case BranchStatus::ClosedUnique:
        r.count += l.branch.conjugacy;
        break;
      case BranchStatus::CriticalFamily:
        if (!r.witness) r.witness = l.witness;
        break;
      case BranchStatus::CapExceeded:
        capped = true;
        r.diagnostics.push_back(l.cap + " cap reached after " + std::to_string(l.branch.terms.size()) + " terms");
        break;
      case BranchStatus::NonAlgebraic:
        r.diagnostics.push_back("branch with " + std::to_string(l.branch.terms.size()) +
                                " terms has no algebraic continuation");
        break;
      case BranchStatus::Open:
        break;
    }
  }
  if (r.witness) {
    r.kind = MultiplicityResult::Kind::Critical;
  } else if (capped) {
    r.kind = MultiplicityResult::Kind::Capped;
  }
  return r;
}

MultiplicityResult multiplicity_at(const OdeSystem& sys, const PointTarget& point, const Caps& caps) {
  OdeSystem local = transform_point(sys, point);
  MultiplicityResult r = summarize(expand_branches(local, caps));
  r.point = point;
  return r;
}

}  // namespace pbound
