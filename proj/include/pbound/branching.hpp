#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbound/caps.hpp"
#include "pbound/newton.hpp"

namespace pbound {

enum class BranchStatus { Open, ClosedUnique, CriticalFamily, NonAlgebraic, CapExceeded };
std::string to_string(BranchStatus s);

struct CriticalWitness {
  std::string rule;  // "vertex" or "resonance"
  Rational lambda;   // exponent of the free coefficient
  int step = 0;      // number of terms fixed before the family appears
  std::vector<Term> prefix;
};

struct BranchLeaf {
  PuiseuxBranch branch;
  BranchStatus status = BranchStatus::Open;
  int fold = 0;  // multiplicity of the last acceptable pair (0 at the root)
  std::optional<CriticalWitness> witness;
  std::string cap;  // which cap stopped this leaf
  std::vector<std::string> flags;
};

struct BranchTree {
  OdeSystem root;
  std::vector<BranchLeaf> leaves;  // canonical order
  std::vector<std::string> flags;
};

/// Expands all local solutions at the origin of `sys`.
BranchTree expand_branches(const OdeSystem& sys, const Caps& caps = {});

enum class ClosureVerdict { ClosedUnique, Continue };
struct Closure {
  ClosureVerdict verdict = ClosureVerdict::ClosedUnique;
  std::optional<Rational> rho;  // indicial ratio when it lies above lambda_prev
};
/// Uniqueness test for the remainder after a 1-folded pair with exponent lambda_prev.
Closure closure_check(const CoeffProfile& remainder, const Rational& lambda_prev);

enum class ResonanceOutcome { CriticalFamily, ClosedUnique, NonAlgebraic, CapExceeded };
struct Resonance {
  ResonanceOutcome outcome = ResonanceOutcome::ClosedUnique;
  int steps = 0;  // unique steps taken before the decision
  Rational lambda;
  std::vector<Term> terms;  // terms added while stepping
};
/// Steps a 1-folded remainder forward until the indicial ratio rho is reached.
Resonance resolve_resonance(const OdeSystem& remainder, const Rational& lambda_prev, const Rational& rho,
                            const Caps& caps = {});

struct MultiplicityResult {
  enum class Kind { Finite, Critical, Capped };
  Kind kind = Kind::Finite;
  int count = 0;  // exact for Finite, lower bound for Capped
  PointTarget point;
  OdeSystem local;  // the system moved to the origin
  std::vector<BranchLeaf> branches;
  std::optional<CriticalWitness> witness;
  std::vector<std::string> diagnostics;
  std::vector<std::string> flags;

  bool finite() const { return kind == Kind::Finite; }
};

MultiplicityResult multiplicity_at(const OdeSystem& sys, const PointTarget& point, const Caps& caps = {});
/// Tallies an already expanded tree.
MultiplicityResult summarize(const BranchTree& tree);

}  // namespace pbound
