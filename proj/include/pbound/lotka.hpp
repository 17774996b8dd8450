#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbound/bounds.hpp"
#include "pbound/darboux.hpp"

namespace pbound {

/// ż = z(z + c w - 1), ẇ = w(b z + w - a).
struct LvParams {
  Rational a, b, c;
  std::string str() const;
};

OdeSystem lv_system(const LvParams& p);

struct GenericityClause {
  std::string name;  // "a", "c", "c-1/a"
  bool defined = true;
  bool ok = true;
  std::string detail;
};

/// a ∉ ℚ⁺, c ∉ ℚ⁻, c - 1/a ∉ ℚ⁺ \ {1}.
struct Genericity {
  bool holds = true;
  std::vector<GenericityClause> clauses;
  std::string violated;  // first failing clause
};
Genericity genericity_check(const LvParams& p);

/// Multiplicities at (0,∞), (0,a), (0,0) of the system restricted to the line z = 0.
struct LvTriple {
  MultiplicityResult at_infinity, at_a, at_origin;
};
LvTriple lv_triple(const LvParams& p, const Caps& caps = {});

struct LvClassification {
  enum class Kind { StrictCurve, NoStrictCurve, Inapplicable, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Genericity genericity;
  Rational discriminant;  // a(1-c) + (1-b)
  std::string curve_text;
  std::optional<DarbouxCertificate> curve;
  std::optional<BoundReport> bound;
  std::optional<DarbouxSearch> search;
  int search_degree = 0;
  std::vector<std::string> notes;
};
std::string to_string(LvClassification::Kind k);

LvClassification classify(const LvParams& p, const Caps& caps = {});

enum class LvSymmetry { Swap, Inversion };

/// New coordinates (Z, W) as Laurent polynomials in z, w and the new parameters.
struct SymmetryImage {
  LvParams params;
  BiPoly Z, W;
};
SymmetryImage apply_symmetry(const LvParams& p, LvSymmetry which);

/// Checks that (Z, W) carries orbits of lv(p) to orbits of lv(image.params).
bool symmetry_holds(const LvParams& p, const SymmetryImage& image);

}  // namespace pbound
