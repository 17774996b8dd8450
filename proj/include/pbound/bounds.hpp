#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbound/branching.hpp"
#include "pbound/factor.hpp"

namespace pbound {

/// A singular point on the axis z = 0: w = ∞, a rational root of P(0,w), or one
/// representative root of an irreducible factor (standing for `weight` points).
struct AxisPoint {
  enum class Kind { Infinity, Rational, Algebraic };
  Kind kind = Kind::Infinity;
  ExtElem value;
  QPoly factor;  // minimal polynomial for Algebraic points
  int weight = 1;
  bool capped = false;  // the root could not be adjoined within the tower cap
  std::string str() const;
  PointTarget target() const;
};

struct AxisPoints {
  std::vector<AxisPoint> points;
  int k = 0;  // number of distinct complex roots of P(0,w)
};

/// For dw/dz = P / (z Q) given as OdeSystem{P, z Q}. Throws if the denominator is
/// not divisible by z or P(0,w) vanishes identically.
AxisPoints axis_singular_points(const OdeSystem& axis, const Caps& caps = {});

/// u z + v w + t = 0; coefficients live in `tower` (null for rational lines).
struct Line {
  ExtElem u, v, t;
  Tower tower;
  int conjugacy = 1;
  BiPoly poly() const;
  bool strict() const { return !u.is_zero() && !v.is_zero(); }
  std::string str() const;
};

struct BoundReport {
  OdeSystem axis;                // dw/dz = P / (z Q) as {P, z Q}
  std::optional<Line> line;      // for line-based bounds, the line in original coordinates
  bool swapped = false;          // z and w were exchanged before transforming
  int M_axis = 0;                // max(deg P, deg z Q) of the axis form
  std::optional<int> M_line;     // max(deg P, deg Q) of the original system
  int k = 0;
  std::vector<AxisPoint> points;
  std::vector<MultiplicityResult> muls;  // parallel to points
  std::vector<int> summands;             // weight * count per point
  std::optional<int> sum_bound;          // bound on deg_w f
  std::optional<int> fallback_bound;     // M(k+1), bound on deg_w f
  std::optional<int> line_bound;         // M(M+1), bound on deg f
  std::optional<int> lower_bound;        // partial sum when some point is capped
  std::optional<size_t> blocking;        // index of a critical point
  bool inconclusive = false;
  std::vector<std::string> flags;
};

/// Sum and fallback bounds for an axis-form system.
BoundReport axis_degree_bound(const OdeSystem& axis, const Caps& caps = {});

struct LineTransform {
  OdeSystem axis;
  bool swapped = false;
  BiPoly cofactor;  // X(L) = cofactor * L in original coordinates
};

/// Moves an invariant line to z̄ = 0: z̄ = a z + b w + c, w̄ = w. Swaps z and w first
/// when a = 0. Throws when the line is not invariant.
LineTransform line_transform(const OdeSystem& sys, const Rational& a, const Rational& b, const Rational& c);

/// Degree bound M(M+1) through an invariant line, unless an axis point is critical.
BoundReport line_degree_bound(const OdeSystem& sys, const Rational& a, const Rational& b, const Rational& c,
                              const Caps& caps = {});

struct LineScan {
  std::vector<Line> lines;
  bool dicritical = false;  // a one-parameter family of invariant lines exists
  std::vector<std::string> flags;
};

/// All invariant straight lines, including those with algebraic coefficients.
LineScan detect_invariant_lines(const OdeSystem& sys, const Caps& caps = {});

}  // namespace pbound
