#pragma once

#include <vector>

#include "pbound/ode.hpp"

namespace pbound {

enum class Origin { P, Q, Both };

/// (j, k_j) from P_j and (i+1, l_i - 1) from Q_i; coincident points merge.
struct SupportPoint {
  int x = 0;
  Rational y;
  Origin origin = Origin::P;
  ExtElem p;  // p_{x,0} when the P side is present
  ExtElem q;  // q_{x-1,0} when the Q side is present
};

struct Edge {
  int x1 = 0, x2 = 0;
  Rational y1, y2;
  Rational lambda;  // minus the slope
  ExtPoly char_poly;
  std::vector<int> on_edge;  // x-coordinates of support points on the edge
  bool admissible() const { return lambda.is_positive(); }
};

struct VertexCandidate {
  int x = 0;
  Rational y;
  ExtElem ratio;  // p_{x,0} / q_{x-1,0}
};

struct NewtonDiagram {
  std::vector<SupportPoint> points;
  std::vector<Edge> edges;  // lower hull, left to right
  std::vector<VertexCandidate> vertex_candidates;
};

std::vector<SupportPoint> support_points(const CoeffProfile& profile);
NewtonDiagram lower_hull(const std::vector<SupportPoint>& points);

/// Σ q λ α^x - Σ p α^x over the points minimizing y + λ x.
ExtPoly edge_char_poly(const std::vector<SupportPoint>& points, const Rational& lambda);

struct VertexVerdict {
  enum class Kind { NotCritical, Critical, DicriticalSuspect };
  Kind kind = Kind::NotCritical;
  int x = 0;
  Rational lambda;  // λ* when rational
  ExtElem ratio;
};

/// Vertex criticality test at every merged hull vertex; only ratios above
/// lambda_floor count (the last exponent of the branch, 0 at the root).
std::vector<VertexVerdict> vertex_critical_check(const NewtonDiagram& diagram, const Rational& lambda_floor = Rational(0));

/// True when (λ, α) balances the two lowest exponents (α ≠ 0).
bool is_acceptable(const CoeffProfile& profile, const Rational& lambda, const ExtElem& alpha);

}  // namespace pbound
