#pragma once

#include <vector>

#include "pbound/rational.hpp"
#include "pbound/upoly.hpp"

namespace pbound {

using QPoly = UPoly<Rational>;

struct RootMult {
  Rational root;
  int multiplicity = 1;
};

struct SquarefreeRoots {
  QPoly squarefree;  // monic, same distinct roots as the input
  std::vector<RootMult> roots;  // ascending
};

/// Square-free part and all rational roots with multiplicities. Throws on p == 0.
SquarefreeRoots squarefree_and_rational_roots(const QPoly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

struct Factor {
  QPoly poly;  // monic, irreducible over ℚ
  int multiplicity = 1;
  bool presumed_irreducible = false;
};

/// Complete factorization over ℚ (Zassenhaus). Throws "factor cap exceeded" if deg p > cap.
std::vector<Factor> factor_univariate(const QPoly& p, int cap = 8);

/// Irreducible factors of degree <= max_degree only; the rest of p is ignored.
std::vector<Factor> small_factors(const QPoly& p, int max_degree);

/// Deterministic order: by degree, then coefficients from the top.
bool factor_less(const QPoly& a, const QPoly& b);

}  // namespace pbound
