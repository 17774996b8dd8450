#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pbound/caps.hpp"
#include "pbound/ode.hpp"

namespace pbound {

/// X(f) = Q f_z + P f_w for the field ż = Q, ẇ = P.
BiPoly apply_field(const OdeSystem& sys, const BiPoly& f);

struct Strictness {
  bool strict = true;
  std::vector<BiPoly> components;  // factors depending on one variable only
};
Strictness strictness_check(const BiPoly& f);

struct DarbouxCertificate {
  BiPoly f;
  BiPoly cofactor;
  bool strict = true;
  std::vector<BiPoly> constant_components;
  bool irreducible = false;
  bool certified = false;  // irreducibility proven, not presumed
};

struct NotDarboux {
  BiPoly remainder;
};

/// Exact division of X(f) by f. Throws "constant candidate" for constant f.
std::variant<DarbouxCertificate, NotDarboux> verify_darboux(const OdeSystem& sys, const BiPoly& f);

/// Scales f so that its leading term (highest w power, then highest z power) is 1.
BiPoly normalize_curve(const BiPoly& f);

/// Extactic determinant of the monomials of degree ≤ n.
BiPoly extactic(const OdeSystem& sys, int n);

struct DarbouxSearch {
  std::vector<DarbouxCertificate> certificates;
  std::vector<std::string> flags;
  bool partial = false;
};

/// Irreducible Darboux polynomials over ℚ of total degree 1..max_degree.
DarbouxSearch search_darboux(const OdeSystem& sys, int max_degree, const Caps& caps = {});

}  // namespace pbound
