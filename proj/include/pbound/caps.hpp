#pragma once

#include <string>

namespace pbound {

struct Caps {
  int depth = 32;          // substitution steps along one branch
  long ramification = 64;  // common denominator of exponents
  int tower = 16;          // degree of the coefficient field over ℚ
  int factor = 8;          // degree limit for univariate factorization
  int display_terms = 8;   // terms printed for uniquely continued branches
  int threads = 1;
  int extactic_dim = 10;   // largest extactic matrix size

  /// Applies "depth=32,ram=64,tower=16" style overrides; throws on unknown keys.
  void apply(const std::string& overrides);
  /// Defaults overridden by the PBOUND_CAPS environment variable when set.
  static Caps from_env();
};

}  // namespace pbound
