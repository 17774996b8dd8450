#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbound/rational.hpp"
#include "pbound/upoly.hpp"

namespace pbound {

struct TowerLevel;
/// A tower of simple extensions; nullptr is the base field ℚ.
using Tower = std::shared_ptr<const TowerLevel>;

/// Element of ℚ or of a finite tower ℚ(t1)(t2)...; kept at the lowest level that
/// contains it, so rational values always carry a null tower.
class ExtElem {
 public:
  ExtElem() = default;
  template <std::integral T>
  ExtElem(T v) : q_(v) {}              // NOLINT(google-explicit-constructor)
  ExtElem(Rational q) : q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  /// Coordinates over the parent of `t` in the basis 1, t, ..., t^(d-1).
  ExtElem(Tower t, std::vector<ExtElem> coords);

  static ExtElem generator(const Tower& t);

  const Tower& tower() const { return t_; }
  bool is_rational() const { return t_ == nullptr; }
  const Rational& rational() const;
  const std::vector<ExtElem>& coords() const { return c_; }

  bool is_zero() const { return t_ == nullptr && q_.is_zero(); }
  /// Nonzero test that, in a tower with presumed levels, also proves the value is
  /// a unit; throws TowerSplit when a zero divisor shows up.
  bool certified_nonzero() const;

  ExtElem inverse() const;

  std::string str() const;

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
  friend ExtElem operator-(const ExtElem& a);
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return (a - b).is_zero(); }

 private:
  void normalize();

  Tower t_;
  Rational q_;
  std::vector<ExtElem> c_;
};

using ExtPoly = UPoly<ExtElem>;

struct TowerLevel {
  Tower parent;
  std::string name;
  ExtPoly modulus;  // monic over parent, degree >= 2
  int degree = 0;
  int depth = 0;         // 1 for the first level over ℚ
  int total_degree = 1;  // product of all level degrees
  bool presumed_irreducible = false;

  bool any_presumed() const {
    for (const TowerLevel* l = this; l; l = l->parent.get()) {
      if (l->presumed_irreducible) return true;
    }
    return false;
  }
};

/// Thrown when an element of a presumed-irreducible level turns out to be a zero
/// divisor: the level's modulus factors as first * second.
struct TowerSplit : std::runtime_error {
  TowerSplit(Tower lvl, ExtPoly a, ExtPoly b)
      : std::runtime_error("tower split"), level(std::move(lvl)), first(std::move(a)), second(std::move(b)) {}
  Tower level;
  ExtPoly first, second;
};

struct CapError : std::runtime_error {
  CapError(std::string which_cap, const std::string& msg) : std::runtime_error(msg), which(std::move(which_cap)) {}
  std::string which;
};

int tower_depth(const Tower& t);
int tower_degree(const Tower& t);
bool is_ancestor(const Tower& anc, const Tower& t);
/// The deeper of two towers; throws if neither contains the other.
Tower common_tower(const Tower& a, const Tower& b);
/// Level list from the bottom (depth 1) up.
std::vector<Tower> tower_levels(const Tower& t);

/// "t1^2+1=0, t2^2-t1=0" listing each level's defining relation.
std::string describe_tower(const Tower& t);

/// Adjoins a root of m (monic-ized). Over ℚ the caller must have certified m
/// irreducible or pass presumed = true.
std::pair<Tower, ExtElem> adjoin_root(const Tower& base, const ExtPoly& m, bool presumed, int tower_cap = 16);

struct Inverse {
  ExtElem value;
};
struct Split {
  Tower level;            // the level whose modulus factored
  ExtPoly first, second;  // monic over level->parent, first * second == level->modulus
};
std::variant<Inverse, Split> try_invert(const ExtElem& e);

/// Canonical total order used for deterministic output.
int compare_canonical(const ExtElem& a, const ExtElem& b);

/// Lifts a rational polynomial into ExtPoly.
ExtPoly to_ext(const UPoly<Rational>& p);
bool all_rational(const ExtPoly& p);
UPoly<Rational> to_rational(const ExtPoly& p);

}  // namespace pbound
