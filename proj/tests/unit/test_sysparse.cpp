#include <random>

#include "doctest.h"
#include "pbound/sysparse.hpp"

using namespace pbound;

namespace {

int error_column(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.column;
  }
  return -1;
}

std::string error_message(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

BiPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), coin(0, 2);
  BiPoly f;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) {
      if (coin(rng) == 0) continue;
      f.add_term(ExtElem(Rational(num(rng), den(rng))), Rational(i), j);
    }
  }
  return f;
}

}  // namespace

TEST_CASE("parse the fold example and LV") {
  auto f = parse_system("dw/dz = (z^2 + m*w) / (z + w^2); m = 0");
  CHECK(f.source.form == SystemSource::Form::PQ);
  CHECK(f.sys.P == BiPoly::z().pow(2));
  CHECK(f.sys.Q == BiPoly::z() + BiPoly::w().pow(2));
  CHECK(f.source.params.at("m") == Rational(0));

  auto lv = parse_system("dz/dt = z*(z + c*w - 1); dw/dt = w*(b*z + w - a); a=-1; b=0; c=0");
  CHECK(lv.source.form == SystemSource::Form::Autonomous);
  BiPoly z = BiPoly::z(), w = BiPoly::w(), one = BiPoly::constant(ExtElem(1));
  CHECK(lv.sys.Q == z * (z - one));
  CHECK(lv.sys.P == w * (w + one));
}

TEST_CASE("literals, comments and axis form") {
  auto p = parse_system("# comment\ndw/dz = 2/3*w^2 - z / (z^3 + 1)");
  CHECK(p.sys.P.coeff(Rational(0), 2) == ExtElem(Rational(2, 3)));
  CHECK(p.source.form == SystemSource::Form::PQ);
  auto ax = parse_system("dw/dz = w / (z*(w + 1))");
  CHECK(ax.source.form == SystemSource::Form::AxisForm);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_column("dw/dz = w / (z") == 13);
  CHECK(error_message("dw/dz = k*w / z").find("unbound parameter 'k'") != std::string::npos);
  CHECK(error_message("dw/dz = 2 z / w").find("unexpected") != std::string::npos);
  CHECK(error_message("dw/dz = (z*w + w) / (z + 1)").find("common factor z+1") != std::string::npos);
  CHECK(error_message("dw/dz = z*-w / 1").find("unary minus") != std::string::npos);
  CHECK(error_message("dw/dz = w / z;\n  m = ").find("line 2") != std::string::npos);
}

TEST_CASE("print then parse is the identity on seeded systems") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    OdeSystem s{random_poly(rng, 3), random_poly(rng, 3)};
    if (s.P.is_zero() || s.Q.is_zero()) continue;
    if (common_factor(s).total_degree() > 0) continue;
    std::string text = print_system(s);
    OdeSystem back = parse_system(text).sys;
    CHECK_MESSAGE(back.P == s.P, text);
    CHECK_MESSAGE(back.Q == s.Q, text);
    CHECK(print_system(back) == text);
    ++checked;
  }
  CHECK(checked == 60);
}
