#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "pbound/ode.hpp"

namespace pbound {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

struct SystemSource {
  enum class Form { PQ, Autonomous, AxisForm };
  Form form = Form::PQ;
  std::string p_text, q_text;
  std::map<std::string, Rational> params;
};

struct ParsedSystem {
  OdeSystem sys;
  SystemSource source;
};

/// Reads "dw/dz = P/Q; m = 0" or "dz/dt = ...; dw/dt = ...; a = -1".
/// Literals like 2/3 (no spaces) are rational constants; a spaced "/" divides.
ParsedSystem parse_system(const std::string& text);

/// Parses a single polynomial in z, w with the given parameter values.
BiPoly parse_poly(const std::string& text, const std::map<std::string, Rational>& params = {});

/// Parses "r", "-r" or "a/b" into an exact rational; throws ParseError.
Rational parse_rational(const std::string& text);

/// "dw/dz = (P)/(Q)", accepted by parse_system.
std::string print_system(const OdeSystem& sys);
std::string to_string(SystemSource::Form f);

}  // namespace pbound
