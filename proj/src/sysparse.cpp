#include "pbound/sysparse.hpp"

#include <cctype>
#include <vector>

namespace pbound {

namespace {

enum class Tok { Number, Ratlit, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    int l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (s.find_first_not_of('0', j + 1) >= k) throw ParseError(l, cc, "zero denominator in " + s.substr(i, k - i));
        out.push_back({Tok::Ratlit, s.substr(i, k - i), l, cc});
        advance(k - i);
      } else {
        out.push_back({Tok::Number, s.substr(i, j - i), l, cc});
        advance(j - i);
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '=': k = Tok::Eq; break;
      case ';': k = Tok::Semi; break;
      default:
        throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class PolyParser {
 public:
  PolyParser(const std::vector<Token>& toks, size_t pos, const std::map<std::string, Rational>& params)
      : t_(toks), pos_(pos), params_(params) {}

  BiPoly poly() {
    BiPoly acc;
    bool neg = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
    BiPoly first = term();
    acc = neg ? -first : first;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      BiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }
  size_t pos() const { return pos_; }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError(peek().line, peek().col, "expected " + what + ", found " + describe(peek()));
    return next();
  }

 private:
  BiPoly term() {
    BiPoly acc = factor();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& e = expect(Tok::Number, "a nonnegative integer exponent");
    if (e.text.size() > 4) throw ParseError(e.line, e.col, "exponent too large");
    return base.pow(std::stoi(e.text));
  }

  BiPoly atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
      case Tok::Ratlit:
        return BiPoly::constant(ExtElem(Rational::parse(t.text)));
      case Tok::Ident: {
        if (t.text == "z") return BiPoly::z();
        if (t.text == "w") return BiPoly::w();
        auto it = params_.find(t.text);
        if (it == params_.end()) throw ParseError(t.line, t.col, "unbound parameter '" + t.text + "'");
        return BiPoly::constant(ExtElem(it->second));
      }
      case Tok::LParen: {
        BiPoly inner = poly();
        if (peek().kind != Tok::RParen) {
          throw ParseError(t.line, t.col, "unclosed parenthesis (found " + describe(peek()) + ")");
        }
        next();
        return inner;
      }
      case Tok::Minus:
        throw ParseError(t.line, t.col, "unary minus is only allowed at the start of a sum; use parentheses");
      default:
        throw ParseError(t.line, t.col, "expected a term, found " + describe(t));
    }
  }

  const std::vector<Token>& t_;
  size_t pos_;
  const std::map<std::string, Rational>& params_;
};

// Joins the source text of tokens [a, b) for the report.
std::string span_text(const std::vector<Token>& toks, size_t a, size_t b) {
  std::string s;
  for (size_t i = a; i < b; ++i) {
    if (toks[i].kind == Tok::Plus || toks[i].kind == Tok::Minus) {
      if (i > a) s += " ";
      s += toks[i].text;
      s += " ";
    } else {
      s += toks[i].text;
    }
  }
  return s;
}

bool is_derivative(const std::vector<Token>& t, size_t i, const char* num, const char* den) {
  return i + 3 < t.size() && t[i].kind == Tok::Ident && t[i].text == num && t[i + 1].kind == Tok::Slash &&
         t[i + 2].kind == Tok::Ident && t[i + 2].text == den && t[i + 3].kind == Tok::Eq;
}

Rational binding_value(const std::vector<Token>& t, size_t& i) {
  bool neg = false;
  if (t[i].kind == Tok::Minus || t[i].kind == Tok::Plus) neg = t[i++].kind == Tok::Minus;
  if (t[i].kind != Tok::Number && t[i].kind != Tok::Ratlit) {
    throw ParseError(t[i].line, t[i].col, "parameter value must be a rational literal, found " + describe(t[i]));
  }
  Rational v = Rational::parse(t[i++].text);
  return neg ? -v : v;
}

}  // namespace

std::string to_string(SystemSource::Form f) {
  switch (f) {
    case SystemSource::Form::PQ:
      return "pq";
    case SystemSource::Form::Autonomous:
      return "autonomous";
    case SystemSource::Form::AxisForm:
      return "axis";
  }
  return "";
}

ParsedSystem parse_system(const std::string& text) {
  std::vector<Token> toks = lex(text);
  // statement starts
  std::vector<size_t> starts{0};
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Tok::Semi) starts.push_back(i + 1);
  }
  ParsedSystem out;
  std::vector<size_t> equations;
  for (size_t s : starts) {
    if (toks[s].kind == Tok::Semi || toks[s].kind == Tok::End) continue;
    bool binding = toks[s].kind == Tok::Ident && toks[s + 1].kind == Tok::Eq;
    if (!binding) {
      equations.push_back(s);
      continue;
    }
    const Token& name = toks[s];
    if (name.text == "z" || name.text == "w") throw ParseError(name.line, name.col, "cannot bind variable " + name.text);
    if (out.source.params.count(name.text)) {
      throw ParseError(name.line, name.col, "parameter '" + name.text + "' bound twice");
    }
    size_t i = s + 2;
    out.source.params[name.text] = binding_value(toks, i);
    if (toks[i].kind != Tok::Semi && toks[i].kind != Tok::End) {
      throw ParseError(toks[i].line, toks[i].col, "expected ';' after binding, found " + describe(toks[i]));
    }
  }
  if (equations.empty()) throw ParseError(toks.back().line, toks.back().col, "no equation given");

  auto parse_until_semi = [&](size_t i, std::string& textout, bool allow_slash) {
    PolyParser pp(toks, i, out.source.params);
    BiPoly num = pp.poly();
    BiPoly den = BiPoly::constant(ExtElem(1));
    textout = span_text(toks, i, pp.pos());
    if (allow_slash && pp.peek().kind == Tok::Slash) {
      pp.next();
      size_t d0 = pp.pos();
      den = pp.poly();
      textout += "|" + span_text(toks, d0, pp.pos());
    }
    if (pp.peek().kind != Tok::Semi && pp.peek().kind != Tok::End) {
      const Token& t = pp.peek();
      throw ParseError(t.line, t.col, "unexpected " + describe(t));
    }
    return std::make_pair(num, den);
  };

  size_t e0 = equations[0];
  if (is_derivative(toks, e0, "dw", "dz")) {
    if (equations.size() > 1) {
      const Token& t = toks[equations[1]];
      throw ParseError(t.line, t.col, "only one equation allowed after dw/dz");
    }
    std::string txt;
    auto [num, den] = parse_until_semi(e0 + 4, txt, true);
    auto bar = txt.find('|');
    out.source.p_text = txt.substr(0, bar);
    out.source.q_text = bar == std::string::npos ? "1" : txt.substr(bar + 1);
    out.sys = {num, den};
    out.source.form = SystemSource::Form::PQ;
  } else if (is_derivative(toks, e0, "dz", "dt")) {
    if (equations.size() != 2 || !is_derivative(toks, equations[1], "dw", "dt")) {
      const Token& t = equations.size() > 1 ? toks[equations[1]] : toks.back();
      throw ParseError(t.line, t.col, "expected 'dw/dt =' after dz/dt");
    }
    if (equations.size() > 2) {
      const Token& t = toks[equations[2]];
      throw ParseError(t.line, t.col, "unexpected extra equation");
    }
    std::string qt, pt;
    BiPoly zdot = parse_until_semi(e0 + 4, qt, false).first;
    BiPoly wdot = parse_until_semi(equations[1] + 4, pt, false).first;
    out.sys = {wdot, zdot};
    out.source.p_text = pt;
    out.source.q_text = qt;
    out.source.form = SystemSource::Form::Autonomous;
  } else {
    const Token& t = toks[e0];
    throw ParseError(t.line, t.col, "expected 'dw/dz =' or 'dz/dt =', found " + describe(t));
  }
  if (out.sys.P.is_zero() || out.sys.Q.is_zero()) {
    const Token& t = toks[e0];
    throw ParseError(t.line, t.col, out.sys.Q.is_zero() ? "denominator is zero" : "numerator is zero");
  }
  BiPoly g = common_factor(out.sys);
  if (g.total_degree() > 0) {
    const Token& t = toks[e0];
    throw ParseError(t.line, t.col, "P and Q are not coprime: common factor " + g.str());
  }
  if (out.source.form == SystemSource::Form::PQ && out.sys.Q.min_zexp() >= Rational(1)) {
    out.source.form = SystemSource::Form::AxisForm;
  }
  return out;
}

BiPoly parse_poly(const std::string& text, const std::map<std::string, Rational>& params) {
  std::vector<Token> toks = lex(text);
  PolyParser pp(toks, 0, params);
  BiPoly p = pp.poly();
  pp.expect(Tok::End, "end of input");
  return p;
}

Rational parse_rational(const std::string& text) {
  std::vector<Token> toks = lex(text);
  size_t i = 0;
  Rational v = binding_value(toks, i);
  if (toks[i].kind != Tok::End) throw ParseError(toks[i].line, toks[i].col, "unexpected " + describe(toks[i]));
  return v;
}

std::string print_system(const OdeSystem& sys) { return "dw/dz = (" + sys.P.str() + ") / (" + sys.Q.str() + ")"; }

}  // namespace pbound
