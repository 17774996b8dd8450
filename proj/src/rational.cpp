#include "pbound/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pbound {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(mpz_class(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d)) throw std::invalid_argument("bad rational literal: " + s);
  return Rational(mpz_class(strip_plus(n)), mpz_class(strip_plus(d)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1) / v_);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

mpz_class lcm_den(const Rational& a, const Rational& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.value().get_den_mpz_t(), b.value().get_den_mpz_t());
  return r;
}

}  // namespace pbound
