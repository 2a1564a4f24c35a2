#include "circlegraph/rational.hpp"

#include <cctype>

namespace circlegraph {

namespace {

bool is_int_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int_literal(text, true)) throw ParseError("bad rational '" + std::string(text) + "'");
    return Rational(to_mpz(text), mpz_class(1));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int_literal(num, true) || !is_int_literal(den, false))
    throw ParseError("bad rational '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(to_mpz(num), d);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace circlegraph
