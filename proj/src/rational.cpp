#include "repsum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace repsum {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) {
      throw std::invalid_argument("rational: malformed value '" + std::string(s) + "'");
    }
    return Rational(parse_integer(s));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  // Sign lives on the numerator only.
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("rational: malformed value '" + std::string(s) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace repsum
