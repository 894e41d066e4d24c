#include "homdich/numeric/rational.hpp"

#include <cctype>

#include "homdich/error.hpp"

namespace homdich {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  require(sgn(den) != 0, ErrorKind::Contract, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const Integer num = parse_integer(s.substr(0, slash), s);
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    fail(ErrorKind::Parse, "sign not allowed in denominator: '" + std::string(s) + "'");
  }
  const Integer den = parse_integer(den_text, s);
  if (sgn(den) == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime, so no canonicalization needed.
  Rational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  return r;
}

bool is_canonical(const Rational& value) {
  if (sgn(value.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (sgn(value.get_num()) == 0) return value.get_den() == 1;
  return g == 1;
}

}  // namespace homdich
