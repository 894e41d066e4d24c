#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace homdich {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; construction from raw parts must go through
// make_rational or parse_rational to stay canonical.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Short form: "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& value);
// Always "p/q"; used in JSON so consumers never see floats.
std::string to_fraction_string(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

bool is_canonical(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

using RationalVector = std::vector<Rational>;

}  // namespace homdich
