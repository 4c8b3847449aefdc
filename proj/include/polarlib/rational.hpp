#pragma once

#include <gmpxx.h>

#include <string>

namespace polar {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms; throws on a zero denominator.
Rational makeRational(const Integer& num, const Integer& den);

/// Parses "a" or "a/b" (optional sign); throws PolarError on bad input.
Rational parseRational(const std::string& text);

std::string toString(const Rational& q);

}  // namespace polar
