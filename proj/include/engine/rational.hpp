#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace conic {

// Exact ℚ. mpq_rational keeps values in lowest terms with positive
// denominator, so equality is plain comparison and nothing ever rounds.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

// "p/q", or just "p" when the denominator is 1. The only formats accepted
// and emitted anywhere (no decimals).
std::string rat_str(const Rational& x);
Rational parse_rational(const std::string& s);

// x^e for integer e (negative allowed; x must be nonzero then).
Rational rat_pow(const Rational& x, long e);

} // namespace conic
