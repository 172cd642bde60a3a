#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace qcf {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or a bare integer "p". Throws ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, including "0/1" and "1/1".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact dyadic value of a finite double.
Rational exact_from_double(double value);

}  // namespace qcf
