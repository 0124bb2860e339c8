#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fixperm {

// Exact integers and rationals shared by the oracle, the formula evaluators
// and the generating-function code.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);

// b^e for a possibly negative exponent, exactly.
Rational rational_pow(const Rational& base, long exponent);

// C(n, r) with C(n, r) = 0 when r < 0 or r > n or n < 0.
BigInt binomial(long n, long r);

}  // namespace fixperm
