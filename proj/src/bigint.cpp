#include "fixperm/bigint.hpp"

namespace fixperm {

std::string to_string(const BigInt& value) { return value.str(); }

Rational rational_pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational factor = exponent >= 0 ? base : Rational(1) / base;
  for (long e = exponent >= 0 ? exponent : -exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

}  // namespace fixperm
