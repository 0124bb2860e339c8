#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fixperm/bigint.hpp"

namespace fixperm {

/// Integer polynomial in x; coefficient i multiplies x^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(const BigInt& coefficient, std::size_t power);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
  BigInt coefficient(std::size_t power) const;

  IntPolynomial pow(unsigned exponent) const;

  /// Human-readable form with descending signs, e.g. "1 - x - x^2".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// numerator / denominator as a formal power series.
class RationalGF {
 public:
  /// Throws InvalidInput when the denominator has a zero constant term.
  RationalGF(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const noexcept { return numerator_; }
  const IntPolynomial& denominator() const noexcept { return denominator_; }

 private:
  IntPolynomial numerator_;
  IntPolynomial denominator_;
};

/// G_k(x) = x^k (1-x)^(k+1) / (1-x-x^2)^(k+1), the fixed-point-refined
/// generating function of permutations avoiding 231 and 321.
RationalGF gf_for_k(std::size_t k);

/// Coefficients c_0..c_m of the Maclaurin series, by the linear recurrence
/// the denominator induces. Throws InvalidInput if a coefficient is not an
/// integer (possible only when the constant term is not +-1).
std::vector<BigInt> series_coefficients(const RationalGF& gf, std::size_t m);

/// Coefficientwise sum of the series of G_0..G_{k_max} up to x^m.
/// Throws InvalidInput when k_max < m, since G_k for k > k_max would still
/// contribute to the truncated range.
std::vector<BigInt> sum_over_k(std::size_t k_max, std::size_t m);

}  // namespace fixperm
