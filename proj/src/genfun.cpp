#include "fixperm/genfun.hpp"

#include <algorithm>

#include "fixperm/errors.hpp"

namespace fixperm {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
    : coefficients_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t power) {
  std::vector<BigInt> c(power + 1, 0);
  c[power] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result{1};
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RationalGF::RationalGF(IntPolynomial numerator, IntPolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.coefficient(0) == 0) {
    throw InvalidInput("generating function denominator must have a nonzero constant term");
  }
}

RationalGF gf_for_k(std::size_t k) {
  const IntPolynomial one_minus_x{1, -1};
  const IntPolynomial fibonacci_den{1, -1, -1};
  const auto power = static_cast<unsigned>(k + 1);
  return RationalGF(IntPolynomial::monomial(1, k) * one_minus_x.pow(power), fibonacci_den.pow(power));
}

std::vector<BigInt> series_coefficients(const RationalGF& gf, std::size_t m) {
  const auto& den = gf.denominator().coefficients();
  const BigInt& lead = den.front();
  std::vector<BigInt> c(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    BigInt acc = gf.numerator().coefficient(i);
    for (std::size_t j = 1; j < den.size() && j <= i; ++j) acc -= den[j] * c[i - j];
    if (acc % lead != 0) {
      throw InvalidInput("series coefficient " + std::to_string(i) + " is not an integer");
    }
    c[i] = acc / lead;
  }
  return c;
}

std::vector<BigInt> sum_over_k(std::size_t k_max, std::size_t m) {
  if (k_max < m) {
    throw InvalidInput("sum_over_k: k_max (" + std::to_string(k_max) + ") must be at least m (" +
                       std::to_string(m) + ")");
  }
  std::vector<BigInt> total(m + 1, 0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto c = series_coefficients(gf_for_k(k), m);
    for (std::size_t i = 0; i <= m; ++i) total[i] += c[i];
  }
  return total;
}

}  // namespace fixperm
