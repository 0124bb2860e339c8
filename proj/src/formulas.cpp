#include "fixperm/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fixperm/errors.hpp"
#include "fixperm/genfun.hpp"
#include "fixperm/oracle.hpp"

namespace fixperm {
namespace {

constexpr std::array<FormulaInfo, 21> kFormulas{{
    {FormulaId::Thm123_321, "thm-123-321", "123,321", 0, "finite rows 1,0,1,2,4 / 0,1,0,2 / 0,0,1; zero for k >= 3"},
    {FormulaId::Thm123_132, "thm-123-132", "123,132", 1, "parity split of n with powers of 4; zero for k >= 3"},
    {FormulaId::Thm123_231, "thm-123-231", "123,231", 2, "quadratics in n selected by n mod 6; k = 0 by complement"},
    {FormulaId::Thm213_132, "thm-213-132", "132,213", 1, "powers of 4 by parity of n and k; k = n-1 is 0, k = n is 1"},
    {FormulaId::Thm132_231, "thm-132-231", "132,231", 3, "(2^(n-1)+(-1)^n)/3 at k = 0, 2/3(2^(n-k)+(-1)^(n-k+1)) for 1 <= k <= n-2"},
    {FormulaId::Thm132_321, "thm-132-321", "132,321", 1, "n-k-1 for k < n, 1 at k = n"},
    {FormulaId::Thm213_231, "thm-213-231", "213,231", 3, "same closed form as thm-132-231"},
    {FormulaId::Thm231_312, "thm-231-312", "231,312", 1, "2^((n-k-2)/2) (C((n+k)/2,(n-k)/2) + C((n+k-2)/2,(n-k)/2)) for n+k even"},
    {FormulaId::Thm231_321, "thm-231-321", "231,321", 0, "coefficient of x^n in x^k (1-x)^(k+1) / (1-x-x^2)^(k+1)"},
    {FormulaId::Thm3_123_132_321, "thm3-123-132-321", "123,132,321", 0, "finite rows 1,0,1,2,1 / 0,1,0,1 / 0,0,1"},
    {FormulaId::Thm3_123_213_321, "thm3-123-213-321", "123,213,321", 0, "finite rows 1,0,1,2,1 / 0,1,0,1 / 0,0,1"},
    {FormulaId::Thm3_123_231_321, "thm3-123-231-321", "123,231,321", 0, "finite rows 1,0,1,1,1 / 0,1,0,2 / 0,0,1"},
    {FormulaId::Thm3_123_312_321, "thm3-123-312-321", "123,312,321", 0, "finite rows 1,0,1,1,1 / 0,1,0,2 / 0,0,1"},
    {FormulaId::Thm3_123_132_213, "thm3-123-132-213", "123,132,213", 3, "squared Fibonacci numbers by parity of n"},
    {FormulaId::Thm3_123_132_231, "thm3-123-132-231", "123,132,231", 3, "floor(n/2), floor(n/2)+(-1)^(n+1), (1+(-1)^n)/2"},
    {FormulaId::Thm3_123_231_312, "thm3-123-231-312", "123,231,312", 3, "n/2 for k = 0,2 when n even; n for k = 1 when n odd"},
    {FormulaId::Thm3_132_213_231, "thm3-132-213-231", "132,213,231", 3, "floor(n/2) + (n/2+1) I(n even), floor(n/2) I(n odd), I(n=k)"},
    {FormulaId::Thm3_132_213_321, "thm3-132-213-321", "132,213,321", 3, "n-1 at k = 0, I(n=k) otherwise"},
    {FormulaId::Thm3_132_231_312, "thm3-132-231-312", "132,231,312", 2, "0, 1 or 2 by parities of n and k"},
    {FormulaId::Thm3_132_231_321, "thm3-132-231-321", "132,231,321", 3, "1 for k <= n-2, 0 at n-1, 1 at n"},
    {FormulaId::Thm3_231_312_321, "thm3-231-312-321", "231,312,321", 3, "C((n+k)/2, k) for n+k even"},
}};

Rational q(long numerator, long denominator = 1) { return Rational(numerator) / denominator; }

Rational pow_q(long base, long exponent) { return rational_pow(Rational(base), exponent); }

long sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

long indicator(bool condition) { return condition ? 1 : 0; }

// C(x, 2) for a rational x, exactly.
Rational choose2(const Rational& x) { return x * (x - 1) / 2; }

EvalResult finite_row(std::initializer_list<long> row, long n) {
  if (n < static_cast<long>(row.size())) return EvalResult::value(*(row.begin() + n));
  return EvalResult::value(0);
}

EvalResult eval_123_321(long n, long k) {
  switch (k) {
    case 0: return finite_row({1, 0, 1, 2, 4}, n);
    case 1: return finite_row({0, 1, 0, 2}, n);
    case 2: return finite_row({0, 0, 1}, n);
    default: return EvalResult::value(0);
  }
}

// Rows are indexed by N = 2h + i as stated.
EvalResult eval_123_132(long size, long k) {
  const long h = size / 2;
  const long i = size % 2;
  if (k >= 3) return EvalResult::value(0);
  if (k == 2) return EvalResult::from_rational(i == 0 ? (pow_q(4, h - 1) + 2) / 3 : q(0));
  if (k == 1) return EvalResult::from_rational(i == 0 ? 2 * (pow_q(4, h - 1) - 1) / 3 : (pow_q(4, h) + 2) / 3);
  return EvalResult::from_rational(i == 0 ? pow_q(4, h - 1) : 2 * (pow_q(4, h) - 1) / 3);
}

Rational s2_123_231(long n) {
  switch (n % 6) {
    case 0: return q(n * (n - 6), 24) + q(n, 2);
    case 1:
    case 5: return q((n - 1) * (n + 1), 24);
    case 2:
    case 4: return q((n - 4) * (n - 2), 24) + q(n, 2);
    default: return q((n - 3) * (n + 3), 24);
  }
}

Rational s1_123_231(long n) {
  switch (n % 6) {
    case 0: return q(n * (n - 6), 12) + 6 * choose2(q(n + 6, 6));
    case 1: return q((n - 3) * (n - 1), 8) + q((n - 7) * (n - 1), 12) + 6 * choose2(q(n + 5, 6)) + q(n + 2, 3);
    case 2: return q(n * (n - 2), 12) + 6 * choose2(q(n + 4, 6));
    case 3: return q((n - 3) * (n - 1), 8) + q((n - 5) * (n - 3), 12) + 6 * choose2(q(n + 3, 6)) + q(2 * n + 3, 3);
    case 4: return q((n - 12) * (n + 2), 12) + 6 * choose2(q(n + 8, 6));
    default: return q((n - 3) * (n - 1), 8) + q((n - 5) * (n - 3), 12) + 6 * choose2(q(n + 1, 6)) + q(n);
  }
}

EvalResult eval_123_231(long n, long k) {
  if (k >= 3) return EvalResult::value(0);
  if (k == 2) return EvalResult::from_rational(s2_123_231(n));
  if (k == 1) return EvalResult::from_rational(s1_123_231(n));
  return EvalResult::from_rational(Rational(binomial(n, 2)) + 1 - s1_123_231(n) - s2_123_231(n));
}

// The statement writes N = 2h + i and indexes fixed points as 2j or
// 2j+1 with 1 <= j <= h-1; k = 1 is not covered for N >= 3.
EvalResult eval_213_132(long size, long k) {
  if (k == size) return EvalResult::value(1);
  if (k == size - 1) return EvalResult::value(0);
  const long h = size / 2;
  const long i = size % 2;
  if (k == 0) return EvalResult::from_rational(i == 0 ? (5 * pow_q(4, h - 1) - 2) / 3 : 2 * (pow_q(4, h) - 1) / 3);
  const long j = k % 2 == 0 ? k / 2 : (k - 1) / 2;
  if (j < 1 || j > h - 1) return EvalResult::out_of_domain();
  const bool even_k = k % 2 == 0;
  const bool lit = even_k ? i == 0 : i == 1;
  return EvalResult::from_rational(lit ? pow_q(4, h - j - 1) : q(0));
}

EvalResult eval_132_231(long n, long k) {
  if (k == 0) return EvalResult::from_rational((pow_q(2, n - 1) + sign(n)) / 3);
  if (k <= n - 2) return EvalResult::from_rational(q(2, 3) * (pow_q(2, n - k) + sign(n - k + 1)));
  return EvalResult::value(k == n - 1 ? 0 : 1);
}

EvalResult eval_132_321(long n, long k) { return EvalResult::value(k == n ? 1 : n - k - 1); }

EvalResult eval_231_312(long n, long k) {
  if ((n + k) % 2 != 0) return EvalResult::value(0);
  const Rational scale = pow_q(2, (n - k - 2) / 2);
  const long lower = (n - k) / 2;
  return EvalResult::from_rational(scale * Rational(binomial((n + k) / 2, lower) + binomial((n + k - 2) / 2, lower)));
}

EvalResult eval_231_321(long n, long k) {
  return EvalResult::value(series_coefficients(gf_for_k(static_cast<std::size_t>(k)), static_cast<std::size_t>(n))
                               [static_cast<std::size_t>(n)]);
}

EvalResult eval_123_alpha_321(std::string_view alpha, long n, long k) {
  switch (k) {
    case 0:
      return alpha == "231" || alpha == "312" ? finite_row({1, 0, 1, 1, 1}, n) : finite_row({1, 0, 1, 2, 1}, n);
    case 1:
      return alpha == "132" || alpha == "213" ? finite_row({0, 1, 0, 1}, n) : finite_row({0, 1, 0, 2}, n);
    case 2: return finite_row({0, 0, 1}, n);
    default: return EvalResult::value(0);
  }
}

EvalResult eval_123_132_213(long n, long k) {
  const bool even = n % 2 == 0;
  if (k >= 3) return EvalResult::value(0);
  if (k == 2) return EvalResult::value(even ? pow(fibonacci((n - 2) / 2), 2) : BigInt(0));
  if (k == 1) return EvalResult::value(even ? BigInt(0) : pow(fibonacci((n - 1) / 2), 2));
  const BigInt square = even ? pow(fibonacci((n - 2) / 2), 2) : pow(fibonacci((n - 1) / 2), 2);
  return EvalResult::from_rational(Rational(fibonacci(n) - square));
}

EvalResult eval_123_132_231(long n, long k) {
  switch (k) {
    case 0: return EvalResult::value(n / 2);
    case 1: return EvalResult::from_rational(q(n / 2 + sign(n + 1)));
    case 2: return EvalResult::from_rational(q(1 + sign(n), 2));
    default: return EvalResult::value(0);
  }
}

EvalResult eval_123_231_312(long n, long k) {
  const long odd = indicator(n % 2 == 1);
  const long even = indicator(n % 2 == 0);
  switch (k) {
    case 0:
    case 2: return EvalResult::from_rational(q(n, 2) * (1 - odd));
    case 1: return EvalResult::from_rational(q(n * (1 - even)));
    default: return EvalResult::value(0);
  }
}

EvalResult eval_132_213_231(long n, long k) {
  if (k == 0) return EvalResult::from_rational(q(n / 2) + (q(n, 2) + 1) * indicator(n % 2 == 0));
  if (k == 1) return EvalResult::value((n / 2) * indicator(n % 2 == 1));
  return EvalResult::value(indicator(n == k));
}

EvalResult eval_132_213_321(long n, long k) {
  return EvalResult::value(k == 0 ? n - 1 : indicator(n == k));
}

EvalResult eval_132_231_312(long n, long k) {
  if (k == 0) return EvalResult::from_rational(q(1 + sign(n), 2));
  if (n == k) return EvalResult::value(1);
  return EvalResult::value(k % 2 == 0 ? 1 + sign(n) : 1 + sign(n + 1));
}

EvalResult eval_132_231_321(long n, long k) {
  if (k <= n - 2) return EvalResult::value(1);
  return EvalResult::value(k == n ? 1 : 0);
}

EvalResult eval_231_312_321(long n, long k) {
  if ((n + k) % 2 != 0) return EvalResult::value(0);
  return EvalResult::value(binomial((n + k) / 2, k));
}

}  // namespace

std::span<const FormulaInfo> all_formulas() { return kFormulas; }

const FormulaInfo& info(FormulaId id) {
  for (const FormulaInfo& f : kFormulas) {
    if (f.id == id) return f;
  }
  throw std::logic_error("unregistered formula id");
}

PatternSet patterns_of(FormulaId id) { return PatternSet::parse(info(id).patterns); }

std::optional<FormulaId> find_formula(std::string_view name) {
  for (const FormulaInfo& f : kFormulas) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

std::optional<FormulaId> formula_for(const PatternSet& patterns) {
  for (const FormulaInfo& f : kFormulas) {
    if (PatternSet::parse(f.patterns) == patterns) return f.id;
  }
  return std::nullopt;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Untested: return "untested";
    case Status::Verified: return "verified";
    case Status::Discrepant: return "discrepant";
  }
  return "?";
}

EvalResult EvalResult::from_rational(const Rational& r) {
  if (denominator(r) != 1 || r < 0) return non_integral(r);
  return value(numerator(r));
}

const BigInt& EvalResult::get() const {
  if (kind_ != Kind::Value) throw std::logic_error("EvalResult has no value");
  return value_;
}

std::string EvalResult::to_string() const {
  switch (kind_) {
    case Kind::Value: return value_.str();
    case Kind::OutOfDomain: return "out-of-domain";
    case Kind::NonIntegral: return "non-integral(" + raw_.str() + ")";
  }
  return "?";
}

EvalResult evaluate(FormulaId id, long n, long k) {
  if (k < 0 || k > n || n < info(id).min_n) return EvalResult::out_of_domain();
  switch (id) {
    case FormulaId::Thm123_321: return eval_123_321(n, k);
    case FormulaId::Thm123_132: return eval_123_132(n, k);
    case FormulaId::Thm123_231: return eval_123_231(n, k);
    case FormulaId::Thm213_132: return eval_213_132(n, k);
    case FormulaId::Thm132_231: return eval_132_231(n, k);
    case FormulaId::Thm132_321: return eval_132_321(n, k);
    case FormulaId::Thm213_231: return eval_132_231(n, k);
    case FormulaId::Thm231_312: return eval_231_312(n, k);
    case FormulaId::Thm231_321: return eval_231_321(n, k);
    case FormulaId::Thm3_123_132_321: return eval_123_alpha_321("132", n, k);
    case FormulaId::Thm3_123_213_321: return eval_123_alpha_321("213", n, k);
    case FormulaId::Thm3_123_231_321: return eval_123_alpha_321("231", n, k);
    case FormulaId::Thm3_123_312_321: return eval_123_alpha_321("312", n, k);
    case FormulaId::Thm3_123_132_213: return eval_123_132_213(n, k);
    case FormulaId::Thm3_123_132_231: return eval_123_132_231(n, k);
    case FormulaId::Thm3_123_231_312: return eval_123_231_312(n, k);
    case FormulaId::Thm3_132_213_231: return eval_132_213_231(n, k);
    case FormulaId::Thm3_132_213_321: return eval_132_213_321(n, k);
    case FormulaId::Thm3_132_231_312: return eval_132_231_312(n, k);
    case FormulaId::Thm3_132_231_321: return eval_132_231_321(n, k);
    case FormulaId::Thm3_231_312_321: return eval_231_312_321(n, k);
  }
  return EvalResult::out_of_domain();
}

BigInt fibonacci(long n) {
  if (n < 0) throw InvalidInput("fibonacci: negative index");
  BigInt a = 1, b = 1;
  for (long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt jacobsthal(long n) {
  if (n < 0) throw InvalidInput("jacobsthal: negative index");
  BigInt a = 1, b = 1;
  for (long i = 0; i < n; ++i) {
    BigInt next = b + 2 * a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

EvalResult sum_identity(const PatternSet& patterns, long n) {
  if (n < 1) return EvalResult::out_of_domain();
  if (patterns == PatternSet::parse("132,321")) return EvalResult::value(binomial(n, 2) + 1);
  if (patterns == PatternSet::parse("231,321")) return EvalResult::value(BigInt(1) << (n - 1));
  return EvalResult::out_of_domain();
}

bool has_recurrence(FormulaId id) {
  return id == FormulaId::Thm132_231 || id == FormulaId::Thm231_312 || id == FormulaId::Thm231_321 ||
         id == FormulaId::Thm3_231_312_321;
}

std::vector<FormulaId> recurrence_formulas() {
  return {FormulaId::Thm132_231, FormulaId::Thm231_312, FormulaId::Thm231_321, FormulaId::Thm3_231_312_321};
}

RecurrenceReport recurrence_check(FormulaId id, long n_max, const Oracle& oracle) {
  if (!has_recurrence(id)) {
    throw InvalidInput(std::string(info(id).name) + " has no recurrence to check");
  }
  const PatternSet t = patterns_of(id);
  const auto s = [&](long n, long k) { return oracle.count(n, k, t); };

  RecurrenceReport report{id, {}, 0, n_max, 0, {}};
  switch (id) {
    case FormulaId::Thm132_231: report.relation = "s(n,0) = s(n-1,0) + 2 s(n-2,0)"; report.n_min = 3; break;
    case FormulaId::Thm231_312: report.relation = "s(n,k) = 2 s(n-2,k) + s(n-1,k-1)"; report.n_min = 3; break;
    case FormulaId::Thm231_321:
      report.relation = "s(n,k) = s(n-1,k-1) + s(n-2,k) + s(n-1,k) - s(n-2,k-1)";
      report.n_min = 2;
      break;
    default: report.relation = "s(n,k) = s(n-1,k-1) + s(n-2,k)"; report.n_min = 2; break;
  }

  for (long n = report.n_min; n <= n_max; ++n) {
    const long k_last = id == FormulaId::Thm132_231 ? 0 : n;
    for (long k = 0; k <= k_last; ++k) {
      BigInt rhs;
      switch (id) {
        case FormulaId::Thm132_231: rhs = s(n - 1, 0) + 2 * s(n - 2, 0); break;
        case FormulaId::Thm231_312: rhs = 2 * s(n - 2, k) + s(n - 1, k - 1); break;
        case FormulaId::Thm231_321: rhs = s(n - 1, k - 1) + s(n - 2, k) + s(n - 1, k) - s(n - 2, k - 1); break;
        default: rhs = s(n - 1, k - 1) + s(n - 2, k); break;
      }
      BigInt lhs = s(n, k);
      ++report.cells_checked;
      if (lhs != rhs) report.violations.push_back({n, k, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

}  // namespace fixperm
