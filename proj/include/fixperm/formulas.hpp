#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixperm/bigint.hpp"
#include "fixperm/permutation.hpp"

namespace fixperm {

class Oracle;

/// One enumerative result for s_n^k(T), evaluated exactly as stated.
enum class FormulaId {
  Thm123_321,
  Thm123_132,
  Thm123_231,
  Thm213_132,
  Thm132_231,
  Thm132_321,
  Thm213_231,
  Thm231_312,
  Thm231_321,
  Thm3_123_132_321,
  Thm3_123_213_321,
  Thm3_123_231_321,
  Thm3_123_312_321,
  Thm3_123_132_213,
  Thm3_123_132_231,
  Thm3_123_231_312,
  Thm3_132_213_231,
  Thm3_132_213_321,
  Thm3_132_231_312,
  Thm3_132_231_321,
  Thm3_231_312_321,
};

struct FormulaInfo {
  FormulaId id;
  std::string_view name;      // stable CLI/JSON identifier, e.g. "thm-132-321"
  std::string_view patterns;  // canonical pattern-set text
  long min_n;                 // smallest n the result is stated for
  std::string_view summary;
};

std::span<const FormulaInfo> all_formulas();
const FormulaInfo& info(FormulaId id);
PatternSet patterns_of(FormulaId id);
std::optional<FormulaId> find_formula(std::string_view name);
/// The formula whose pattern set is exactly `patterns`, if one exists.
std::optional<FormulaId> formula_for(const PatternSet& patterns);

/// Audit outcome attached to a formula (or any other audited item).
enum class Status { Untested, Verified, Discrepant };
std::string_view to_string(Status status);

class EvalResult {
 public:
  enum class Kind { Value, OutOfDomain, NonIntegral };

  static EvalResult value(BigInt v) { return EvalResult(Kind::Value, std::move(v)); }
  static EvalResult out_of_domain() { return EvalResult(Kind::OutOfDomain, 0); }
  static EvalResult non_integral(Rational r) {
    EvalResult e(Kind::NonIntegral, 0);
    e.raw_ = std::move(r);
    return e;
  }
  /// Value when `r` is a nonnegative integer, NonIntegral otherwise.
  static EvalResult from_rational(const Rational& r);

  Kind kind() const noexcept { return kind_; }
  bool has_value() const noexcept { return kind_ == Kind::Value; }
  const BigInt& get() const;
  /// The offending rational for NonIntegral results.
  const Rational& raw() const noexcept { return raw_; }
  std::string to_string() const;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;

 private:
  EvalResult(Kind kind, BigInt v) : kind_(kind), value_(std::move(v)) {}
  Kind kind_;
  BigInt value_;
  Rational raw_ = 0;
};

/// s_n^k(T) from the stated closed form, recurrence or generating function.
/// OutOfDomain for k outside 0..n, n below the result's range, or cells the
/// result does not state.
EvalResult evaluate(FormulaId id, long n, long k);

/// F_0 = F_1 = 1. Throws InvalidInput for negative n.
BigInt fibonacci(long n);
/// J_0 = J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}, so that s_n^0(132,231) = J_{n-2}.
BigInt jacobsthal(long n);

/// Total number of avoiders for {132,321} (C(n,2)+1) and {231,321} (2^(n-1)),
/// n >= 1; OutOfDomain for any other set or n < 1.
EvalResult sum_identity(const PatternSet& patterns, long n);

struct RecurrenceViolation {
  long n;
  long k;
  BigInt lhs;
  BigInt rhs;
};

struct RecurrenceReport {
  FormulaId id;
  std::string_view relation;
  long n_min;
  long n_max;
  std::size_t cells_checked = 0;
  std::vector<RecurrenceViolation> violations;

  bool holds() const noexcept { return violations.empty(); }
};

/// Formulas with a known recurrence: (132,231) at k = 0, (231,312),
/// (231,321) and (231,312,321).
bool has_recurrence(FormulaId id);
std::vector<FormulaId> recurrence_formulas();

/// Checks the recurrence on oracle data for n_min <= n <= n_max.
/// Throws InvalidInput if `id` has no recurrence.
RecurrenceReport recurrence_check(FormulaId id, long n_max, const Oracle& oracle);

}  // namespace fixperm
