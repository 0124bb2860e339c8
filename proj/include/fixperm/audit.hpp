#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fixperm/formulas.hpp"
#include "fixperm/generators.hpp"

namespace fixperm {

class Oracle;

enum class AuditKind { Formula, Generator, Recurrence, GeneratingFunction, SumIdentity, Bound, SuperWilf, CaseList };
std::string_view to_string(AuditKind kind);

/// One compared cell. k = -1 marks a whole-row total.
struct AuditCell {
  long n;
  long k;
  std::string formula_value;
  std::string oracle_value;
  bool match;
};

struct Counterexample {
  long n;
  long k;
  std::string formula_value;
  std::string oracle_value;
  std::string detail;
};

/// Result of checking one stated claim against the oracle. DISCREPANT
/// always carries the first mismatching cell as its counterexample.
struct AuditReport {
  std::string item;
  AuditKind kind;
  Status status = Status::Untested;
  long n_max = 0;
  std::size_t cells_checked = 0;
  std::size_t cells_skipped = 0;
  std::vector<AuditCell> cells;
  std::optional<Counterexample> counterexample;
  std::chrono::duration<double> duration{};
};

AuditReport audit_formula(FormulaId id, long n_max, const Oracle& oracle);

/// Set equality of generate(T, n) with the oracle's S_n(T) for n <= n_max,
/// plus the fixed-point histograms cell by cell.
AuditReport audit_generator(const StructuralFamily& family, long n_max, const Oracle& oracle,
                            const Generator& generator);

AuditReport audit_recurrence(FormulaId id, long n_max, const Oracle& oracle);

/// Series coefficients of G_k against s_n^k(231,321) for 0 <= k <= n <= n_max.
AuditReport audit_generating_function(long n_max, const Oracle& oracle);

/// Row totals for {132,321} and {231,321}; the latter also through the
/// summed generating functions.
AuditReport audit_sum_identity(const PatternSet& patterns, long n_max, const Oracle& oracle);

/// Every refined count of every T with |T| >= 4 lies in {0, 1, 2}, 1 <= n <= n_max.
AuditReport audit_bound(long n_max, const Oracle& oracle);

/// The three empirical Super-Wilf groupings: {321,132,213}; {231,312};
/// {132,231},{132,312},{213,231},{213,312}.
AuditReport audit_super_wilf(long n_max, const Oracle& oracle);

/// The stated symmetry case lists for |T| = 2 and |T| = 3 against
/// symmetry_classes(cardinality). Cell (n, k) is case k of size n; values are
/// the stated class and the computed class holding its first member.
/// Throws InvalidInput for other cardinalities.
AuditReport audit_case_list(std::size_t cardinality);

/// Formulas in registry order, then generators, recurrences, the generating
/// function, sum identities, the |T| >= 4 bound, the Super-Wilf groupings and
/// the case lists.
std::vector<AuditReport> audit_all(long n_max, const Oracle& oracle, const Generator& generator);

bool all_verified(const std::vector<AuditReport>& reports);

/// {"formula", "kind", "status", "n_max", "cells_checked", "cells_skipped", "counterexample"}.
/// Wall-clock duration is left out so identical runs serialize identically.
nlohmann::ordered_json to_json(const AuditReport& report);
nlohmann::ordered_json to_json(const std::vector<AuditReport>& reports);

/// Markdown listing every DISCREPANT report with its counterexample.
std::string discrepancies_markdown(const std::vector<AuditReport>& reports, long n_max);

}  // namespace fixperm
