#include "fixperm/audit.hpp"

#include <algorithm>
#include <sstream>

#include "fixperm/equivalence.hpp"
#include "fixperm/errors.hpp"
#include "fixperm/genfun.hpp"
#include "fixperm/oracle.hpp"

namespace fixperm {
namespace {

class Recorder {
 public:
  Recorder(std::string item, AuditKind kind, long n_max)
      : start_(std::chrono::steady_clock::now()) {
    report_.item = std::move(item);
    report_.kind = kind;
    report_.n_max = n_max;
  }

  void compare(long n, long k, std::string formula_value, std::string oracle_value, std::string detail = {}) {
    const bool match = formula_value == oracle_value;
    ++report_.cells_checked;
    if (!match && !report_.counterexample) {
      report_.counterexample = Counterexample{n, k, formula_value, oracle_value, std::move(detail)};
    }
    report_.cells.push_back({n, k, std::move(formula_value), std::move(oracle_value), match});
  }

  void skip() { ++report_.cells_skipped; }

  AuditReport finish() {
    report_.status = report_.counterexample ? Status::Discrepant : Status::Verified;
    report_.duration = std::chrono::steady_clock::now() - start_;
    return std::move(report_);
  }

 private:
  AuditReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string item_suffix(const PatternSet& t) {
  std::string out = t.to_string();
  std::replace(out.begin(), out.end(), ',', '-');
  return out;
}

}  // namespace

std::string_view to_string(AuditKind kind) {
  switch (kind) {
    case AuditKind::Formula: return "formula";
    case AuditKind::Generator: return "generator";
    case AuditKind::Recurrence: return "recurrence";
    case AuditKind::GeneratingFunction: return "generating-function";
    case AuditKind::SumIdentity: return "sum-identity";
    case AuditKind::Bound: return "bound";
    case AuditKind::SuperWilf: return "super-wilf";
    case AuditKind::CaseList: return "case-list";
  }
  return "?";
}

AuditReport audit_formula(FormulaId id, long n_max, const Oracle& oracle) {
  const PatternSet t = patterns_of(id);
  Recorder rec(std::string(info(id).name), AuditKind::Formula, n_max);
  for (long n = 0; n <= n_max; ++n) {
    const auto counts = oracle.refined_count(static_cast<std::size_t>(n), t);
    for (long k = 0; k <= n; ++k) {
      const EvalResult value = evaluate(id, n, k);
      if (value.kind() == EvalResult::Kind::OutOfDomain) {
        rec.skip();
        continue;
      }
      rec.compare(n, k, value.to_string(), counts[static_cast<std::size_t>(k)].str());
    }
  }
  return rec.finish();
}

AuditReport audit_generator(const StructuralFamily& family, long n_max, const Oracle& oracle,
                            const Generator& generator) {
  Recorder rec("gen-" + item_suffix(family.patterns), AuditKind::Generator, n_max);
  for (long n = 0; n <= n_max; ++n) {
    const auto size = static_cast<std::size_t>(n);
    const std::vector<Permutation> built = generator.generate(family.patterns, size);
    const std::vector<Permutation> truth = oracle.enumerate_avoiders(size, family.patterns);

    std::vector<Permutation> missing, extra;
    std::set_difference(truth.begin(), truth.end(), built.begin(), built.end(), std::back_inserter(missing));
    std::set_difference(built.begin(), built.end(), truth.begin(), truth.end(), std::back_inserter(extra));
    std::string detail;
    if (!missing.empty()) detail = "generated set is missing " + missing.front().to_string();
    if (!extra.empty()) detail += (detail.empty() ? "" : "; ") + std::string("generated set has extra ") + extra.front().to_string();

    std::vector<std::size_t> built_k(size + 1, 0), truth_k(size + 1, 0);
    for (const Permutation& p : built) ++built_k[fixed_point_count(p)];
    for (const Permutation& p : truth) ++truth_k[fixed_point_count(p)];
    for (std::size_t k = 0; k <= size; ++k) {
      rec.compare(n, static_cast<long>(k), std::to_string(built_k[k]), std::to_string(truth_k[k]), detail);
    }
    // Equal histograms can still hide different sets.
    if (!detail.empty() && built_k == truth_k) {
      rec.compare(n, -1, "set of " + std::to_string(built.size()), "different set of " + std::to_string(truth.size()),
                  detail);
    }
  }
  return rec.finish();
}

AuditReport audit_recurrence(FormulaId id, long n_max, const Oracle& oracle) {
  const RecurrenceReport r = recurrence_check(id, n_max, oracle);
  Recorder rec("rec-" + item_suffix(patterns_of(id)), AuditKind::Recurrence, n_max);
  AuditReport report = rec.finish();
  report.cells_checked = r.cells_checked;
  for (const RecurrenceViolation& v : r.violations) {
    report.cells.push_back({v.n, v.k, v.rhs.str(), v.lhs.str(), false});
    if (!report.counterexample) {
      report.counterexample = Counterexample{v.n, v.k, v.rhs.str(), v.lhs.str(), std::string(r.relation)};
    }
  }
  report.status = report.counterexample ? Status::Discrepant : Status::Verified;
  return report;
}

AuditReport audit_generating_function(long n_max, const Oracle& oracle) {
  const PatternSet t = PatternSet::parse("231,321");
  Recorder rec("gf-231-321", AuditKind::GeneratingFunction, n_max);
  std::vector<std::vector<BigInt>> series;
  for (long k = 0; k <= n_max; ++k) {
    series.push_back(series_coefficients(gf_for_k(static_cast<std::size_t>(k)), static_cast<std::size_t>(n_max)));
  }
  for (long n = 0; n <= n_max; ++n) {
    const auto counts = oracle.refined_count(static_cast<std::size_t>(n), t);
    for (long k = 0; k <= n; ++k) {
      rec.compare(n, k, series[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)].str(),
                  counts[static_cast<std::size_t>(k)].str());
    }
  }
  return rec.finish();
}

AuditReport audit_sum_identity(const PatternSet& patterns, long n_max, const Oracle& oracle) {
  const bool fibonacci_family = patterns == PatternSet::parse("231,321");
  if (!fibonacci_family && patterns != PatternSet::parse("132,321")) {
    throw InvalidInput("no sum identity for {" + patterns.to_string() + "}");
  }
  Recorder rec("cor-" + item_suffix(patterns), AuditKind::SumIdentity, n_max);
  std::vector<BigInt> summed;
  if (fibonacci_family) summed = sum_over_k(static_cast<std::size_t>(n_max), static_cast<std::size_t>(n_max));
  for (long n = 0; n <= n_max; ++n) {
    const std::string total = oracle.count_table(static_cast<std::size_t>(n), patterns)
                                  .row_total(static_cast<std::size_t>(n))
                                  .str();
    const EvalResult closed = sum_identity(patterns, n);
    if (closed.has_value()) {
      rec.compare(n, -1, closed.to_string(), total, "closed-form total");
    } else {
      rec.skip();
    }
    if (fibonacci_family) rec.compare(n, -1, summed[static_cast<std::size_t>(n)].str(), total, "sum of G_k series");
  }
  return rec.finish();
}

AuditReport audit_bound(long n_max, const Oracle& oracle) {
  Recorder rec("bound-size-4-plus", AuditKind::Bound, n_max);
  for (std::size_t size = 4; size <= Pattern::kCount; ++size) {
    for (const PatternSet& t : all_pattern_sets(size)) {
      for (long n = 1; n <= n_max; ++n) {
        const auto counts = oracle.refined_count(static_cast<std::size_t>(n), t);
        for (long k = 0; k <= n; ++k) {
          const BigInt& c = counts[static_cast<std::size_t>(k)];
          const bool ok = c <= 2;
          rec.compare(n, k, ok ? c.str() : "at most 2", c.str(), "T = {" + t.to_string() + "}");
        }
      }
    }
  }
  return rec.finish();
}

AuditReport audit_super_wilf(long n_max, const Oracle& oracle) {
  const std::vector<std::vector<PatternSet>> claims = {
      {PatternSet::parse("321"), PatternSet::parse("132"), PatternSet::parse("213")},
      {PatternSet::parse("231"), PatternSet::parse("312")},
      {PatternSet::parse("132,231"), PatternSet::parse("132,312"), PatternSet::parse("213,231"),
       PatternSet::parse("213,312")},
  };
  Recorder rec("super-wilf-groupings", AuditKind::SuperWilf, n_max);
  for (const auto& claim : claims) {
    for (std::size_t i = 1; i < claim.size(); ++i) {
      for (long n = 0; n <= n_max; ++n) {
        const auto base = oracle.refined_count(static_cast<std::size_t>(n), claim.front());
        const auto other = oracle.refined_count(static_cast<std::size_t>(n), claim[i]);
        for (long k = 0; k <= n; ++k) {
          rec.compare(n, k, base[static_cast<std::size_t>(k)].str(), other[static_cast<std::size_t>(k)].str(),
                      "{" + claim.front().to_string() + "} vs {" + claim[i].to_string() + "}");
        }
      }
    }
  }
  return rec.finish();
}

AuditReport audit_case_list(std::size_t cardinality) {
  static const std::vector<std::vector<std::string_view>> size2 = {
      {"123,321"},
      {"123,132", "123,213"},
      {"123,231", "123,312"},
      {"132,213"},
      {"132,231", "132,312"},
      {"132,321", "213,321"},
      {"213,231", "213,312"},
      {"231,312"},
      {"231,321", "312,321"},
  };
  static const std::vector<std::vector<std::string_view>> size3 = {
      {"123,132,321", "123,213,321", "123,231,321", "123,312,321"},
      {"123,132,213"},
      {"123,132,231", "123,132,312", "123,213,231", "123,213,312"},
      {"123,231,312"},
      {"132,213,231", "132,213,312"},
      {"132,213,321"},
      {"132,231,312", "213,231,312"},
      {"132,231,321", "132,312,321", "213,231,321", "213,312,321"},
      {"231,312,321"},
  };
  if (cardinality != 2 && cardinality != 3) throw InvalidInput("case lists exist only for sizes 2 and 3");
  const auto& stated = cardinality == 2 ? size2 : size3;
  const auto classes = symmetry_classes(cardinality);
  const auto text = [](const std::vector<PatternSet>& members) {
    std::string out;
    for (const PatternSet& t : members) out += (out.empty() ? "{" : " {") + t.to_string() + "}";
    return out;
  };

  Recorder rec("cases-size-" + std::to_string(cardinality), AuditKind::CaseList, static_cast<long>(cardinality));
  for (std::size_t i = 0; i < stated.size(); ++i) {
    std::vector<PatternSet> members;
    for (std::string_view t : stated[i]) members.push_back(PatternSet::parse(t));
    std::sort(members.begin(), members.end());
    const auto computed = std::find_if(classes.begin(), classes.end(), [&](const OrbitClass& c) {
      return std::find(c.members.begin(), c.members.end(), members.front()) != c.members.end();
    });
    std::string detail = "case (" + std::to_string(i + 1) + ")";
    for (const GroupElement& g : acting_group()) {
      const auto escape = std::find_if(members.begin(), members.end(), [&](const PatternSet& t) {
        return std::find(members.begin(), members.end(), g.apply(t)) == members.end();
      });
      if (escape != members.end()) {
        detail += ": " + g.word + " maps {" + escape->to_string() + "} to {" + g.apply(*escape).to_string() +
                  "}, outside the case";
        break;
      }
    }
    rec.compare(static_cast<long>(cardinality), static_cast<long>(i + 1), text(members), text(computed->members),
                detail);
  }
  if (classes.size() != stated.size()) {
    rec.compare(static_cast<long>(cardinality), -1, std::to_string(stated.size()) + " classes",
                std::to_string(classes.size()) + " classes");
  }
  return rec.finish();
}

std::vector<AuditReport> audit_all(long n_max, const Oracle& oracle, const Generator& generator) {
  std::vector<AuditReport> reports;
  for (const FormulaInfo& f : all_formulas()) reports.push_back(audit_formula(f.id, n_max, oracle));
  for (const StructuralFamily& family : supported_families()) {
    reports.push_back(audit_generator(family, n_max, oracle, generator));
  }
  for (FormulaId id : recurrence_formulas()) reports.push_back(audit_recurrence(id, n_max, oracle));
  reports.push_back(audit_generating_function(n_max, oracle));
  reports.push_back(audit_sum_identity(PatternSet::parse("132,321"), n_max, oracle));
  reports.push_back(audit_sum_identity(PatternSet::parse("231,321"), n_max, oracle));
  reports.push_back(audit_bound(n_max, oracle));
  reports.push_back(audit_super_wilf(n_max, oracle));
  reports.push_back(audit_case_list(2));
  reports.push_back(audit_case_list(3));
  return reports;
}

bool all_verified(const std::vector<AuditReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AuditReport& r) { return r.status == Status::Verified; });
}

nlohmann::ordered_json to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["formula"] = report.item;
  j["kind"] = std::string(to_string(report.kind));
  j["status"] = std::string(to_string(report.status));
  j["n_max"] = report.n_max;
  j["cells_checked"] = report.cells_checked;
  j["cells_skipped"] = report.cells_skipped;
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    nlohmann::ordered_json cx;
    cx["n"] = c.n;
    cx["k"] = c.k;
    cx["formula_value"] = c.formula_value;
    cx["oracle_value"] = c.oracle_value;
    if (!c.detail.empty()) cx["detail"] = c.detail;
    j["counterexample"] = std::move(cx);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<AuditReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AuditReport& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string discrepancies_markdown(const std::vector<AuditReport>& reports, long n_max) {
  std::ostringstream out;
  out << "# Discrepancies\n\n"
      << "Stated results that disagree with exhaustive enumeration. Generated by\n"
      << "`fixperm verify --all --n-max " << n_max << " --discrepancies-out DISCREPANCIES.md`.\n"
      << "The brute-force oracle is ground truth; nothing listed here is corrected in code.\n"
      << "Stated values are the closed forms evaluated in exact arithmetic, the counts of\n"
      << "the structural generators, or the listed symmetry cases. Ground truth is the count\n"
      << "over all of S_n, or for case lists the orbit under inverse and reverse-complement.\n"
      << "k = -1 marks a whole-row or whole-list comparison.\n";
  std::size_t listed = 0;
  for (const AuditReport& r : reports) {
    if (r.status != Status::Discrepant) continue;
    ++listed;
    const Counterexample& c = *r.counterexample;
    const auto mismatched = std::count_if(r.cells.begin(), r.cells.end(), [](const AuditCell& cell) { return !cell.match; });
    out << "\n## " << r.item << " (" << to_string(r.kind) << ")\n\n"
        << "First counterexample: n = " << c.n << ", k = " << c.k << ": stated " << c.formula_value << ", ground truth "
        << c.oracle_value << ".";
    if (!c.detail.empty()) out << " " << c.detail << ".";
    out << "\n\n" << mismatched << " of " << r.cells_checked << " checked cells disagree (n <= " << r.n_max << ").\n\n"
        << "| n | k | stated | ground truth |\n|---|---|---|---|\n";
    std::size_t shown = 0;
    for (const AuditCell& cell : r.cells) {
      if (cell.match) continue;
      if (++shown > 10) break;
      out << "| " << cell.n << " | " << cell.k << " | " << cell.formula_value << " | " << cell.oracle_value << " |\n";
    }
  }
  if (listed == 0) out << "\nNone: every audited item matched the oracle.\n";
  return out.str();
}

}  // namespace fixperm
