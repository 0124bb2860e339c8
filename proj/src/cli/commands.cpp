#include "fixperm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fixperm/audit.hpp"
#include "fixperm/equivalence.hpp"
#include "fixperm/errors.hpp"
#include "fixperm/formulas.hpp"
#include "fixperm/generators.hpp"
#include "fixperm/genfun.hpp"
#include "fixperm/kernels.hpp"
#include "fixperm/oracle.hpp"

namespace fixperm::cli {
namespace {

using Json = nlohmann::ordered_json;

// A missing cell: outside the stated domain of a formula.
using Cell = std::optional<BigInt>;

struct Globals {
  std::string format = "plain";
  std::optional<std::size_t> oracle_cap;
  std::string kernel = "auto";
};

struct Context {
  const Globals& globals;
  std::ostream& out;
  std::ostream& err;

  std::size_t oracle_cap() const { return globals.oracle_cap.value_or(default_oracle_cap()); }
};

Json cell_json(const Cell& c) { return c ? Json(c->str()) : Json(nullptr); }
std::string cell_text(const Cell& c) { return c ? c->str() : "-"; }

std::string join(const std::vector<Cell>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cell_text(cells[i]);
  return out;
}

std::vector<Cell> to_cells(const std::vector<BigInt>& values) { return {values.begin(), values.end()}; }

FormulaId require_formula(const PatternSet& t) {
  const auto id = formula_for(t);
  if (!id) throw InvalidInput("no formula for {" + t.to_string() + "}; use --method oracle");
  return *id;
}

// Row n of s_n^k(T), k = 0..n, by the chosen method.
class RowSource {
 public:
  RowSource(const Context& ctx, PatternSet patterns, std::string method, long n_max)
      : patterns_(patterns), method_(std::move(method)) {
    if (method_ == "oracle") {
      oracle_.emplace(ctx.oracle_cap());
      if (n_max > static_cast<long>(oracle_->cap())) {
        throw ResourceLimit("n = " + std::to_string(n_max) + " exceeds the oracle cap of " +
                                std::to_string(oracle_->cap()) + " (raise it with --oracle-cap or " + kOracleCapEnv + ")",
                            oracle_->cap());
      }
    } else if (method_ == "formula") {
      formula_ = require_formula(patterns_);
    } else if (method_ == "generator") {
      if (!family_for(patterns_)) throw UnsupportedFamily("no structural generator for {" + patterns_.to_string() + "}");
      if (n_max > static_cast<long>(generator_.cap())) {
        throw ResourceLimit("n = " + std::to_string(n_max) + " exceeds the generator cap of " +
                                std::to_string(generator_.cap()),
                            generator_.cap());
      }
    }
  }

  std::vector<Cell> row(long n) const {
    const auto size = static_cast<std::size_t>(n);
    if (oracle_) return to_cells(oracle_->refined_count(size, patterns_));
    if (formula_) {
      std::vector<Cell> cells;
      for (long k = 0; k <= n; ++k) {
        const EvalResult r = evaluate(*formula_, n, k);
        if (r.kind() == EvalResult::Kind::NonIntegral) {
          throw Error("formula " + std::string(info(*formula_).name) + " is not a nonnegative integer at n = " +
                      std::to_string(n) + ", k = " + std::to_string(k) + ": " + r.to_string());
        }
        cells.push_back(r.has_value() ? Cell(r.get()) : std::nullopt);
      }
      return cells;
    }
    return to_cells(generator_.generate_refined(patterns_, size));
  }

 private:
  PatternSet patterns_;
  std::string method_;
  std::optional<Oracle> oracle_;
  std::optional<FormulaId> formula_;
  Generator generator_;
};

int cmd_table(const Context& ctx, const std::string& patterns_text, long n_max, const std::string& method) {
  const PatternSet t = PatternSet::parse(patterns_text);
  const RowSource source(ctx, t, method, n_max);
  std::vector<std::vector<Cell>> rows;
  for (long n = 0; n <= n_max; ++n) rows.push_back(source.row(n));

  if (ctx.globals.format == "json") {
    Json doc;
    doc["patterns"] = t.to_string();
    doc["method"] = method;
    doc["n_max"] = n_max;
    Json table = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const Cell& c : row) r.push_back(cell_json(c));
      table.push_back(std::move(r));
    }
    doc["rows"] = std::move(table);
    ctx.out << doc.dump(2) << '\n';
  } else if (ctx.globals.format == "csv") {
    ctx.out << 'n';
    for (long k = 0; k <= n_max; ++k) ctx.out << ",k" << k;
    ctx.out << '\n';
    for (long n = 0; n <= n_max; ++n) {
      ctx.out << n << ',' << join(rows[static_cast<std::size_t>(n)]) << std::string(static_cast<std::size_t>(n_max - n), ',')
              << '\n';
    }
  } else {
    for (long n = 0; n <= n_max; ++n) ctx.out << "n=" << n << ": " << join(rows[static_cast<std::size_t>(n)]) << '\n';
  }
  return kOk;
}

int cmd_sequence(const Context& ctx, const std::string& patterns_text, long k, long n_max, const std::string& method) {
  const PatternSet t = PatternSet::parse(patterns_text);
  std::vector<Cell> values;
  if (method == "gf") {
    if (t != PatternSet::parse("231,321")) {
      throw InvalidInput("--method gf is only available for patterns 231,321");
    }
    values = to_cells(series_coefficients(gf_for_k(static_cast<std::size_t>(k)), static_cast<std::size_t>(n_max)));
  } else {
    const RowSource source(ctx, t, method, n_max);
    for (long n = 0; n <= n_max; ++n) {
      if (k > n) {
        values.push_back(method == "formula" ? Cell() : Cell(BigInt(0)));
      } else {
        values.push_back(source.row(n)[static_cast<std::size_t>(k)]);
      }
    }
  }

  if (ctx.globals.format == "json") {
    Json doc;
    doc["patterns"] = t.to_string();
    doc["k"] = k;
    doc["method"] = method;
    Json seq = Json::array();
    for (const Cell& c : values) seq.push_back(cell_json(c));
    doc["sequence"] = std::move(seq);
    ctx.out << doc.dump(2) << '\n';
  } else if (ctx.globals.format == "csv") {
    ctx.out << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) ctx.out << n << ',' << (values[n] ? values[n]->str() : "") << '\n';
  } else {
    ctx.out << join(values) << '\n';
  }
  return kOk;
}

std::string plain_report(const AuditReport& r) {
  std::string line = r.item + " " + std::string(to_string(r.status)) + " n_max=" + std::to_string(r.n_max) +
                     " cells=" + std::to_string(r.cells_checked);
  if (r.cells_skipped > 0) line += " skipped=" + std::to_string(r.cells_skipped);
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    line += " first mismatch at n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + ": expected " +
            c.formula_value + ", oracle " + c.oracle_value;
    if (!c.detail.empty()) line += " (" + c.detail + ")";
  }
  return line;
}

int cmd_verify(const Context& ctx, const std::string& formula, bool all, long n_max, const std::string& md_path) {
  if (all == !formula.empty()) throw InvalidInput("give exactly one of --formula ID or --all");
  std::optional<FormulaId> id;
  if (!all) {
    id = find_formula(formula);
    if (!id) throw InvalidInput("unknown formula id '" + formula + "'");
  }
  const Oracle oracle(ctx.oracle_cap());
  if (static_cast<std::size_t>(n_max) > oracle.cap()) {
    throw ResourceLimit("n_max = " + std::to_string(n_max) + " exceeds the oracle cap of " + std::to_string(oracle.cap()),
                        oracle.cap());
  }
  std::vector<AuditReport> reports;
  if (all) {
    const Generator generator;
    reports = audit_all(n_max, oracle, generator);
  } else {
    reports.push_back(audit_formula(*id, n_max, oracle));
  }

  if (ctx.globals.format == "plain") {
    for (const AuditReport& r : reports) ctx.out << plain_report(r) << '\n';
  } else if (ctx.globals.format == "csv") {
    ctx.out << "item,kind,status,n_max,cells_checked,cells_skipped,n,k,formula_value,oracle_value\n";
    for (const AuditReport& r : reports) {
      ctx.out << r.item << ',' << to_string(r.kind) << ',' << to_string(r.status) << ',' << r.n_max << ','
              << r.cells_checked << ',' << r.cells_skipped;
      if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        ctx.out << ',' << c.n << ',' << c.k << ',' << c.formula_value << ',' << c.oracle_value;
      } else {
        ctx.out << ",,,,";
      }
      ctx.out << '\n';
    }
  } else {
    ctx.out << (all ? to_json(reports) : to_json(reports.front())).dump(2) << '\n';
  }

  if (!md_path.empty()) {
    std::ofstream md(md_path);
    if (!md) throw InvalidInput("cannot write " + md_path);
    md << discrepancies_markdown(reports, n_max);
  }
  return all_verified(reports) ? kOk : kDiscrepancy;
}

int cmd_classes(const Context& ctx, long size, const std::string& mode, std::optional<long> n_max, bool strict) {
  if (size < 1 || size > static_cast<long>(Pattern::kCount)) {
    throw InvalidInput("--size must be between 1 and 6");
  }
  std::vector<std::vector<PatternSet>> classes;
  Json doc;
  doc["size"] = size;
  doc["mode"] = mode;
  if (mode == "symmetry") {
    for (OrbitClass& c : symmetry_classes(static_cast<std::size_t>(size), strict ? Grouping::Orbits
                                                                                 : Grouping::MergeMonotonePair)) {
      classes.push_back(std::move(c.members));
    }
  } else {
    if (!n_max) throw InvalidInput("--mode superwilf requires --n-max");
    const Oracle oracle(ctx.oracle_cap());
    const auto candidates = all_pattern_sets(static_cast<std::size_t>(size));
    const SuperWilfPartition partition = super_wilf_classes(candidates, static_cast<std::size_t>(*n_max), oracle);
    for (const SuperWilfClass& c : partition.classes) classes.push_back(c.members);
    doc["n_max"] = *n_max;
  }

  if (ctx.globals.format == "plain") {
    for (const auto& members : classes) {
      for (std::size_t i = 0; i < members.size(); ++i) ctx.out << (i ? " " : "") << '{' << members[i].to_string() << '}';
      ctx.out << '\n';
    }
  } else if (ctx.globals.format == "csv") {
    ctx.out << "class,patterns\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (const PatternSet& t : classes[i]) ctx.out << i << ",\"" << t.to_string() << "\"\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& members : classes) {
      Json c = Json::array();
      for (const PatternSet& t : members) c.push_back(t.to_string());
      arr.push_back(std::move(c));
    }
    doc["classes"] = std::move(arr);
    ctx.out << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_gf(const Context& ctx, long k, long terms) {
  const RationalGF gf = gf_for_k(static_cast<std::size_t>(k));
  const auto series = to_cells(series_coefficients(gf, static_cast<std::size_t>(terms)));
  if (ctx.globals.format == "json") {
    Json doc;
    doc["k"] = k;
    doc["numerator"] = gf.numerator().to_string();
    doc["denominator"] = gf.denominator().to_string();
    Json seq = Json::array();
    for (const Cell& c : series) seq.push_back(cell_json(c));
    doc["series"] = std::move(seq);
    ctx.out << doc.dump(2) << '\n';
  } else if (ctx.globals.format == "csv") {
    ctx.out << "n,coefficient\n";
    for (std::size_t n = 0; n < series.size(); ++n) ctx.out << n << ',' << series[n]->str() << '\n';
  } else {
    ctx.out << "G_" << k << "(x) = (" << gf.numerator().to_string() << ") / (" << gf.denominator().to_string() << ")\n"
            << join(series) << '\n';
  }
  return kOk;
}

int cmd_avoiders(const Context& ctx, const std::string& patterns_text, long n) {
  const PatternSet t = PatternSet::parse(patterns_text);
  const Oracle oracle(ctx.oracle_cap());
  const auto avoiders = oracle.enumerate_avoiders(static_cast<std::size_t>(n), t);
  if (ctx.globals.format == "json") {
    Json doc;
    doc["patterns"] = t.to_string();
    doc["n"] = n;
    Json arr = Json::array();
    for (const Permutation& p : avoiders) {
      Json entry;
      entry["permutation"] = p.to_string();
      entry["fixed_points"] = fixed_point_count(p);
      arr.push_back(std::move(entry));
    }
    doc["avoiders"] = std::move(arr);
    ctx.out << doc.dump(2) << '\n';
  } else if (ctx.globals.format == "csv") {
    ctx.out << "permutation,fixed_points\n";
    for (const Permutation& p : avoiders) ctx.out << '"' << p.to_string() << "\"," << fixed_point_count(p) << '\n';
  } else {
    for (const Permutation& p : avoiders) ctx.out << p.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points of pattern-avoiding permutations: tables, formulas and audits", "fixperm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--oracle-cap", globals.oracle_cap, "Largest n the oracle may enumerate (at most 16)");
  app.add_option("--kernel", globals.kernel, "Pattern-detection kernel")
      ->check(CLI::IsMember({"auto", "scalar", "sse41", "avx2"}));

  std::string patterns;
  std::string method = "oracle";
  long n_max = 8;
  long k = 0;
  long n = 0;

  auto* table = app.add_subcommand("table", "Refined counts s_n^k(T) for n = 0..n_max");
  table->add_option("--patterns", patterns, "Comma-separated patterns, e.g. 123,321")->required();
  table->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  table->add_option("--method", method)->check(CLI::IsMember({"oracle", "formula", "generator"}));

  auto* sequence = app.add_subcommand("sequence", "s_n^k(T) for fixed k and n = 0..n_max");
  sequence->add_option("--patterns", patterns)->required();
  sequence->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  sequence->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  sequence->add_option("--method", method)->check(CLI::IsMember({"oracle", "formula", "generator", "gf"}));

  std::string formula;
  bool all = false;
  std::string md_path;
  auto* verify = app.add_subcommand("verify", "Audit formulas against the oracle");
  verify->add_option("--formula", formula, "Formula id, e.g. thm-231-312");
  verify->add_flag("--all", all, "Audit every formula, generator and identity");
  verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--discrepancies-out", md_path, "Write a markdown summary of discrepant items");

  long size = 0;
  std::string mode = "symmetry";
  std::optional<long> classes_n_max;
  bool strict = false;
  auto* classes = app.add_subcommand("classes", "Partition pattern sets of one size");
  classes->add_option("--size", size)->required();
  classes->add_option("--mode", mode)->check(CLI::IsMember({"symmetry", "superwilf"}));
  classes->add_option("--n-max", classes_n_max)->check(CLI::NonNegativeNumber);
  classes->add_flag("--strict", strict, "Plain symmetry orbits without merging sets that contain 123 and 321");

  long terms = 10;
  auto* gf = app.add_subcommand("gf", "Generating function G_k for patterns 231,321");
  gf->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  gf->add_option("--terms", terms)->check(CLI::NonNegativeNumber);

  auto* avoiders = app.add_subcommand("avoiders", "List S_n(T) in lexicographic order");
  avoiders->add_option("--patterns", patterns)->required();
  avoiders->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Context ctx{globals, out, err};
  try {
    kernels::set_active_isa(globals.kernel == "auto" ? kernels::best_kernels().isa : kernels::parse_isa(globals.kernel));
    if (globals.oracle_cap && *globals.oracle_cap > kernels::kMaxLanes) {
      throw InvalidInput("--oracle-cap may not exceed " + std::to_string(kernels::kMaxLanes));
    }
    if (table->parsed()) return cmd_table(ctx, patterns, n_max, method);
    if (sequence->parsed()) return cmd_sequence(ctx, patterns, k, n_max, method);
    if (verify->parsed()) return cmd_verify(ctx, formula, all, n_max, md_path);
    if (classes->parsed()) return cmd_classes(ctx, size, mode, classes_n_max, strict);
    if (gf->parsed()) return cmd_gf(ctx, k, terms);
    if (avoiders->parsed()) return cmd_avoiders(ctx, patterns, n);
  } catch (const ResourceLimit& e) {
    err << "fixperm: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidInput& e) {
    err << "fixperm: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    err << "fixperm: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "fixperm: " << e.what() << '\n';
    return kDiscrepancy;
  }
  return kUsage;
}

}  // namespace fixperm::cli
