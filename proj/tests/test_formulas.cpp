#include <set>

#include "doctest.h"
#include "naive.hpp"

#include "fixperm/errors.hpp"
#include "fixperm/formulas.hpp"
#include "fixperm/oracle.hpp"

using namespace fixperm;

namespace {

// Formulas whose stated form disagrees with enumeration; see DISCREPANCIES.md.
const std::set<FormulaId> kKnownDiscrepant = {FormulaId::Thm132_231, FormulaId::Thm213_231,
                                              FormulaId::Thm3_132_213_231};

}  // namespace

TEST_CASE("registry") {
  const auto all = all_formulas();
  CHECK(all.size() == 21);
  std::set<std::string_view> ids;
  for (const FormulaInfo& f : all) {
    ids.insert(f.name);
    CHECK(find_formula(f.name) == f.id);
    CHECK(formula_for(patterns_of(f.id)) == f.id);
    CHECK(info(f.id).name == f.name);
  }
  CHECK(ids.size() == all.size());
  CHECK(find_formula("thm-132-321") == FormulaId::Thm132_321);
  CHECK_FALSE(find_formula("no-such"));
  CHECK_FALSE(formula_for(PatternSet::parse("123")));
}

TEST_CASE("evaluation examples") {
  CHECK(evaluate(FormulaId::Thm123_321, 4, 0).get() == 4);
  for (long n = 1; n <= 12; ++n) CHECK(evaluate(FormulaId::Thm132_321, n, n).get() == 1);
  CHECK(evaluate(FormulaId::Thm231_312, 3, 1).get() == 3);
  CHECK(evaluate(FormulaId::Thm132_231, 3, 0).get() == 1);
  CHECK(evaluate(FormulaId::Thm3_231_312_321, 4, 2).get() == 3);
}

TEST_CASE("domain handling") {
  CHECK(evaluate(FormulaId::Thm123_321, 4, 5).kind() == EvalResult::Kind::OutOfDomain);
  CHECK(evaluate(FormulaId::Thm123_321, 4, -1).kind() == EvalResult::Kind::OutOfDomain);
  CHECK(evaluate(FormulaId::Thm132_231, 2, 0).kind() == EvalResult::Kind::OutOfDomain);
  CHECK_THROWS(evaluate(FormulaId::Thm132_231, 2, 0).get());
  CHECK(EvalResult::from_rational(Rational(1, 2)).kind() == EvalResult::Kind::NonIntegral);
  CHECK(EvalResult::from_rational(Rational(-3)).kind() == EvalResult::Kind::NonIntegral);
  CHECK(EvalResult::from_rational(Rational(6, 3)).get() == 2);
}

TEST_CASE("stated formulas against the definitional filter for n <= 8") {
  for (const FormulaInfo& f : all_formulas()) {
    const unsigned mask = patterns_of(f.id).mask();
    bool all_match = true;
    std::size_t checked = 0;
    for (long n = 0; n <= 8; ++n) {
      const auto expected = naive::refined(static_cast<std::size_t>(n), mask);
      for (long k = 0; k <= n; ++k) {
        const EvalResult r = evaluate(f.id, n, k);
        if (r.kind() == EvalResult::Kind::OutOfDomain) continue;
        ++checked;
        all_match &= r.has_value() && r.get() == expected[static_cast<std::size_t>(k)];
      }
    }
    INFO(f.name);
    CHECK(checked > 0);
    CHECK(all_match == !kKnownDiscrepant.count(f.id));
  }
}

TEST_CASE("known mismatching cells") {
  CHECK(evaluate(FormulaId::Thm132_231, 4, 1).get() == 6);
  CHECK(naive::refined(4, PatternSet::parse("132,231").mask())[1] == 2);
  CHECK(evaluate(FormulaId::Thm3_132_213_231, 4, 0).get() == 5);
  CHECK(naive::refined(4, PatternSet::parse("132,213,231").mask())[0] == 3);
}

TEST_CASE("fibonacci and jacobsthal") {
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(5) == 8);
  CHECK(fibonacci(90) == BigInt("4660046610375530309"));
  CHECK_THROWS_AS(fibonacci(-1), InvalidInput);
  const long j[] = {1, 1, 3, 5, 11, 21, 43};
  for (long n = 0; n < 7; ++n) CHECK(jacobsthal(n) == j[n]);
  CHECK_THROWS_AS(jacobsthal(-2), InvalidInput);
}

TEST_CASE("sum identities") {
  CHECK(sum_identity(PatternSet::parse("132,321"), 5).get() == 11);
  CHECK(sum_identity(PatternSet::parse("231,321"), 4).get() == 8);
  CHECK(sum_identity(PatternSet::parse("231,321"), 1).get() == 1);
  CHECK(sum_identity(PatternSet::parse("123"), 4).kind() == EvalResult::Kind::OutOfDomain);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const char* text : {"132,321", "231,321"}) {
      unsigned long long total = 0;
      for (auto c : naive::refined(n, PatternSet::parse(text).mask())) total += c;
      CHECK(sum_identity(PatternSet::parse(text), static_cast<long>(n)).get() == total);
    }
  }
}

TEST_CASE("recurrences hold on oracle data") {
  const Oracle oracle;
  CHECK(recurrence_formulas().size() == 4);
  for (FormulaId id : recurrence_formulas()) {
    CHECK(has_recurrence(id));
    const RecurrenceReport r = recurrence_check(id, 9, oracle);
    INFO(info(id).name, ": ", r.relation);
    CHECK(r.holds());
    CHECK(r.cells_checked > 0);
  }
  CHECK_FALSE(has_recurrence(FormulaId::Thm123_321));
  CHECK_THROWS_AS(recurrence_check(FormulaId::Thm123_321, 8, oracle), InvalidInput);
}
