#include <cstdlib>

#include "doctest.h"
#include "naive.hpp"

#include "fixperm/errors.hpp"
#include "fixperm/oracle.hpp"

using namespace fixperm;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

std::vector<std::string> names(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  for (const Permutation& p : perms) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  const Oracle oracle;
  const auto empty = oracle.enumerate_avoiders(0, PatternSet::parse("123"));
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());
  CHECK(names(oracle.enumerate_avoiders(3, PatternSet::parse("231,312"))) ==
        std::vector<std::string>{"123", "132", "213", "321"});
  CHECK(names(oracle.enumerate_avoiders(3, PatternSet::parse("123,132"))) ==
        std::vector<std::string>{"213", "231", "312", "321"});
}

TEST_CASE("refined count examples") {
  const Oracle oracle;
  CHECK(oracle.refined_count(3, PatternSet::parse("231,312")) == big({0, 3, 0, 1}));
  for (std::size_t c = 1; c <= 6; ++c) {
    for (const PatternSet& t : all_pattern_sets(c)) CHECK(oracle.refined_count(2, t) == big({1, 0, 1}));
  }
  CHECK(oracle.refined_count(4, PatternSet::parse("123,321")) == big({4, 0, 0, 0, 0}));
  CHECK(oracle.refined_count(5, PatternSet::parse("123,321")) == big({0, 0, 0, 0, 0, 0}));
}

TEST_CASE("count tables") {
  const Oracle oracle;
  const CountTable small = oracle.count_table(2, PatternSet::parse("132,231"));
  CHECK(small.rows == std::vector<std::vector<BigInt>>{big({1}), big({0, 1}), big({1, 0, 1})});
  const CountTable t = oracle.count_table(5, PatternSet::parse("123,321"));
  CHECK(t.n_max() == 5);
  CHECK(t.at(4, 0) == 4);
  CHECK(t.at(4, -1) == 0);
  CHECK(t.at(4, 5) == 0);
  CHECK(t.at(9, 0) == 0);
  CHECK(t.row_total(3) == 4);
  CHECK(oracle.count(3, 7, PatternSet::parse("123")) == 0);
  CHECK(oracle.count(-1, 0, PatternSet::parse("123")) == 0);
}

TEST_CASE("oracle agrees with a definitional filter for every T and n <= 7") {
  const Oracle oracle;
  for (unsigned mask = 1; mask < 64; ++mask) {
    const PatternSet t = PatternSet::from_mask(static_cast<PatternSet::Mask>(mask));
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto expected = naive::refined(n, mask);
      const auto got = oracle.refined_count(n, t);
      REQUIRE(got.size() == n + 1);
      for (std::size_t k = 0; k <= n; ++k) REQUIRE(got[k] == expected[k]);
    }
  }
}

TEST_CASE("avoider lists are lexicographic and match the definitional filter") {
  const Oracle oracle;
  for (const char* text : {"123", "132,231", "231,312,321", "123,132,213,231"}) {
    const PatternSet t = PatternSet::parse(text);
    const auto got = oracle.enumerate_avoiders(6, t);
    const auto expected = naive::avoiders(6, t.mask());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(naive::Perm(got[i].entries().begin(), got[i].entries().end()) == expected[i]);
    }
  }
}

TEST_CASE("histogram invariants") {
  const Oracle oracle;
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto& h = oracle.histogram(n);
    BigInt total = 0;
    std::vector<BigInt> by_k(n + 1, 0);
    for (const auto& row : h) {
      for (std::size_t k = 0; k <= n; ++k) {
        total += row[k];
        by_k[k] += row[k];
      }
    }
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    CHECK(total == factorial);
    // n - 1 fixed points are impossible.
    if (n >= 1) CHECK(by_k[n - 1] == 0);
    CHECK(by_k[n] == 1);
    // Every permutation of size n >= 3 contains some pattern, and size < 3 contains none.
    if (n >= 3) CHECK(h[0][0] + h[0][n] == 0);
    if (n < 3) {
      BigInt unrestricted = 0;
      for (std::size_t k = 0; k <= n; ++k) unrestricted += h[0][k];
      CHECK(unrestricted == factorial);
    }
  }
}

TEST_CASE("the sweep is independent of the kernel") {
  for (kernels::Isa isa : kernels::supported_isas()) {
    const auto h = sweep_histogram(8, kernels::kernels_for(isa));
    CHECK(h == sweep_histogram(8, kernels::kernels_for(kernels::Isa::Scalar)));
  }
}

TEST_CASE("caps") {
  const Oracle small(5);
  CHECK(small.cap() == 5);
  CHECK_THROWS_AS(small.refined_count(6, PatternSet::parse("123")), ResourceLimit);
  try {
    small.enumerate_avoiders(6, PatternSet::parse("123"));
    FAIL("expected a resource limit");
  } catch (const ResourceLimit& e) {
    CHECK(e.cap() == 5);
    CHECK(std::string(e.what()).find('5') != std::string::npos);
  }
  CHECK_THROWS_AS(Oracle(17), InvalidInput);
  CHECK(Oracle().cap() == default_oracle_cap());
}

TEST_CASE("cap from the environment") {
  ::setenv(kOracleCapEnv, "7", 1);
  CHECK(default_oracle_cap() == 7);
  ::setenv(kOracleCapEnv, "seven", 1);
  CHECK(default_oracle_cap() == kDefaultOracleCap);
  ::unsetenv(kOracleCapEnv);
  CHECK(default_oracle_cap() == kDefaultOracleCap);
}
