#include <algorithm>
#include <set>

#include "doctest.h"

#include "fixperm/equivalence.hpp"
#include "fixperm/errors.hpp"
#include "fixperm/oracle.hpp"

using namespace fixperm;

namespace {

std::vector<PatternSet> sets(std::initializer_list<const char*> texts) {
  std::vector<PatternSet> out;
  for (const char* t : texts) out.push_back(PatternSet::parse(t));
  return out;
}

}  // namespace

TEST_CASE("the acting group has order 4") {
  const auto group = acting_group();
  CHECK(group.size() == 4);
  CHECK(group.front().word == "e");
  std::set<std::array<std::size_t, Pattern::kCount>> images;
  for (const GroupElement& g : group) images.insert(g.image);
  CHECK(images.size() == 4);
  for (const GroupElement& g : group) {
    for (const GroupElement& h : group) {
      std::array<std::size_t, Pattern::kCount> composed{};
      for (std::size_t i = 0; i < Pattern::kCount; ++i) composed[i] = g.image[h.image[i]];
      CHECK(images.count(composed) == 1);
    }
  }
}

TEST_CASE("orbits") {
  CHECK(orbit(PatternSet::parse("123,321")).members == sets({"123,321"}));
  CHECK(orbit(PatternSet::parse("123,132")).members == sets({"123,132", "123,213"}));
  const OrbitClass o = orbit(PatternSet::parse("132,231,321"));
  CHECK(o.members.size() == 4);
  CHECK(std::count(o.members.begin(), o.members.end(), PatternSet::parse("213,312,321")) == 1);
  CHECK(o.representative == PatternSet::parse("132,231,321"));
  CHECK(orbit(PatternSet::parse("132,231")).members == sets({"132,231", "132,312", "213,231", "213,312"}));
}

TEST_CASE("class counts") {
  CHECK(symmetry_classes(1).size() == 4);
  CHECK(symmetry_classes(2).size() == 8);
  CHECK(symmetry_classes(2, Grouping::Orbits).size() == 8);
  CHECK(symmetry_classes(3).size() == 9);
  CHECK(symmetry_classes(3, Grouping::Orbits).size() == 10);
  CHECK(symmetry_classes(6).size() == 1);
  CHECK_THROWS_AS(symmetry_classes(0), InvalidInput);
  CHECK_THROWS_AS(symmetry_classes(7), InvalidInput);
}

TEST_CASE("classes partition every size and are closed under the group") {
  const auto group = acting_group();
  for (std::size_t c = 1; c <= 6; ++c) {
    for (Grouping grouping : {Grouping::Orbits, Grouping::MergeMonotonePair}) {
      std::vector<PatternSet> seen;
      for (const OrbitClass& cls : symmetry_classes(c, grouping)) {
        CHECK(cls.representative == cls.members.front());
        for (const PatternSet& t : cls.members) {
          seen.push_back(t);
          for (const GroupElement& g : group) {
            CHECK(std::count(cls.members.begin(), cls.members.end(), g.apply(t)) == 1);
          }
        }
      }
      std::sort(seen.begin(), seen.end());
      CHECK(seen == all_pattern_sets(c));
    }
  }
}

TEST_CASE("orbit members share refined tables for n <= 8") {
  const Oracle oracle;
  for (std::size_t c = 1; c <= 6; ++c) {
    for (const OrbitClass& cls : symmetry_classes(c, Grouping::Orbits)) {
      for (std::size_t n = 0; n <= 8; ++n) {
        const auto base = oracle.refined_count(n, cls.representative);
        for (const PatternSet& t : cls.members) REQUIRE(oracle.refined_count(n, t) == base);
      }
    }
  }
}

TEST_CASE("super-Wilf classes") {
  const Oracle oracle;
  const auto singles = sets({"321", "132", "213", "231", "312"});
  const SuperWilfPartition p = super_wilf_classes(singles, 8, oracle);
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0].members == sets({"321", "132", "213"}));
  CHECK(p.classes[1].members == sets({"231", "312"}));
  CHECK(p.classes[0].n_max == 8);
  REQUIRE(p.splits.size() == 1);
  CHECK(p.splits[0].first_count != p.splits[0].second_count);
  CHECK(oracle.count(p.splits[0].n, p.splits[0].k, p.splits[0].first) == p.splits[0].first_count);

  const auto pairs = sets({"132,231", "132,312", "213,231", "213,312"});
  CHECK(super_wilf_classes(pairs, 8, oracle).classes.size() == 1);

  const auto lone = sets({"123,321"});
  const SuperWilfPartition single = super_wilf_classes(lone, 6, oracle);
  CHECK(single.classes.size() == 1);
  CHECK(single.splits.empty());
}

TEST_CASE("every orbit lies inside one super-Wilf class") {
  const Oracle oracle;
  for (std::size_t c = 1; c <= 3; ++c) {
    const auto candidates = all_pattern_sets(c);
    const SuperWilfPartition p = super_wilf_classes(candidates, 7, oracle);
    for (const OrbitClass& cls : symmetry_classes(c, Grouping::Orbits)) {
      const auto holder = std::find_if(p.classes.begin(), p.classes.end(), [&](const SuperWilfClass& s) {
        return std::count(s.members.begin(), s.members.end(), cls.representative) == 1;
      });
      REQUIRE(holder != p.classes.end());
      for (const PatternSet& t : cls.members) CHECK(std::count(holder->members.begin(), holder->members.end(), t) == 1);
    }
  }
}
