#include "fixperm/equivalence.hpp"

#include <algorithm>
#include <set>

#include "fixperm/errors.hpp"
#include "fixperm/oracle.hpp"

namespace fixperm {
namespace {

GroupElement generator_element(Symmetry op) {
  GroupElement g{{}, std::string(to_string(op))};
  for (std::size_t i = 0; i < Pattern::kCount; ++i) g.image[i] = symmetry(Pattern::from_index(i), op).index();
  return g;
}

// (a.b)(x) = a(b(x))
GroupElement compose(const GroupElement& a, const GroupElement& b) {
  GroupElement g{{}, a.word + "." + b.word};
  for (std::size_t i = 0; i < Pattern::kCount; ++i) g.image[i] = a.image[b.image[i]];
  return g;
}

bool has_monotone_pair(const PatternSet& t) {
  return t.contains(Pattern::parse("123")) && t.contains(Pattern::parse("321"));
}

}  // namespace

PatternSet GroupElement::apply(const PatternSet& patterns) const {
  PatternSet::Mask mask = 0;
  for (const Pattern& q : patterns.patterns()) mask |= static_cast<PatternSet::Mask>(1u << image[q.index()]);
  return PatternSet::from_mask(mask);
}

std::vector<GroupElement> acting_group() {
  GroupElement identity{{}, "e"};
  for (std::size_t i = 0; i < Pattern::kCount; ++i) identity.image[i] = i;
  const std::vector<GroupElement> gens = {generator_element(Symmetry::I), generator_element(Symmetry::RC)};

  std::vector<GroupElement> elements = {identity};
  for (std::size_t frontier = 0; frontier < elements.size(); ++frontier) {
    for (const GroupElement& g : gens) {
      GroupElement next = elements[frontier].word == "e" ? g : compose(g, elements[frontier]);
      const bool seen = std::any_of(elements.begin(), elements.end(),
                                    [&](const GroupElement& e) { return e.image == next.image; });
      if (!seen) elements.push_back(std::move(next));
    }
  }
  return elements;
}

OrbitClass orbit(const PatternSet& patterns) {
  std::set<PatternSet> members;
  for (const GroupElement& g : acting_group()) members.insert(g.apply(patterns));
  return {*members.begin(), {members.begin(), members.end()}};
}

std::vector<OrbitClass> symmetry_classes(std::size_t cardinality, Grouping grouping) {
  if (cardinality < 1 || cardinality > Pattern::kCount) {
    throw InvalidInput("cardinality must be between 1 and 6, got " + std::to_string(cardinality));
  }
  std::vector<OrbitClass> classes;
  std::set<PatternSet> placed;
  std::set<PatternSet> merged;
  for (const PatternSet& t : all_pattern_sets(cardinality)) {
    if (placed.count(t) != 0) continue;
    OrbitClass c = orbit(t);
    placed.insert(c.members.begin(), c.members.end());
    if (grouping == Grouping::MergeMonotonePair && has_monotone_pair(t)) {
      merged.insert(c.members.begin(), c.members.end());
      continue;
    }
    classes.push_back(std::move(c));
  }
  if (!merged.empty()) classes.push_back({*merged.begin(), {merged.begin(), merged.end()}});
  std::sort(classes.begin(), classes.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; });
  return classes;
}

SuperWilfPartition super_wilf_classes(std::span<const PatternSet> candidates, std::size_t n_max,
                                      const Oracle& oracle) {
  std::vector<std::vector<std::vector<BigInt>>> tables;
  for (const PatternSet& t : candidates) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t n = 0; n <= n_max; ++n) rows.push_back(oracle.refined_count(n, t));
    tables.push_back(std::move(rows));
  }

  SuperWilfPartition result{n_max, {}, {}};
  std::vector<std::size_t> class_table;  // index into candidates of each class's first member
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < result.classes.size() && !placed; ++c) {
      if (tables[class_table[c]] == tables[i]) {
        result.classes[c].members.push_back(candidates[i]);
        placed = true;
      }
    }
    if (!placed) {
      result.classes.push_back({{candidates[i]}, n_max});
      class_table.push_back(i);
    }
  }

  for (std::size_t a = 0; a < class_table.size(); ++a) {
    for (std::size_t b = a + 1; b < class_table.size(); ++b) {
      const auto& ta = tables[class_table[a]];
      const auto& tb = tables[class_table[b]];
      bool found = false;
      for (std::size_t n = 0; n <= n_max && !found; ++n) {
        for (std::size_t k = 0; k <= n && !found; ++k) {
          if (ta[n][k] != tb[n][k]) {
            result.splits.push_back({candidates[class_table[a]], candidates[class_table[b]], static_cast<long>(n),
                                     static_cast<long>(k), ta[n][k], tb[n][k]});
            found = true;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace fixperm
