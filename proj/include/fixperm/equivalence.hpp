#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fixperm/bigint.hpp"
#include "fixperm/permutation.hpp"

namespace fixperm {

class Oracle;

/// An element of the group acting on pattern sets, as the image of each of
/// the six patterns (indexed as in Pattern).
struct GroupElement {
  std::array<std::size_t, Pattern::kCount> image;
  std::string word;  // "e", "I", "RC", "I.RC", ...

  PatternSet apply(const PatternSet& patterns) const;
};

/// Closure of {I, RC} under composition, identity first. I and RC are the
/// symmetries that preserve fixed points; R and C alone do not.
std::vector<GroupElement> acting_group();

struct OrbitClass {
  PatternSet representative;        // least member
  std::vector<PatternSet> members;  // canonical order
};

OrbitClass orbit(const PatternSet& patterns);

enum class Grouping {
  /// Plain orbits under acting_group().
  Orbits,
  /// Orbits, except that every set containing both 123 and 321 goes into a
  /// single class: such sets have no avoiders once n >= 5, and this is the
  /// case list used for the three-pattern classification.
  MergeMonotonePair,
};

/// Partition of all C(6, cardinality) pattern sets, ordered by representative.
/// Throws InvalidInput unless 1 <= cardinality <= 6.
std::vector<OrbitClass> symmetry_classes(std::size_t cardinality, Grouping grouping = Grouping::MergeMonotonePair);

/// Pattern sets whose refined tables agree for every n <= n_max. Empirical:
/// agreement up to n_max is evidence, not proof.
struct SuperWilfClass {
  std::vector<PatternSet> members;
  std::size_t n_max;
};

/// First cell where two classes' tables differ.
struct Divergence {
  PatternSet first;
  PatternSet second;
  long n;
  long k;
  BigInt first_count;
  BigInt second_count;
};

struct SuperWilfPartition {
  std::size_t n_max;
  std::vector<SuperWilfClass> classes;  // in order of first appearance among candidates
  std::vector<Divergence> splits;       // one per pair of classes
};

SuperWilfPartition super_wilf_classes(std::span<const PatternSet> candidates, std::size_t n_max,
                                      const Oracle& oracle);

}  // namespace fixperm
