#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fixperm/bigint.hpp"
#include "fixperm/permutation.hpp"

namespace fixperm {

/// How a class S_n(T) is built directly from its structural description.
enum class FamilyKind {
  BlockDesc,          // {123,132}: decreasing-then-max blocks over a chain n = t_0 > ... > t_m = 0
  BlockAsc,           // {132,213}: increasing blocks over the same chains
  Wedge123_231,       // {123,231}: position of n and the (x, y) parameterization
  NFirstRecursive,    // {132,231}: n first or n last
  RotationRecursive,  // {132,321}: (pi', n) or (j+1)...n 1...j
  TailDescRecursive,  // {231,312}: pi(1) n (n-1) ... j
  HeadMaxRecursive,   // {231,321}: pi' followed by n (n-j+1) ... (n-1)
  OneParam,           // three-pattern classes given by a single parameter j
  Prefix12Recursive,  // {231,312,321}: (1, pi') or (2, 1, pi'')
};

std::string_view to_string(FamilyKind kind);

struct StructuralFamily {
  PatternSet patterns;
  FamilyKind kind;
};

std::vector<StructuralFamily> supported_families();
std::optional<StructuralFamily> family_for(const PatternSet& patterns);

inline constexpr std::size_t kDefaultGeneratorCap = 14;

/// Builds avoidance classes from their structural characterizations instead
/// of filtering S_n. One-parameter forms are taken verbatim and deduplicated,
/// so a form that misses members shows up as a set mismatch against the oracle.
/// Results are memoized per (family, n); safe for concurrent use.
class Generator {
 public:
  explicit Generator(std::size_t cap = kDefaultGeneratorCap) : cap_(cap) {}

  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;

  std::size_t cap() const noexcept { return cap_; }

  /// Lexicographically sorted, duplicate-free. Throws UnsupportedFamily or ResourceLimit.
  std::vector<Permutation> generate(const PatternSet& patterns, std::size_t n) const;
  /// Fixed-point histogram of generate(patterns, n).
  std::vector<BigInt> generate_refined(const PatternSet& patterns, std::size_t n) const;

 private:
  using Result = std::shared_ptr<const std::vector<Permutation>>;
  Result build(const StructuralFamily& family, std::size_t n) const;

  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<PatternSet::Mask, std::size_t>, Result> memo_;
};

}  // namespace fixperm
