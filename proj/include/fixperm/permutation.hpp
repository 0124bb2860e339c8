#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixperm {

/// A permutation of {1..n} in one-line notation. Entries are stored with their
/// 1-based values; positions are 0-based when indexing from C++.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `entries` is a permutation of {1..size}.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(std::size_t n);

  /// Accepts compact digits ("2413", only for n <= 9) or a comma list ("2,4,1,3").
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t position) const { return entries_[position]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Compact digits when every entry is a single digit, comma list otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Rank sequence of distinct integers: entry i becomes |{x : seq[x] <= seq[i]}|.
Permutation reduce(std::span<const int> seq);

/// True iff some subsequence of `p` reduces to `q` (patterns of any length).
bool contains(const Permutation& p, const Permutation& q);

std::size_t fixed_point_count(const Permutation& p);

/// Inverse, reverse, complement and reverse-complement.
enum class Symmetry { I, R, C, RC };

Permutation symmetry(const Permutation& p, Symmetry op);
std::string_view to_string(Symmetry op);

/// A length-3 pattern. The six patterns are indexed in lexicographic order of
/// their one-line notation: 123, 132, 213, 231, 312, 321.
class Pattern {
 public:
  static constexpr std::size_t kCount = 6;
  static constexpr std::array<std::string_view, kCount> kNames = {"123", "132", "213",
                                                                  "231", "312", "321"};

  /// Throws InvalidInput unless `p` has size 3.
  explicit Pattern(const Permutation& p);

  static Pattern from_index(std::size_t index);
  /// "132" or "1,3,2".
  static Pattern parse(std::string_view text);

  std::size_t index() const noexcept { return index_; }
  Permutation permutation() const;
  std::string_view name() const noexcept { return kNames[index_]; }

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  explicit Pattern(std::size_t index) : index_(index) {}
  std::size_t index_ = 0;
};

bool contains(const Permutation& p, const Pattern& q);
Pattern symmetry(const Pattern& q, Symmetry op);

/// Non-empty set of distinct length-3 patterns in canonical (lexicographic)
/// order. Bit i of mask() is set iff Pattern::from_index(i) is a member.
class PatternSet {
 public:
  using Mask = std::uint8_t;
  static constexpr Mask kFullMask = 0x3f;

  /// Throws InvalidInput on duplicates or an empty list.
  explicit PatternSet(std::span<const Pattern> patterns);
  PatternSet(std::initializer_list<Pattern> patterns)
      : PatternSet(std::span<const Pattern>(patterns.begin(), patterns.size())) {}

  /// Throws InvalidInput when mask is zero or has bits beyond the six patterns.
  static PatternSet from_mask(Mask mask);
  /// Comma-separated compact patterns: "123,321".
  static PatternSet parse(std::string_view text);

  Mask mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  std::vector<Pattern> patterns() const;
  bool contains(const Pattern& q) const noexcept { return (mask_ >> q.index()) & 1u; }

  /// Applies `op` to every member.
  PatternSet transformed(Symmetry op) const;

  std::string to_string() const;

  /// Lexicographic on the canonical pattern lists.
  friend std::strong_ordering operator<=>(const PatternSet& a, const PatternSet& b);
  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  explicit PatternSet(Mask mask) : mask_(mask) {}
  Mask mask_ = 0;
};

/// Every C(6, cardinality) pattern set, in canonical order.
std::vector<PatternSet> all_pattern_sets(std::size_t cardinality);

bool avoids_all(const Permutation& p, const PatternSet& patterns);

}  // namespace fixperm
