#include "fixperm/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "fixperm/errors.hpp"

namespace fixperm {
namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  const bool comma_list = text.find(',') != std::string_view::npos;
  if (!comma_list) {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidInput("invalid permutation text: '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    return values;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("invalid permutation text: '" + std::string(text) + "'");
    }
    values.push_back(value);
    start = end + 1;
  }
  return values;
}

// Relative order of a length-3 pattern, as three "less than" bits.
struct TripleShape {
  bool first_below_second;
  bool first_below_third;
  bool second_below_third;
};

TripleShape shape_of(const Permutation& q) {
  return {q[0] < q[1], q[0] < q[2], q[1] < q[2]};
}

bool contains_subsequence(std::span<const int> p, const Permutation& q, std::size_t from,
                          std::vector<int>& chosen) {
  if (chosen.size() == q.size()) return reduce(chosen) == q;
  const std::size_t remaining = q.size() - chosen.size();
  for (std::size_t i = from; i + remaining <= p.size(); ++i) {
    chosen.push_back(p[i]);
    if (contains_subsequence(p, q, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > entries_.size() || seen[v]) {
      throw InvalidInput("not a permutation of {1.." + std::to_string(entries_.size()) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  return Permutation(std::move(entries));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = entries_.size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation reduce(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("reduce: entries must be distinct");
  }
  std::vector<int> ranks(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ranks[i] = static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin());
  }
  return Permutation(std::move(ranks));
}

bool contains(const Permutation& p, const Permutation& q) {
  if (q.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(q.size());
  return contains_subsequence(p.entries(), q, 0, chosen);
}

bool contains(const Permutation& p, const Pattern& q) {
  const TripleShape want = shape_of(q.permutation());
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((p[i] < p[j]) != want.first_below_second) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if ((p[i] < p[k]) == want.first_below_third && (p[j] < p[k]) == want.second_below_third) {
          return true;
        }
      }
    }
  }
  return false;
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) count += p[i] == static_cast<int>(i + 1);
  return count;
}

Permutation symmetry(const Permutation& p, Symmetry op) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(p.size());
  for (int i = 0; i < n; ++i) {
    switch (op) {
      case Symmetry::I: out[p[i] - 1] = i + 1; break;
      case Symmetry::R: out[i] = p[n - 1 - i]; break;
      case Symmetry::C: out[i] = n + 1 - p[i]; break;
      case Symmetry::RC: out[i] = n + 1 - p[n - 1 - i]; break;
    }
  }
  return Permutation(std::move(out));
}

std::string_view to_string(Symmetry op) {
  switch (op) {
    case Symmetry::I: return "I";
    case Symmetry::R: return "R";
    case Symmetry::C: return "C";
    case Symmetry::RC: return "RC";
  }
  return "?";
}

Pattern::Pattern(const Permutation& p) {
  if (p.size() != 3) throw InvalidInput("patterns must have length 3, got " + p.to_string());
  const std::string name = p.to_string();
  index_ = static_cast<std::size_t>(std::find(kNames.begin(), kNames.end(), name) - kNames.begin());
}

Pattern Pattern::from_index(std::size_t index) {
  if (index >= kCount) throw InvalidInput("pattern index out of range");
  return Pattern(index);
}

Pattern Pattern::parse(std::string_view text) { return Pattern(Permutation::parse(text)); }

Permutation Pattern::permutation() const { return Permutation::parse(kNames[index_]); }

Pattern symmetry(const Pattern& q, Symmetry op) { return Pattern(symmetry(q.permutation(), op)); }

PatternSet::PatternSet(std::span<const Pattern> patterns) {
  if (patterns.empty()) throw InvalidInput("pattern set must not be empty");
  for (const Pattern& q : patterns) {
    const Mask bit = static_cast<Mask>(1u << q.index());
    if (mask_ & bit) throw InvalidInput("duplicate pattern " + std::string(q.name()));
    mask_ |= bit;
  }
}

PatternSet PatternSet::from_mask(Mask mask) {
  if (mask == 0 || (mask & ~kFullMask) != 0) throw InvalidInput("invalid pattern-set mask");
  return PatternSet(mask);
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Pattern> patterns;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() != 3) throw InvalidInput("invalid pattern '" + std::string(item) + "' in '" + std::string(text) + "'");
    patterns.push_back(Pattern::parse(item));
    start = end + 1;
  }
  return PatternSet(patterns);
}

std::size_t PatternSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Pattern> PatternSet::patterns() const {
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < Pattern::kCount; ++i) {
    if ((mask_ >> i) & 1u) out.push_back(Pattern::from_index(i));
  }
  return out;
}

PatternSet PatternSet::transformed(Symmetry op) const {
  std::vector<Pattern> out;
  for (const Pattern& q : patterns()) out.push_back(symmetry(q, op));
  return PatternSet(out);
}

std::string PatternSet::to_string() const {
  std::string out;
  for (const Pattern& q : patterns()) {
    if (!out.empty()) out += ',';
    out += q.name();
  }
  return out;
}

std::strong_ordering operator<=>(const PatternSet& a, const PatternSet& b) {
  const auto pa = a.patterns();
  const auto pb = b.patterns();
  return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

std::vector<PatternSet> all_pattern_sets(std::size_t cardinality) {
  std::vector<PatternSet> out;
  for (unsigned mask = 1; mask <= PatternSet::kFullMask; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == cardinality) {
      out.push_back(PatternSet::from_mask(static_cast<PatternSet::Mask>(mask)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool avoids_all(const Permutation& p, const PatternSet& patterns) {
  for (const Pattern& q : patterns.patterns()) {
    if (contains(p, q)) return false;
  }
  return true;
}

}  // namespace fixperm
