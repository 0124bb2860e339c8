#include "fixperm/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "fixperm/errors.hpp"

namespace fixperm {
namespace {

using Seq = std::vector<int>;

// a, a-1, ..., b (empty when a < b).
Seq down(int a, int b) {
  Seq out;
  for (int v = a; v >= b; --v) out.push_back(v);
  return out;
}

// a, a+1, ..., b (empty when a > b).
Seq up(int a, int b) {
  Seq out;
  for (int v = a; v <= b; ++v) out.push_back(v);
  return out;
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Seq shifted(std::span<const int> p, int by) {
  Seq out(p.begin(), p.end());
  for (int& v : out) v += by;
  return out;
}

// Chains n = t_0 > t_1 > ... > t_m = 0, one per subset of {1..n-1}.
std::vector<Seq> descending_chains(int n) {
  std::vector<Seq> chains;
  const unsigned subsets = 1u << (n - 1);
  for (unsigned s = 0; s < subsets; ++s) {
    Seq t{n};
    for (int v = n - 1; v >= 1; --v) {
      if ((s >> (v - 1)) & 1u) t.push_back(v);
    }
    t.push_back(0);
    chains.push_back(std::move(t));
  }
  return chains;
}

struct OneParamForm {
  std::string_view patterns;
  int (*j_first)(int n);
  int (*j_last)(int n);
  Seq (*build)(int n, int j);
};

// The one-parameter forms, as stated.
constexpr OneParamForm kOneParamForms[] = {
    {"123,132,231", [](int) { return 0; }, [](int n) { return n - 1; },
     [](int n, int j) { return concat({down(n, n - j + 1), down(n - j - 1, 1), Seq{n - j}}); }},
    {"123,231,312", [](int) { return 1; }, [](int n) { return n; },
     [](int n, int j) { return concat({down(j, 1), down(n, j + 1)}); }},
    {"132,213,231", [](int) { return 1; }, [](int n) { return n; },
     [](int n, int j) { return concat({down(n, n - j + 1), up(1, n - j)}); }},
    {"132,213,321", [](int) { return 1; }, [](int n) { return n; },
     [](int n, int j) { return concat({up(j, n), up(1, j - 1)}); }},
    {"132,231,312", [](int) { return 1; }, [](int n) { return n; },
     [](int n, int j) { return concat({down(j, 1), up(j + 1, n)}); }},
    {"132,231,321", [](int) { return 1; }, [](int n) { return n; },
     [](int n, int j) { return concat({Seq{j}, up(1, j - 1), up(j + 1, n)}); }},
};

const OneParamForm& one_param_form(const PatternSet& patterns) {
  for (const OneParamForm& form : kOneParamForms) {
    if (PatternSet::parse(form.patterns) == patterns) return form;
  }
  throw UnsupportedFamily("no one-parameter form for " + patterns.to_string());
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::BlockDesc: return "BLOCK_DESC";
    case FamilyKind::BlockAsc: return "BLOCK_ASC";
    case FamilyKind::Wedge123_231: return "WEDGE_123_231";
    case FamilyKind::NFirstRecursive: return "N_FIRST_RECURSIVE";
    case FamilyKind::RotationRecursive: return "ROTATION_RECURSIVE";
    case FamilyKind::TailDescRecursive: return "TAIL_DESC_RECURSIVE";
    case FamilyKind::HeadMaxRecursive: return "HEAD_MAX_RECURSIVE";
    case FamilyKind::OneParam: return "ONE_PARAM";
    case FamilyKind::Prefix12Recursive: return "PREFIX_12_RECURSIVE";
  }
  return "?";
}

std::vector<StructuralFamily> supported_families() {
  std::vector<StructuralFamily> out = {
      {PatternSet::parse("123,132"), FamilyKind::BlockDesc},
      {PatternSet::parse("132,213"), FamilyKind::BlockAsc},
      {PatternSet::parse("123,231"), FamilyKind::Wedge123_231},
      {PatternSet::parse("132,231"), FamilyKind::NFirstRecursive},
      {PatternSet::parse("132,321"), FamilyKind::RotationRecursive},
      {PatternSet::parse("231,312"), FamilyKind::TailDescRecursive},
      {PatternSet::parse("231,321"), FamilyKind::HeadMaxRecursive},
      {PatternSet::parse("231,312,321"), FamilyKind::Prefix12Recursive},
  };
  for (const OneParamForm& form : kOneParamForms) {
    out.push_back({PatternSet::parse(form.patterns), FamilyKind::OneParam});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.patterns < b.patterns; });
  return out;
}

std::optional<StructuralFamily> family_for(const PatternSet& patterns) {
  for (StructuralFamily& f : supported_families()) {
    if (f.patterns == patterns) return f;
  }
  return std::nullopt;
}

std::vector<Permutation> Generator::generate(const PatternSet& patterns, std::size_t n) const {
  const auto family = family_for(patterns);
  if (!family) {
    throw UnsupportedFamily("no structural generator for {" + patterns.to_string() +
                            "}; use the oracle (--method oracle) instead");
  }
  if (n > cap_) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the generator cap of " + std::to_string(cap_), cap_);
  }
  return *build(*family, n);
}

std::vector<BigInt> Generator::generate_refined(const PatternSet& patterns, std::size_t n) const {
  std::vector<BigInt> counts(n + 1, 0);
  for (const Permutation& p : generate(patterns, n)) ++counts[fixed_point_count(p)];
  return counts;
}

Generator::Result Generator::build(const StructuralFamily& family, std::size_t size) const {
  const auto key = std::make_pair(family.patterns.mask(), size);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const int n = static_cast<int>(size);
  std::set<Seq> out;
  const auto smaller = [&](int m) { return build(family, static_cast<std::size_t>(m)); };

  if (n <= 1) {
    out.insert(up(1, n));
  } else {
    switch (family.kind) {
      case FamilyKind::BlockDesc:
        for (const Seq& t : descending_chains(n)) {
          Seq p;
          for (std::size_t j = 1; j < t.size(); ++j) {
            const Seq block = concat({down(t[j - 1] - 1, t[j] + 1), Seq{t[j - 1]}});
            p.insert(p.end(), block.begin(), block.end());
          }
          out.insert(std::move(p));
        }
        break;
      case FamilyKind::BlockAsc:
        for (const Seq& t : descending_chains(n)) {
          Seq p;
          for (std::size_t j = 1; j < t.size(); ++j) {
            const Seq block = up(t[j] + 1, t[j - 1]);
            p.insert(p.end(), block.begin(), block.end());
          }
          out.insert(std::move(p));
        }
        break;
      case FamilyKind::Wedge123_231:
        // n at position i >= 2: (i-1) ... 1 n (n-1) ... i
        for (int i = 2; i <= n; ++i) out.insert(concat({down(i - 1, 1), Seq{n}, down(n - 1, i)}));
        // n first: n ... (n-x+1) y ... 1 (n-x) ... (y+1), or the decreasing permutation
        for (int x = 1; x <= n - 2; ++x) {
          for (int y = 1; y <= n - x - 1; ++y) out.insert(concat({down(n, n - x + 1), down(y, 1), down(n - x, y + 1)}));
        }
        out.insert(down(n, 1));
        break;
      case FamilyKind::NFirstRecursive: {
        for (const Permutation& p : *smaller(n - 1)) out.insert(concat({Seq(p.entries().begin(), p.entries().end()), Seq{n}}));
        // n, then a decreasing run, then 1, then the rest increasing
        const int middle = n - 2;
        for (unsigned s = 0; s < (1u << middle); ++s) {
          Seq left, right;
          for (int v = n - 1; v >= 2; --v) {
            if ((s >> (v - 2)) & 1u) left.push_back(v);
          }
          for (int v = 2; v <= n - 1; ++v) {
            if (!((s >> (v - 2)) & 1u)) right.push_back(v);
          }
          out.insert(concat({Seq{n}, left, Seq{1}, right}));
        }
        break;
      }
      case FamilyKind::RotationRecursive:
        for (const Permutation& p : *smaller(n - 1)) out.insert(concat({Seq(p.entries().begin(), p.entries().end()), Seq{n}}));
        for (int j = 1; j <= n - 1; ++j) out.insert(concat({up(j + 1, n), up(1, j)}));
        break;
      case FamilyKind::TailDescRecursive:
        for (int j = 1; j <= n; ++j) {
          for (const Permutation& p : *smaller(j - 1)) {
            out.insert(concat({Seq(p.entries().begin(), p.entries().end()), down(n, j)}));
          }
        }
        break;
      case FamilyKind::HeadMaxRecursive:
        for (int j = 1; j <= n; ++j) {
          for (const Permutation& p : *smaller(n - j)) {
            out.insert(concat({Seq(p.entries().begin(), p.entries().end()), Seq{n}, up(n - j + 1, n - 1)}));
          }
        }
        break;
      case FamilyKind::Prefix12Recursive:
        for (const Permutation& p : *smaller(n - 1)) out.insert(concat({Seq{1}, shifted(p.entries(), 1)}));
        for (const Permutation& p : *smaller(n - 2)) out.insert(concat({Seq{2, 1}, shifted(p.entries(), 2)}));
        break;
      case FamilyKind::OneParam: {
        const OneParamForm& form = one_param_form(family.patterns);
        for (int j = form.j_first(n); j <= form.j_last(n); ++j) out.insert(form.build(n, j));
        break;
      }
    }
  }

  auto result = std::make_shared<std::vector<Permutation>>();
  result->reserve(out.size());
  for (const Seq& s : out) result->emplace_back(s);
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(result)).first->second;
}

}  // namespace fixperm
