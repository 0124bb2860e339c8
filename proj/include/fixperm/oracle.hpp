#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <vector>

#include "fixperm/bigint.hpp"
#include "fixperm/kernels.hpp"
#include "fixperm/permutation.hpp"

namespace fixperm {

inline constexpr std::size_t kDefaultOracleCap = 11;
inline constexpr const char* kOracleCapEnv = "FIXPERM_ORACLE_CAP";

/// The cap from FIXPERM_ORACLE_CAP when set to a valid integer, else 11.
std::size_t default_oracle_cap();

/// s_n^k(T) for n = 0..n_max. Lookups outside 0 <= k <= n return 0.
struct CountTable {
  PatternSet patterns;
  std::vector<std::vector<BigInt>> rows;

  std::size_t n_max() const { return rows.empty() ? 0 : rows.size() - 1; }
  BigInt at(long n, long k) const;
  BigInt row_total(std::size_t n) const;
};

/// Exhaustive enumeration of S_n, the ground truth for every other module.
///
/// Each size n is swept once: every permutation is classified by the set of
/// length-3 patterns it contains and by its number of fixed points, and the
/// resulting histogram is cached. Counts for any pattern set then follow by
/// summing the histogram cells whose pattern mask is disjoint from the set.
/// Concurrent callers share the cache; a size is never swept twice.
class Oracle {
 public:
  using Histogram = std::array<std::array<std::uint64_t, kernels::kMaxLanes + 1>, 64>;

  /// Throws InvalidInput when cap exceeds kernels::kMaxLanes.
  explicit Oracle(std::size_t cap = default_oracle_cap());

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  std::size_t cap() const noexcept { return cap_; }

  /// Calls `visit` for every avoider of size n, in lexicographic order.
  void for_each_avoider(std::size_t n, const PatternSet& patterns,
                        const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> enumerate_avoiders(std::size_t n, const PatternSet& patterns) const;

  /// Entry k is the number of avoiders with exactly k fixed points.
  std::vector<BigInt> refined_count(std::size_t n, const PatternSet& patterns) const;
  CountTable count_table(std::size_t n_max, const PatternSet& patterns) const;
  /// s_n^k(T), 0 when k < 0 or k > n.
  BigInt count(long n, long k, const PatternSet& patterns) const;

  /// Number of permutations of size n with exactly the given pattern mask and k fixed points.
  const Histogram& histogram(std::size_t n) const;

 private:
  void check_cap(std::size_t n) const;

  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::shared_future<Histogram>> cache_;
};

/// Sweeps S_n with the given kernels, splitting the work by first entry
/// across threads when more than one hardware thread is available.
Oracle::Histogram sweep_histogram(std::size_t n, const kernels::KernelSet& kernels);

}  // namespace fixperm
