#include "fixperm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>
#include <thread>

#include "fixperm/errors.hpp"

namespace fixperm {
namespace {

// Sweeps every permutation of size n whose first entry is `first`.
void sweep_block(std::size_t n, int first, const kernels::KernelSet& kernels, Oracle::Histogram& out) {
  kernels::Lanes lanes{};
  lanes[0] = static_cast<std::uint8_t>(first);
  std::uint8_t next = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (next == first) ++next;
    lanes[i] = next++;
  }
  do {
    const kernels::PatternMask mask = kernels.pattern_mask(lanes, n);
    ++out[mask][kernels.fixed_points(lanes, n)];
  } while (std::next_permutation(lanes.begin() + 1, lanes.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace

std::size_t default_oracle_cap() {
  const char* text = std::getenv(kOracleCapEnv);
  if (text == nullptr) return kDefaultOracleCap;
  std::size_t value = 0;
  const char* end = text + std::strlen(text);
  const auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end) return kDefaultOracleCap;
  return value;
}

BigInt CountTable::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) >= rows.size()) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt CountTable::row_total(std::size_t n) const {
  BigInt total = 0;
  for (const BigInt& c : rows.at(n)) total += c;
  return total;
}

Oracle::Histogram sweep_histogram(std::size_t n, const kernels::KernelSet& kernels) {
  Oracle::Histogram total{};
  if (n == 0) {
    total[0][0] = 1;
    return total;
  }
  const unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n));
  if (threads <= 1 || n < 8) {
    for (int first = 1; first <= static_cast<int>(n); ++first) sweep_block(n, first, kernels, total);
    return total;
  }
  // Blocks are summed, so the result does not depend on scheduling.
  std::vector<Oracle::Histogram> partial(n, Oracle::Histogram{});
  std::atomic<int> next_first{1};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (int first = next_first++; first <= static_cast<int>(n); first = next_first++) {
        sweep_block(n, first, kernels, partial[static_cast<std::size_t>(first - 1)]);
      }
    });
  }
  workers.clear();
  for (const Oracle::Histogram& h : partial) {
    for (std::size_t m = 0; m < h.size(); ++m) {
      for (std::size_t k = 0; k < h[m].size(); ++k) total[m][k] += h[m][k];
    }
  }
  return total;
}

Oracle::Oracle(std::size_t cap) : cap_(cap) {
  if (cap_ > kernels::kMaxLanes) {
    throw InvalidInput("oracle cap " + std::to_string(cap_) + " exceeds the supported maximum of " +
                       std::to_string(kernels::kMaxLanes));
  }
}

void Oracle::check_cap(std::size_t n) const {
  if (n > cap_) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(cap_) +
                            " (raise it with --oracle-cap or " + kOracleCapEnv + ")",
                        cap_);
  }
}

void Oracle::for_each_avoider(std::size_t n, const PatternSet& patterns,
                              const std::function<void(const Permutation&)>& visit) const {
  check_cap(n);
  const kernels::KernelSet& k = kernels::active_kernels();
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  do {
    const kernels::Lanes lanes = kernels::to_lanes(values);
    if ((k.pattern_mask(lanes, n) & patterns.mask()) == 0) visit(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<Permutation> Oracle::enumerate_avoiders(std::size_t n, const PatternSet& patterns) const {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

const Oracle::Histogram& Oracle::histogram(std::size_t n) const {
  check_cap(n);
  std::shared_future<Histogram> future;
  std::promise<Histogram> promise;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      future = promise.get_future().share();
      cache_.emplace(n, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(sweep_histogram(n, kernels::active_kernels()));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::vector<BigInt> Oracle::refined_count(std::size_t n, const PatternSet& patterns) const {
  const Histogram& h = histogram(n);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::size_t mask = 0; mask < h.size(); ++mask) {
    if ((mask & patterns.mask()) != 0) continue;
    for (std::size_t k = 0; k <= n; ++k) counts[k] += h[mask][k];
  }
  return {counts.begin(), counts.end()};
}

CountTable Oracle::count_table(std::size_t n_max, const PatternSet& patterns) const {
  check_cap(n_max);
  CountTable table{patterns, {}};
  for (std::size_t n = 0; n <= n_max; ++n) table.rows.push_back(refined_count(n, patterns));
  return table;
}

BigInt Oracle::count(long n, long k, const PatternSet& patterns) const {
  if (n < 0 || k < 0 || k > n) return 0;
  return refined_count(static_cast<std::size_t>(n), patterns)[static_cast<std::size_t>(k)];
}

}  // namespace fixperm
