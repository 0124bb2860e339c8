#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "naive.hpp"

#include "fixperm/errors.hpp"
#include "fixperm/kernels.hpp"

using namespace fixperm::kernels;

namespace {

void check_all_isas(const naive::Perm& p) {
  const Lanes lanes = to_lanes(p);
  const unsigned expected_mask = naive::mask(p);
  const std::size_t expected_fix = naive::fixed_points(p);
  for (Isa isa : supported_isas()) {
    const KernelSet& k = kernels_for(isa);
    INFO("isa ", k.name, " n ", p.size());
    REQUIRE(k.pattern_mask(lanes, p.size()) == expected_mask);
    REQUIRE(k.fixed_points(lanes, p.size()) == expected_fix);
  }
}

}  // namespace

TEST_CASE("scalar is always available and best_kernels is supported") {
  const auto isas = supported_isas();
  CHECK(std::find(isas.begin(), isas.end(), Isa::Scalar) != isas.end());
  CHECK(isa_supported(best_kernels().isa));
  CHECK(active_kernels().isa == best_kernels().isa);
  MESSAGE("kernels on this host: ", isas.size(), ", best: ", best_kernels().name);
}

TEST_CASE("isa names round-trip") {
  for (Isa isa : {Isa::Scalar, Isa::Sse41, Isa::Avx2}) CHECK(parse_isa(to_string(isa)) == isa);
  CHECK_THROWS_AS(parse_isa("neon9"), fixperm::InvalidInput);
}

TEST_CASE("all kernels agree with the definition on S_n for n <= 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    naive::Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do check_all_isas(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("all kernels agree with the definition on random permutations up to n = 16") {
  std::mt19937 rng(20240611);
  for (std::size_t n = 9; n <= kMaxLanes; ++n) {
    naive::Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int trial = 0; trial < 3000; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      check_all_isas(p);
    }
  }
}

TEST_CASE("structured inputs at the lane boundary") {
  for (std::size_t n : {3u, 15u, 16u}) {
    naive::Perm up(n), down(n);
    std::iota(up.begin(), up.end(), 1);
    std::iota(down.rbegin(), down.rend(), 1);
    check_all_isas(up);
    check_all_isas(down);
    CHECK(pattern_mask_scalar(to_lanes(up), n) == 0x01);
    CHECK(pattern_mask_scalar(to_lanes(down), n) == 0x20);
  }
}

TEST_CASE("active kernel selection") {
  const Isa before = active_kernels().isa;
  set_active_isa(Isa::Scalar);
  CHECK(active_kernels().isa == Isa::Scalar);
  set_active_isa(before);
  CHECK(active_kernels().isa == before);
}
