#pragma once

// Inner-loop kernels of the brute-force oracle.
//
// A permutation of size n <= kMaxLanes is held in a 16-byte lane array with
// 1-based values in lanes [0, n) and zeros elsewhere. For every permutation the
// oracle needs two numbers: which of the six length-3 patterns occur in it
// (a 6-bit mask, bit i for Pattern::from_index(i)) and how many fixed points
// it has. Both are computed by a scalar reference and by SIMD variants that
// must agree with it bit for bit.
//
// Occurrence test, for each middle position j with value v:
//   LS/LG = values left of j that are smaller/larger than v
//   RS/RG = values right of j that are smaller/larger than v
//   123: LS and RG non-empty          321: LG and RS non-empty
//   132: min(LS) < max(RS)            231: max(LS) > min(RS)
//   213: min(LG) < max(RG)            312: max(LG) > min(RG)

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fixperm::kernels {

inline constexpr std::size_t kMaxLanes = 16;

using Lanes = std::array<std::uint8_t, kMaxLanes>;
using PatternMask = std::uint8_t;

enum class Isa { Scalar, Sse41, Avx2 };

struct KernelSet {
  Isa isa;
  std::string_view name;
  PatternMask (*pattern_mask)(const Lanes& lanes, std::size_t n) noexcept;
  std::size_t (*fixed_points)(const Lanes& lanes, std::size_t n) noexcept;
};

// Scalar reference; works for any n <= kMaxLanes.
PatternMask pattern_mask_scalar(const Lanes& lanes, std::size_t n) noexcept;
std::size_t fixed_points_scalar(const Lanes& lanes, std::size_t n) noexcept;

#if defined(FIXPERM_HAVE_X86_KERNELS)
PatternMask pattern_mask_sse41(const Lanes& lanes, std::size_t n) noexcept;
std::size_t fixed_points_sse41(const Lanes& lanes, std::size_t n) noexcept;
PatternMask pattern_mask_avx2(const Lanes& lanes, std::size_t n) noexcept;
std::size_t fixed_points_avx2(const Lanes& lanes, std::size_t n) noexcept;
#endif

bool isa_supported(Isa isa) noexcept;
std::vector<Isa> supported_isas();
std::string_view to_string(Isa isa) noexcept;
/// "scalar", "sse41", "avx2"; throws InvalidInput otherwise.
Isa parse_isa(std::string_view name);

/// Throws InvalidInput if the host cannot run `isa`.
const KernelSet& kernels_for(Isa isa);
const KernelSet& best_kernels() noexcept;

/// Kernel set used by the oracle. Defaults to best_kernels().
const KernelSet& active_kernels() noexcept;
void set_active_isa(Isa isa);

/// Packs 1-based values into lanes; n must be <= kMaxLanes.
Lanes to_lanes(std::span<const int> values);

}  // namespace fixperm::kernels
