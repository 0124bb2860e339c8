#include <atomic>
#include <string>

#include "fixperm/errors.hpp"
#include "fixperm/kernels.hpp"

namespace fixperm::kernels {
namespace {

constexpr KernelSet kScalar{Isa::Scalar, "scalar", &pattern_mask_scalar, &fixed_points_scalar};
#if defined(FIXPERM_HAVE_X86_KERNELS)
constexpr KernelSet kSse41{Isa::Sse41, "sse41", &pattern_mask_sse41, &fixed_points_sse41};
constexpr KernelSet kAvx2{Isa::Avx2, "avx2", &pattern_mask_avx2, &fixed_points_avx2};
#endif

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{&best_kernels()};
  return slot;
}

}  // namespace

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
#if defined(FIXPERM_HAVE_X86_KERNELS)
    case Isa::Sse41: return __builtin_cpu_supports("sse4.1");
    case Isa::Avx2: return __builtin_cpu_supports("avx2");
#else
    case Isa::Sse41:
    case Isa::Avx2: return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Sse41, Isa::Avx2}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Sse41: return "sse41";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

Isa parse_isa(std::string_view name) {
  for (Isa isa : {Isa::Scalar, Isa::Sse41, Isa::Avx2}) {
    if (to_string(isa) == name) return isa;
  }
  throw InvalidInput("unknown kernel '" + std::string(name) + "' (expected scalar, sse41 or avx2)");
}

const KernelSet& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidInput("kernel '" + std::string(to_string(isa)) + "' is not supported on this CPU");
  }
  switch (isa) {
#if defined(FIXPERM_HAVE_X86_KERNELS)
    case Isa::Sse41: return kSse41;
    case Isa::Avx2: return kAvx2;
#endif
    default: return kScalar;
  }
}

const KernelSet& best_kernels() noexcept {
#if defined(FIXPERM_HAVE_X86_KERNELS)
  if (isa_supported(Isa::Avx2)) return kAvx2;
  if (isa_supported(Isa::Sse41)) return kSse41;
#endif
  return kScalar;
}

const KernelSet& active_kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

Lanes to_lanes(std::span<const int> values) {
  if (values.size() > kMaxLanes) {
    throw InvalidInput("kernels handle at most " + std::to_string(kMaxLanes) + " entries");
  }
  Lanes lanes{};
  for (std::size_t i = 0; i < values.size(); ++i) lanes[i] = static_cast<std::uint8_t>(values[i]);
  return lanes;
}

}  // namespace fixperm::kernels
