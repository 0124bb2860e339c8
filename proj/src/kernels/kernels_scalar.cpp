#include <algorithm>

#include "fixperm/kernels.hpp"

namespace fixperm::kernels {

PatternMask pattern_mask_scalar(const Lanes& lanes, std::size_t n) noexcept {
  constexpr int kNone = 0;
  constexpr int kAll = 0xff;
  PatternMask mask = 0;
  for (std::size_t j = 0; j < n && mask != 0x3f; ++j) {
    const int v = lanes[j];
    int ls_min = kAll, ls_max = kNone, lg_min = kAll, lg_max = kNone;
    int rs_min = kAll, rs_max = kNone, rg_min = kAll, rg_max = kNone;
    for (std::size_t i = 0; i < j; ++i) {
      const int x = lanes[i];
      if (x < v) {
        ls_min = std::min(ls_min, x);
        ls_max = std::max(ls_max, x);
      } else {
        lg_min = std::min(lg_min, x);
        lg_max = std::max(lg_max, x);
      }
    }
    for (std::size_t k = j + 1; k < n; ++k) {
      const int x = lanes[k];
      if (x < v) {
        rs_min = std::min(rs_min, x);
        rs_max = std::max(rs_max, x);
      } else {
        rg_min = std::min(rg_min, x);
        rg_max = std::max(rg_max, x);
      }
    }
    // Empty sides leave min = 0xff and max = 0, so every comparison below
    // involving an empty side is false.
    const bool ls = ls_max != kNone, lg = lg_max != kNone;
    const bool rs = rs_max != kNone, rg = rg_max != kNone;
    mask |= static_cast<PatternMask>((ls && rg) << 0);
    mask |= static_cast<PatternMask>((ls_min < rs_max) << 1);
    mask |= static_cast<PatternMask>((lg_min < rg_max) << 2);
    mask |= static_cast<PatternMask>((ls_max > rs_min) << 3);
    mask |= static_cast<PatternMask>((lg_max > rg_min) << 4);
    mask |= static_cast<PatternMask>((lg && rs) << 5);
  }
  return mask;
}

std::size_t fixed_points_scalar(const Lanes& lanes, std::size_t n) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += lanes[i] == i + 1;
  return count;
}

}  // namespace fixperm::kernels
