// Built with -mavx2; only reached after a runtime CPU check.
//
// The permutation is broadcast into both 128-bit halves and each half handles
// a different middle position, so one pass of the loop covers j and j+1.
#include <immintrin.h>

#include <bit>
#include <type_traits>

#include "fixperm/kernels.hpp"

namespace fixperm::kernels {
namespace {

// Per-128-bit-half horizontal min/max; results land in bytes 0 and 16.
inline __m256i hmin_halves(__m256i v) {
  v = _mm256_min_epu8(v, _mm256_srli_si256(v, 8));
  v = _mm256_min_epu8(v, _mm256_srli_si256(v, 4));
  v = _mm256_min_epu8(v, _mm256_srli_si256(v, 2));
  return _mm256_min_epu8(v, _mm256_srli_si256(v, 1));
}

inline __m256i hmax_halves(__m256i v) {
  v = _mm256_max_epu8(v, _mm256_srli_si256(v, 8));
  v = _mm256_max_epu8(v, _mm256_srli_si256(v, 4));
  v = _mm256_max_epu8(v, _mm256_srli_si256(v, 2));
  return _mm256_max_epu8(v, _mm256_srli_si256(v, 1));
}

struct Sides {
  int ls_min, lg_min, rs_min, rg_min;
  int ls_max, lg_max, rs_max, rg_max;
};

inline PatternMask classify(const Sides& s) {
  PatternMask mask = 0;
  mask |= static_cast<PatternMask>((s.ls_max != 0 && s.rg_max != 0) << 0);
  mask |= static_cast<PatternMask>((s.ls_min < s.rs_max) << 1);
  mask |= static_cast<PatternMask>((s.lg_min < s.rg_max) << 2);
  mask |= static_cast<PatternMask>((s.ls_max > s.rs_min) << 3);
  mask |= static_cast<PatternMask>((s.lg_max > s.rg_min) << 4);
  mask |= static_cast<PatternMask>((s.lg_max != 0 && s.rs_max != 0) << 5);
  return mask;
}

}  // namespace

PatternMask pattern_mask_avx2(const Lanes& lanes, std::size_t n) noexcept {
  const __m256i x = _mm256_broadcastsi128_si256(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(lanes.data())));
  const __m256i iota = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                        0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m256i all = _mm256_set1_epi8(static_cast<char>(0xff));
  const __m256i valid = _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(n)), iota);

  PatternMask mask = 0;
  for (std::size_t j = 0; j < n && mask != 0x3f; j += 2) {
    // A second middle at j+1 == n sees an empty right side and sets no bits.
    const char v_hi = j + 1 < n ? static_cast<char>(lanes[j + 1]) : 0;
    const __m256i jv = _mm256_setr_m128i(_mm_set1_epi8(static_cast<char>(j)),
                                         _mm_set1_epi8(static_cast<char>(j + 1)));
    const __m256i vb = _mm256_setr_m128i(_mm_set1_epi8(static_cast<char>(lanes[j])),
                                         _mm_set1_epi8(v_hi));
    const __m256i left = _mm256_cmpgt_epi8(jv, iota);
    const __m256i right = _mm256_and_si256(_mm256_cmpgt_epi8(iota, jv), valid);
    const __m256i lt = _mm256_cmpgt_epi8(vb, x);
    const __m256i gt = _mm256_cmpgt_epi8(x, vb);

    const __m256i ls = _mm256_and_si256(left, lt);
    const __m256i lg = _mm256_and_si256(left, gt);
    const __m256i rs = _mm256_and_si256(right, lt);
    const __m256i rg = _mm256_and_si256(right, gt);

    const __m256i ls_min = hmin_halves(_mm256_blendv_epi8(all, x, ls));
    const __m256i lg_min = hmin_halves(_mm256_blendv_epi8(all, x, lg));
    const __m256i rs_min = hmin_halves(_mm256_blendv_epi8(all, x, rs));
    const __m256i rg_min = hmin_halves(_mm256_blendv_epi8(all, x, rg));
    const __m256i ls_max = hmax_halves(_mm256_and_si256(x, ls));
    const __m256i lg_max = hmax_halves(_mm256_and_si256(x, lg));
    const __m256i rs_max = hmax_halves(_mm256_and_si256(x, rs));
    const __m256i rg_max = hmax_halves(_mm256_and_si256(x, rg));

    const auto lane = [](__m256i v, auto half) {
      return static_cast<int>(static_cast<unsigned char>(_mm256_extract_epi8(v, decltype(half)::value)));
    };
    using Lo = std::integral_constant<int, 0>;
    using Hi = std::integral_constant<int, 16>;
    mask |= classify({lane(ls_min, Lo{}), lane(lg_min, Lo{}), lane(rs_min, Lo{}), lane(rg_min, Lo{}),
                      lane(ls_max, Lo{}), lane(lg_max, Lo{}), lane(rs_max, Lo{}), lane(rg_max, Lo{})});
    mask |= classify({lane(ls_min, Hi{}), lane(lg_min, Hi{}), lane(rs_min, Hi{}), lane(rg_min, Hi{}),
                      lane(ls_max, Hi{}), lane(lg_max, Hi{}), lane(rs_max, Hi{}), lane(rg_max, Hi{})});
  }
  return mask;
}

std::size_t fixed_points_avx2(const Lanes& lanes, std::size_t n) noexcept {
  // A single 16-byte comparison; there is nothing to gain from the upper half.
  return fixed_points_sse41(lanes, n);
}

}  // namespace fixperm::kernels
