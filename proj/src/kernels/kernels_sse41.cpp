// Built with -msse4.1; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "fixperm/kernels.hpp"

namespace fixperm::kernels {
namespace {

inline int hmin_u8(__m128i v) {
  v = _mm_min_epu8(v, _mm_srli_si128(v, 8));
  v = _mm_min_epu8(v, _mm_srli_si128(v, 4));
  v = _mm_min_epu8(v, _mm_srli_si128(v, 2));
  v = _mm_min_epu8(v, _mm_srli_si128(v, 1));
  return _mm_extract_epi8(v, 0);
}

inline int hmax_u8(__m128i v) {
  v = _mm_max_epu8(v, _mm_srli_si128(v, 8));
  v = _mm_max_epu8(v, _mm_srli_si128(v, 4));
  v = _mm_max_epu8(v, _mm_srli_si128(v, 2));
  v = _mm_max_epu8(v, _mm_srli_si128(v, 1));
  return _mm_extract_epi8(v, 0);
}

}  // namespace

PatternMask pattern_mask_sse41(const Lanes& lanes, std::size_t n) noexcept {
  const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lanes.data()));
  const __m128i iota = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m128i all = _mm_set1_epi8(static_cast<char>(0xff));
  const __m128i valid = _mm_cmpgt_epi8(_mm_set1_epi8(static_cast<char>(n)), iota);

  PatternMask mask = 0;
  for (std::size_t j = 0; j < n && mask != 0x3f; ++j) {
    const __m128i jv = _mm_set1_epi8(static_cast<char>(j));
    const __m128i vb = _mm_set1_epi8(static_cast<char>(lanes[j]));
    const __m128i left = _mm_cmpgt_epi8(jv, iota);
    const __m128i right = _mm_and_si128(_mm_cmpgt_epi8(iota, jv), valid);
    const __m128i lt = _mm_cmpgt_epi8(vb, x);
    const __m128i gt = _mm_cmpgt_epi8(x, vb);

    const __m128i ls = _mm_and_si128(left, lt);
    const __m128i lg = _mm_and_si128(left, gt);
    const __m128i rs = _mm_and_si128(right, lt);
    const __m128i rg = _mm_and_si128(right, gt);

    const int ls_min = hmin_u8(_mm_blendv_epi8(all, x, ls));
    const int lg_min = hmin_u8(_mm_blendv_epi8(all, x, lg));
    const int rs_min = hmin_u8(_mm_blendv_epi8(all, x, rs));
    const int rg_min = hmin_u8(_mm_blendv_epi8(all, x, rg));
    const int ls_max = hmax_u8(_mm_and_si128(x, ls));
    const int lg_max = hmax_u8(_mm_and_si128(x, lg));
    const int rs_max = hmax_u8(_mm_and_si128(x, rs));
    const int rg_max = hmax_u8(_mm_and_si128(x, rg));

    mask |= static_cast<PatternMask>((ls_max != 0 && rg_max != 0) << 0);
    mask |= static_cast<PatternMask>((ls_min < rs_max) << 1);
    mask |= static_cast<PatternMask>((lg_min < rg_max) << 2);
    mask |= static_cast<PatternMask>((ls_max > rs_min) << 3);
    mask |= static_cast<PatternMask>((lg_max > rg_min) << 4);
    mask |= static_cast<PatternMask>((lg_max != 0 && rs_max != 0) << 5);
  }
  return mask;
}

std::size_t fixed_points_sse41(const Lanes& lanes, std::size_t n) noexcept {
  const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lanes.data()));
  const __m128i one_based = _mm_setr_epi8(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16);
  const unsigned hits = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(x, one_based)));
  const unsigned valid = n >= kMaxLanes ? 0xffffu : (1u << n) - 1u;
  return static_cast<std::size_t>(std::popcount(hits & valid));
}

}  // namespace fixperm::kernels
