// Compiled with -mavx2. Nothing here may run before avx2_available() says so.

#include <immintrin.h>

#include <bit>

#include "inscribed/kernels/subset_scan.hpp"

namespace inscribed::kernels {

namespace {

struct Lanes {
  __m256i first_row;
  __m256i last_row;
  __m256i first_col_off;  // ~first_col
  __m256i last_col_off;   // ~last_col
  __m128i row_shift;

  explicit Lanes(const GridGeometry& g)
      : first_row(_mm256_set1_epi64x(static_cast<long long>(g.first_row))),
        last_row(_mm256_set1_epi64x(static_cast<long long>(g.last_row))),
        first_col_off(_mm256_set1_epi64x(static_cast<long long>(~g.first_col))),
        last_col_off(_mm256_set1_epi64x(static_cast<long long>(~g.last_col))),
        row_shift(_mm_cvtsi32_si128(g.b)) {}
};

// Lane i of the result is all ones when lane i of `masks` is inscribed.
inline __m256i classify4(const Lanes& k, const GridGeometry& g, __m256i masks) {
  const __m256i zero = _mm256_setzero_si256();
  // Lanes missing a side are zeroed so their flood fill converges at once.
  __m256i missing = _mm256_cmpeq_epi64(_mm256_and_si256(masks, k.first_row), zero);
  missing = _mm256_or_si256(missing, _mm256_cmpeq_epi64(_mm256_and_si256(masks, k.last_row), zero));
  const __m256i first_col = _mm256_set1_epi64x(static_cast<long long>(g.first_col));
  const __m256i last_col = _mm256_set1_epi64x(static_cast<long long>(g.last_col));
  missing = _mm256_or_si256(missing, _mm256_cmpeq_epi64(_mm256_and_si256(masks, first_col), zero));
  missing = _mm256_or_si256(missing, _mm256_cmpeq_epi64(_mm256_and_si256(masks, last_col), zero));
  const __m256i live = _mm256_andnot_si256(missing, masks);

  __m256i reach = _mm256_and_si256(live, _mm256_sub_epi64(zero, live));
  for (;;) {
    __m256i grown = reach;
    grown = _mm256_or_si256(grown, _mm256_and_si256(_mm256_slli_epi64(reach, 1), k.first_col_off));
    grown = _mm256_or_si256(grown, _mm256_and_si256(_mm256_srli_epi64(reach, 1), k.last_col_off));
    grown = _mm256_or_si256(grown, _mm256_sll_epi64(reach, k.row_shift));
    grown = _mm256_or_si256(grown, _mm256_srl_epi64(reach, k.row_shift));
    grown = _mm256_and_si256(grown, live);
    const __m256i same = _mm256_cmpeq_epi64(grown, reach);
    reach = grown;
    if (_mm256_movemask_epi8(same) == -1) break;
  }
  const __m256i connected = _mm256_cmpeq_epi64(reach, masks);
  return _mm256_andnot_si256(missing, connected);
}

}  // namespace

bool avx2_available() noexcept {
  static const bool available = __builtin_cpu_supports("avx2") != 0;
  return available;
}

void scan_avx2(const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
               std::span<std::uint64_t> histogram) noexcept {
  const Lanes k(g);
  const __m256i offsets = _mm256_setr_epi64x(0, 1, 2, 3);
  std::uint64_t mask = begin;
  alignas(32) std::uint64_t lanes[4];
  alignas(32) std::uint64_t verdict[4];
  for (; mask < end && end - mask >= 4; mask += 4) {
    const __m256i masks = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(mask)), offsets);
    const __m256i ok = classify4(k, g, masks);
    if (_mm256_testz_si256(ok, ok)) continue;
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), masks);
    _mm256_store_si256(reinterpret_cast<__m256i*>(verdict), ok);
    for (int i = 0; i < 4; ++i) {
      if (verdict[i] != 0) ++histogram[static_cast<std::size_t>(std::popcount(lanes[i]))];
    }
  }
  scan_scalar(g, mask, end, histogram);
}

void classify_avx2(const GridGeometry& g, std::span<const std::uint64_t> masks,
                   std::span<std::uint8_t> out) noexcept {
  const Lanes k(g);
  alignas(32) std::uint64_t verdict[4];
  std::size_t i = 0;
  for (; i + 4 <= masks.size(); i += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(verdict), classify4(k, g, m));
    for (std::size_t j = 0; j < 4; ++j) out[i + j] = verdict[j] != 0 ? 1 : 0;
  }
  classify_scalar(g, masks.subspan(i), out.subspan(i));
}

}  // namespace inscribed::kernels
