#include <bit>

#include "inscribed/errors.hpp"
#include "inscribed/kernels/subset_scan.hpp"

namespace inscribed::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

#if !defined(INSCRIBED_HAVE_AVX2)
bool avx2_available() noexcept { return false; }

void scan_avx2(const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
               std::span<std::uint64_t> histogram) noexcept {
  scan_scalar(g, begin, end, histogram);
}

void classify_avx2(const GridGeometry& g, std::span<const std::uint64_t> masks,
                   std::span<std::uint8_t> out) noexcept {
  classify_scalar(g, masks, out);
}
#endif

Isa best_isa() noexcept { return avx2_available() ? Isa::avx2 : Isa::scalar; }

GridGeometry GridGeometry::make(int b, int h) {
  if (b < 1 || h < 1 || b * h > 63) throw InvalidArgument("grid must satisfy 1 <= b, h and b * h <= 63");
  GridGeometry g;
  g.b = b;
  g.h = h;
  const int cells = b * h;
  g.full = (std::uint64_t{1} << cells) - 1;
  g.first_row = (std::uint64_t{1} << b) - 1;
  g.last_row = g.first_row << (cells - b);
  for (int r = 0; r < h; ++r) {
    g.first_col |= std::uint64_t{1} << (r * b);
    g.last_col |= std::uint64_t{1} << (r * b + b - 1);
  }
  return g;
}

bool is_inscribed_mask(const GridGeometry& g, std::uint64_t mask) noexcept {
  if ((mask & g.first_row) == 0 || (mask & g.last_row) == 0 || (mask & g.first_col) == 0 ||
      (mask & g.last_col) == 0) {
    return false;
  }
  // Flood fill from the lowest cell. Horizontal shifts drop cells that wrap
  // into the neighbouring row.
  std::uint64_t reach = mask & (~mask + 1);
  for (;;) {
    const std::uint64_t grown = (reach | ((reach << 1) & ~g.first_col) | ((reach >> 1) & ~g.last_col) |
                                 (reach << g.b) | (reach >> g.b)) &
                                mask;
    if (grown == reach) break;
    reach = grown;
  }
  return reach == mask;
}

void scan_scalar(const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
                 std::span<std::uint64_t> histogram) noexcept {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (is_inscribed_mask(g, mask)) ++histogram[static_cast<std::size_t>(std::popcount(mask))];
  }
}

void classify_scalar(const GridGeometry& g, std::span<const std::uint64_t> masks,
                     std::span<std::uint8_t> out) noexcept {
  for (std::size_t i = 0; i < masks.size(); ++i) out[i] = is_inscribed_mask(g, masks[i]) ? 1 : 0;
}

void scan(Isa isa, const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
          std::span<std::uint64_t> histogram) noexcept {
  if (isa == Isa::avx2 && avx2_available()) {
    scan_avx2(g, begin, end, histogram);
  } else {
    scan_scalar(g, begin, end, histogram);
  }
}

void classify(Isa isa, const GridGeometry& g, std::span<const std::uint64_t> masks,
              std::span<std::uint8_t> out) noexcept {
  if (isa == Isa::avx2 && avx2_available()) {
    classify_avx2(g, masks, out);
  } else {
    classify_scalar(g, masks, out);
  }
}

}  // namespace inscribed::kernels
