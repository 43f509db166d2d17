#pragma once

// Brute-force inner loop of the oracle: classify every subset of a small
// b x h grid as inscribed polyomino or not. A subset is a bitmask with cell
// (row r, column c) at bit r * b + c. Every kernel variant must produce the
// same histogram as the scalar reference; the AVX2 variant classifies four
// masks per iteration.

#include <cstdint>
#include <span>
#include <string_view>

namespace inscribed::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// True when the running CPU and the build both support the AVX2 kernel.
bool avx2_available() noexcept;
// Fastest variant usable on this machine.
Isa best_isa() noexcept;

struct GridGeometry {
  int b = 0;
  int h = 0;
  std::uint64_t full = 0;
  std::uint64_t first_row = 0;
  std::uint64_t last_row = 0;
  std::uint64_t first_col = 0;
  std::uint64_t last_col = 0;

  // Requires b, h >= 1 and b * h <= 63.
  static GridGeometry make(int b, int h);
};

// Scalar reference for a single mask: nonempty, edge-connected, and touching
// all four sides.
bool is_inscribed_mask(const GridGeometry& g, std::uint64_t mask) noexcept;

// Adds, for every mask in [begin, end) that is an inscribed polyomino, one to
// histogram[popcount(mask)]. histogram must have at least b * h + 1 entries.
void scan_scalar(const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
                 std::span<std::uint64_t> histogram) noexcept;
void scan_avx2(const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
               std::span<std::uint64_t> histogram) noexcept;

// Per-mask classification of an arbitrary batch (out[i] = 1 when inscribed).
void classify_scalar(const GridGeometry& g, std::span<const std::uint64_t> masks,
                     std::span<std::uint8_t> out) noexcept;
void classify_avx2(const GridGeometry& g, std::span<const std::uint64_t> masks,
                   std::span<std::uint8_t> out) noexcept;

// Dispatch on `isa`; an unavailable variant falls back to scalar.
void scan(Isa isa, const GridGeometry& g, std::uint64_t begin, std::uint64_t end,
          std::span<std::uint64_t> histogram) noexcept;
void classify(Isa isa, const GridGeometry& g, std::span<const std::uint64_t> masks,
              std::span<std::uint8_t> out) noexcept;

}  // namespace inscribed::kernels
