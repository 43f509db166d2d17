#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "inscribed/kernels/subset_scan.hpp"
#include "inscribed/rowconfig.hpp"

namespace inscribed {

// Brute-force ground truth: enumerate every subset of the b x h grid and keep
// the inscribed polyominoes. Nothing here depends on the automaton.

inline constexpr int kOracleMaxCells = 24;

// Row-major occupancy of a b x h grid; row 0 is the first row of the stack.
struct GridSubset {
  int b = 0;
  int h = 0;
  std::vector<std::uint8_t> cells;

  GridSubset(int width, int height);
  // Cell (r, c) is bit r * b + c.
  static GridSubset from_mask(int width, int height, std::uint64_t mask);

  bool at(int row, int col) const { return cells[static_cast<std::size_t>(row * b + col)] != 0; }
  void set(int row, int col, bool filled = true) {
    cells[static_cast<std::size_t>(row * b + col)] = filled ? 1 : 0;
  }
};

// Nonempty, 4-connected, and touching all four sides. Breadth-first search
// over cells; independent of the bitmask kernels.
bool is_inscribed_polyomino(const GridSubset& s);

struct OracleOptions {
  unsigned threads = 1;
  kernels::Isa isa = kernels::best_isa();
  int max_cells = kOracleMaxCells;
};

// Throws ResourceLimitExceeded when b * h > options.max_cells.
std::uint64_t brute_force_count(int b, int h, const OracleOptions& options = {});
// area -> number of inscribed polyominoes with that many cells.
std::map<int, std::uint64_t> brute_force_area_histogram(int b, int h, const OracleOptions& options = {});

// Up to `limit` inscribed polyominoes, in increasing mask order, as stacks of
// rows (first row of the grid first).
std::vector<std::vector<RowConfig>> sample_accepted_stacks(int b, int h, std::size_t limit,
                                                           const OracleOptions& options = {});

}  // namespace inscribed
