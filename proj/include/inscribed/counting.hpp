#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "inscribed/automaton.hpp"
#include "inscribed/poly.hpp"
#include "inscribed/rowconfig.hpp"

namespace inscribed {

// Number of inscribed polyominoes per height, optionally refined by area.
//
// counts[0] is 1 by convention: it is the empty-stack term that makes the
// series line up with the generating function's constant term, not a
// polyomino. The same holds for area_counts[0] = 1.
struct SeriesTable {
  int b = 0;
  std::vector<mpz_class> counts;
  // area_counts[h] is a polynomial in q; the coefficient of q^n counts the
  // inscribed polyominoes of height h and area n. Empty unless requested.
  std::vector<Polynomial> area_counts;

  bool has_area() const noexcept { return !area_counts.empty(); }
};

// The automaton aggregated by (source, target): the number of letters, split
// by filled-cell count, that carry one state to another.
struct TransferMatrix {
  struct Entry {
    std::uint32_t source;
    std::uint32_t target;
    std::uint64_t letters;
    // by_area[n]: letters with n filled cells, n = 0..b.
    std::vector<std::uint32_t> by_area;
  };
  int b = 0;
  std::size_t dimension = 0;
  // Sorted by (target, source).
  std::vector<Entry> entries;
};

TransferMatrix transfer_matrix(const Automaton& a);

// Accepted stacks of every length h = 0..h_max, from the state-occupancy
// vector iterated h times.
SeriesTable count_series(const Automaton& a, std::size_t h_max);

// count_series with every letter weighted by q^(filled cells).
SeriesTable count_area_series(const Automaton& a, std::size_t h_max);

// Runs the stack from the initial state, first element first. Throws
// InvalidArgument if a row has the wrong width.
bool accepts(const Automaton& a, std::span<const RowConfig> stack);

}  // namespace inscribed
