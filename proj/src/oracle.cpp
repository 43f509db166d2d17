#include "inscribed/oracle.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "inscribed/errors.hpp"

namespace inscribed {

GridSubset::GridSubset(int width, int height) : b(width), h(height) {
  if (width < 1 || height < 1) throw InvalidArgument("grid dimensions must be positive");
  cells.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

GridSubset GridSubset::from_mask(int width, int height, std::uint64_t mask) {
  GridSubset s(width, height);
  for (std::size_t i = 0; i < s.cells.size(); ++i) s.cells[i] = ((mask >> i) & 1u) != 0 ? 1 : 0;
  return s;
}

bool is_inscribed_polyomino(const GridSubset& s) {
  int filled = 0;
  int start_row = -1;
  int start_col = -1;
  bool top = false;
  bool bottom = false;
  bool left = false;
  bool right = false;
  for (int r = 0; r < s.h; ++r) {
    for (int c = 0; c < s.b; ++c) {
      if (!s.at(r, c)) continue;
      ++filled;
      if (start_row < 0) {
        start_row = r;
        start_col = c;
      }
      top = top || r == 0;
      bottom = bottom || r == s.h - 1;
      left = left || c == 0;
      right = right || c == s.b - 1;
    }
  }
  if (filled == 0 || !(top && bottom && left && right)) return false;

  std::vector<std::uint8_t> seen(s.cells.size(), 0);
  std::deque<std::pair<int, int>> queue{{start_row, start_col}};
  seen[static_cast<std::size_t>(start_row * s.b + start_col)] = 1;
  int visited = 0;
  while (!queue.empty()) {
    const auto [r, c] = queue.front();
    queue.pop_front();
    ++visited;
    constexpr int dr[] = {-1, 1, 0, 0};
    constexpr int dc[] = {0, 0, -1, 1};
    for (int d = 0; d < 4; ++d) {
      const int nr = r + dr[d];
      const int nc = c + dc[d];
      if (nr < 0 || nr >= s.h || nc < 0 || nc >= s.b || !s.at(nr, nc)) continue;
      auto& mark = seen[static_cast<std::size_t>(nr * s.b + nc)];
      if (mark != 0) continue;
      mark = 1;
      queue.emplace_back(nr, nc);
    }
  }
  return visited == filled;
}

namespace {

std::vector<std::uint64_t> histogram_by_area(int b, int h, const OracleOptions& options) {
  if (b < 1 || h < 1) throw InvalidArgument("grid dimensions must be positive");
  if (b * h > options.max_cells) {
    throw ResourceLimitExceeded("oracle limited to " + std::to_string(options.max_cells) + " cells, " +
                                std::to_string(b) + "x" + std::to_string(h) + " requested");
  }
  const kernels::GridGeometry g = kernels::GridGeometry::make(b, h);
  const std::uint64_t end = g.full + 1;
  const std::size_t bins = static_cast<std::size_t>(b * h) + 1;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, 64));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t from = end * w / workers;
      const std::uint64_t to = end * (w + 1) / workers;
      pool.emplace_back([&, w, from, to] { kernels::scan(options.isa, g, from, to, partial[w]); });
    }
  }
  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < bins; ++i) total[i] += p[i];
  }
  return total;
}

}  // namespace

std::uint64_t brute_force_count(int b, int h, const OracleOptions& options) {
  std::uint64_t total = 0;
  for (std::uint64_t n : histogram_by_area(b, h, options)) total += n;
  return total;
}

std::map<int, std::uint64_t> brute_force_area_histogram(int b, int h, const OracleOptions& options) {
  const std::vector<std::uint64_t> bins = histogram_by_area(b, h, options);
  std::map<int, std::uint64_t> out;
  for (std::size_t n = 0; n < bins.size(); ++n) {
    if (bins[n] != 0) out.emplace(static_cast<int>(n), bins[n]);
  }
  return out;
}

std::vector<std::vector<RowConfig>> sample_accepted_stacks(int b, int h, std::size_t limit,
                                                           const OracleOptions& options) {
  if (b < 1 || h < 1) throw InvalidArgument("grid dimensions must be positive");
  if (b * h > options.max_cells) {
    throw ResourceLimitExceeded("oracle limited to " + std::to_string(options.max_cells) + " cells");
  }
  check_width(b);
  const kernels::GridGeometry g = kernels::GridGeometry::make(b, h);
  std::vector<std::vector<RowConfig>> out;
  for (std::uint64_t mask = 0; mask <= g.full && out.size() < limit; ++mask) {
    if (!kernels::is_inscribed_mask(g, mask)) continue;
    std::vector<RowConfig> stack;
    stack.reserve(static_cast<std::size_t>(h));
    for (int r = 0; r < h; ++r) {
      std::uint32_t bits = 0;
      for (int c = 0; c < b; ++c) {
        if (((mask >> (r * b + c)) & 1u) != 0) bits |= std::uint32_t{1} << (b - 1 - c);
      }
      stack.emplace_back(b, bits);
    }
    out.push_back(std::move(stack));
  }
  return out;
}

}  // namespace inscribed
