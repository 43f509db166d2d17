#include "inscribed/counting.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "inscribed/errors.hpp"

namespace inscribed {

TransferMatrix transfer_matrix(const Automaton& a) {
  TransferMatrix m;
  m.b = a.width();
  m.dimension = a.size();
  const std::vector<RowConfig> alphabet = enumerate_alphabet(a.width());
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_target;
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      const std::int32_t t = a.raw_target(s, k);
      if (t == Automaton::kNoTransition) continue;
      auto& areas = by_target[static_cast<std::uint32_t>(t)];
      areas.resize(static_cast<std::size_t>(a.width()) + 1, 0);
      ++areas[static_cast<std::size_t>(alphabet[k].filled_count())];
    }
    for (auto& [t, areas] : by_target) {
      std::uint64_t total = 0;
      for (std::uint32_t n : areas) total += n;
      m.entries.push_back({static_cast<std::uint32_t>(s), t, total, std::move(areas)});
    }
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const auto& x, const auto& y) {
    return std::tie(x.target, x.source) < std::tie(y.target, y.source);
  });
  return m;
}

SeriesTable count_series(const Automaton& a, std::size_t h_max) {
  const TransferMatrix m = transfer_matrix(a);
  const std::vector<std::size_t> accepting = a.accepting_indices();
  SeriesTable table;
  table.b = a.width();
  table.counts.reserve(h_max + 1);
  table.counts.emplace_back(1);

  std::vector<mpz_class> current(m.dimension);
  std::vector<mpz_class> next(m.dimension);
  current[0] = 1;
  for (std::size_t h = 1; h <= h_max; ++h) {
    for (mpz_class& v : next) v = 0;
    for (const auto& e : m.entries) {
      const mpz_class& w = current[e.source];
      if (sgn(w) == 0) continue;
      mpz_addmul_ui(next[e.target].get_mpz_t(), w.get_mpz_t(), e.letters);
    }
    std::swap(current, next);
    mpz_class total = 0;
    for (std::size_t f : accepting) total += current[f];
    table.counts.push_back(std::move(total));
  }
  return table;
}

SeriesTable count_area_series(const Automaton& a, std::size_t h_max) {
  const TransferMatrix m = transfer_matrix(a);
  const std::vector<std::size_t> accepting = a.accepting_indices();
  SeriesTable table;
  table.b = a.width();
  table.counts.emplace_back(1);
  table.area_counts.push_back(Polynomial::constant(1));

  // Occupancy per state as a dense coefficient vector in q. Every stack of
  // height h has area at most b*h.
  const std::size_t b = static_cast<std::size_t>(a.width());
  std::vector<std::vector<mpz_class>> current(m.dimension);
  current[0] = {mpz_class(1)};
  for (std::size_t h = 1; h <= h_max; ++h) {
    std::vector<std::vector<mpz_class>> next(m.dimension, std::vector<mpz_class>(b * h + 1));
    for (const auto& e : m.entries) {
      const std::vector<mpz_class>& w = current[e.source];
      std::vector<mpz_class>& out = next[e.target];
      for (std::size_t n = 0; n < e.by_area.size(); ++n) {
        const std::uint32_t mult = e.by_area[n];
        if (mult == 0) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (sgn(w[i]) == 0) continue;
          mpz_addmul_ui(out[i + n].get_mpz_t(), w[i].get_mpz_t(), mult);
        }
      }
    }
    current = std::move(next);
    Polynomial total;
    for (std::size_t f : accepting) total += Polynomial(current[f]);
    mpz_class sum = 0;
    for (const mpz_class& c : total.coefficients()) sum += c;
    table.counts.push_back(std::move(sum));
    table.area_counts.push_back(std::move(total));
  }
  return table;
}

bool accepts(const Automaton& a, std::span<const RowConfig> stack) {
  std::size_t state = 0;
  for (const RowConfig& row : stack) {
    if (row.width() != a.width()) {
      throw InvalidArgument("stack row " + row.to_string() + " does not have width " +
                            std::to_string(a.width()));
    }
    const auto next = a.target(state, row);
    if (!next) return false;
    state = *next;
  }
  return a.accepting(state);
}

}  // namespace inscribed
