#include "inscribed/automaton.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>
#include <unordered_map>

#include "inscribed/errors.hpp"
#include "inscribed/transition.hpp"

namespace inscribed {

Automaton::Automaton(int width, std::vector<AutomatonState> states, std::vector<std::int32_t> table)
    : width_(width),
      alphabet_size_((std::size_t{1} << width) - 1),
      states_(std::move(states)),
      table_(std::move(table)) {
  check_width(width);
  if (table_.size() != states_.size() * alphabet_size_) {
    throw InvalidArgument("transition table size does not match states x alphabet");
  }
  accepting_.reserve(states_.size());
  for (const AutomatonState& s : states_) accepting_.push_back(is_accepting(s) ? 1 : 0);
}

std::vector<std::size_t> Automaton::accepting_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < accepting_.size(); ++i) {
    if (accepting_[i] != 0) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> Automaton::target(std::size_t i, const RowConfig& u) const {
  if (u.width() != width_) throw InvalidArgument("row width does not match automaton width");
  const std::int32_t t = raw_target(i, u.rank());
  if (t == kNoTransition) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::size_t Automaton::transition_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](std::int32_t t) { return t != kNoTransition; }));
}

namespace {

// Successors of one block of the frontier, row-major by (state, letter).
void expand_block(const std::vector<AutomatonState>& states, std::size_t first, std::size_t last,
                  const std::vector<RowConfig>& alphabet,
                  std::vector<std::optional<AutomatonState>>& out, unsigned threads) {
  const std::size_t letters = alphabet.size();
  out.assign((last - first) * letters, std::nullopt);
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      for (std::size_t k = 0; k < letters; ++k) {
        out[(i - first) * letters + k] = step(states[i], alphabet[k]);
      }
    }
  };
  const std::size_t count = last - first;
  if (threads <= 1 || count < 2) {
    work(first, last);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t from = first + count * w / workers;
    const std::size_t to = first + count * (w + 1) / workers;
    pool.emplace_back(work, from, to);
  }
}

}  // namespace

Automaton build(int b, const BuildOptions& options) {
  check_width(b);
  if (state_count_formula(b) > options.max_states) {
    throw ResourceLimitExceeded("width " + std::to_string(b) + " projects " +
                                state_count_formula(b).get_str() + " states, above the ceiling of " +
                                std::to_string(options.max_states));
  }
  const std::vector<RowConfig> alphabet = enumerate_alphabet(b);
  const std::size_t letters = alphabet.size();

  std::vector<AutomatonState> states{AutomatonState::initial(b)};
  std::unordered_map<std::uint64_t, std::int32_t> index{{state_key(states[0]), 0}};
  std::vector<std::int32_t> table;

  constexpr std::size_t kBlock = 512;
  std::vector<std::optional<AutomatonState>> successors;
  // States are expanded in index order; discovery appends to `states`, so
  // this loop is the breadth-first traversal.
  for (std::size_t first = 0; first < states.size();) {
    const std::size_t last = std::min(states.size(), first + kBlock);
    expand_block(states, first, last, alphabet, successors, options.threads);
    table.resize(last * letters, Automaton::kNoTransition);
    for (std::size_t i = first; i < last; ++i) {
      for (std::size_t k = 0; k < letters; ++k) {
        const auto& next = successors[(i - first) * letters + k];
        if (!next) continue;
        const auto [it, inserted] =
            index.try_emplace(state_key(*next), static_cast<std::int32_t>(states.size()));
        if (inserted) {
          if (states.size() >= options.max_states) {
            throw ResourceLimitExceeded("state ceiling of " + std::to_string(options.max_states) +
                                        " reached");
          }
          states.push_back(*next);
        }
        table[i * letters + k] = it->second;
      }
    }
    first = last;
  }
  return Automaton(b, std::move(states), std::move(table));
}

unsigned runs_of_ones(std::uint64_t k) {
  // A run starts at every set bit whose higher neighbour is clear.
  return static_cast<unsigned>(std::popcount(k & ~(k << 1)));
}

mpz_class catalan(unsigned m) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * m, m);
  c /= m + 1;
  return c;
}

mpz_class state_count_formula(int b) {
  if (b < 0 || b > 62) throw InvalidArgument("state_count_formula needs 0 <= b <= 62");
  if (b == 0) return 1;
  // count[first][current][runs]: number of bit strings read so far (most
  // significant bit first) with the given first bit, current bit and runs.
  const int max_runs = (b + 1) / 2;
  using Row = std::vector<mpz_class>;
  std::array<std::array<Row, 2>, 2> count;
  for (auto& by_first : count) {
    for (auto& by_current : by_first) by_current.assign(static_cast<std::size_t>(max_runs + 1), 0);
  }
  count[0][0][0] = 1;
  count[1][1][1] = 1;
  for (int pos = 1; pos < b; ++pos) {
    std::array<std::array<Row, 2>, 2> next;
    for (auto& by_first : next) {
      for (auto& by_current : by_first) by_current.assign(static_cast<std::size_t>(max_runs + 1), 0);
    }
    for (int first = 0; first < 2; ++first) {
      for (int current = 0; current < 2; ++current) {
        for (int runs = 0; runs <= max_runs; ++runs) {
          const mpz_class& n = count[first][current][static_cast<std::size_t>(runs)];
          if (n == 0) continue;
          next[first][0][static_cast<std::size_t>(runs)] += n;
          const int opened = current == 0 ? runs + 1 : runs;
          if (opened <= max_runs) next[first][1][static_cast<std::size_t>(opened)] += n;
        }
      }
    }
    count = std::move(next);
  }
  mpz_class total = 1;
  for (int first = 0; first < 2; ++first) {
    for (int last = 0; last < 2; ++last) {
      for (int runs = 1; runs <= max_runs; ++runs) {
        const mpz_class& n = count[first][last][static_cast<std::size_t>(runs)];
        if (n == 0) continue;
        // First bit clear: k < 2^(b-1). Last bit clear: k even.
        const int factor = (first == 0 ? 2 : 1) * (last == 0 ? 2 : 1);
        total += n * catalan(static_cast<unsigned>(runs)) * factor;
      }
    }
  }
  return total;
}

}  // namespace inscribed
