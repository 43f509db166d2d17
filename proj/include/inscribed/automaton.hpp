#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "inscribed/rowconfig.hpp"
#include "inscribed/state.hpp"

namespace inscribed {

// Default ceiling on the number of automaton states a build may produce.
inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

// The reachable automaton for width b. Immutable once built.
//
// States are numbered in breadth-first discovery order from the initial state,
// with the alphabet scanned in ascending RowConfig order. Transitions live in a
// flat table of states() x alphabet_size() entries, kNoTransition marking the
// pairs where the transition function is undefined.
class Automaton {
 public:
  static constexpr std::int32_t kNoTransition = -1;

  Automaton(int width, std::vector<AutomatonState> states, std::vector<std::int32_t> table);

  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<AutomatonState>& states() const noexcept { return states_; }
  const AutomatonState& state(std::size_t i) const { return states_.at(i); }

  bool accepting(std::size_t i) const { return accepting_.at(i) != 0; }
  std::vector<std::size_t> accepting_indices() const;

  // Target of state i on row u, if defined.
  std::optional<std::size_t> target(std::size_t i, const RowConfig& u) const;
  std::int32_t raw_target(std::size_t i, std::size_t letter_rank) const noexcept {
    return table_[i * alphabet_size_ + letter_rank];
  }
  std::size_t transition_count() const noexcept;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  int width_;
  std::size_t alphabet_size_;
  std::vector<AutomatonState> states_;
  std::vector<std::int32_t> table_;
  std::vector<std::uint8_t> accepting_;
};

struct BuildOptions {
  std::size_t max_states = kDefaultMaxStates;
  // Worker threads used to expand each breadth-first level. The result does
  // not depend on this value.
  unsigned threads = 1;
};

// Breadth-first closure of the initial state under step(). Throws
// InvalidArgument for b outside [1, kMaxWidth] and ResourceLimitExceeded when
// the state count given by state_count_formula(b) exceeds the ceiling.
Automaton build(int b, const BuildOptions& options = {});

// 1 + sum over k in [1, 2^b) of C(f(k)) * 2^[k even] * 2^[k < 2^(b-1)], with
// f(k) the number of runs of ones in k. Evaluated by a dynamic program over
// the bits of k so that b up to 62 is cheap.
mpz_class state_count_formula(int b);

mpz_class catalan(unsigned m);
unsigned runs_of_ones(std::uint64_t k);

// Versioned JSON document; see README for the schema.
inline constexpr int kSerializationVersion = 1;
std::string serialize(const Automaton& a);
// Throws MalformedInput, VersionMismatch or InvariantViolation.
Automaton deserialize(const std::string& text);

// Graphviz description: one node per state, one edge per defined transition.
std::string export_dot(const Automaton& a);

}  // namespace inscribed
