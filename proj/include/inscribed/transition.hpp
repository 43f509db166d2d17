#pragma once

#include <optional>

#include "inscribed/rowconfig.hpp"
#include "inscribed/state.hpp"

namespace inscribed {

// Every component of `word` has a cell directly below it in `u`.
bool continuation_allowed(const LabeledWord& word, const RowConfig& u) noexcept;

// Carries labels down into the cells of `u`. Cells with nothing above get a
// fresh label one above the largest label seen so far (in `word` and in the
// already written prefix). The result may break separation and may exceed
// ceil(b/2). Throws InvalidArgument if continuation_allowed is false.
LabelSequence vertical_connexity(const LabeledWord& word, const RowConfig& u);

// Merges maximal nonzero runs of `x` that share a letter (transitively) and
// numbers the merged sets 1, 2, ... by their leftmost run.
LabeledWord horizontal_connexity(const LabelSequence& x);

// The transition function. Empty when a component of the state would be lost.
std::optional<AutomatonState> step(const AutomatonState& state, const RowConfig& u);

}  // namespace inscribed
