#include "inscribed/transition.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "inscribed/errors.hpp"

namespace inscribed {

namespace {

// Letters of the intermediate word are bounded by b + ceil(b/2).
constexpr int kLetterCapacity = kMaxWidth + kMaxWidth / 2 + 2;

class LetterUnion {
 public:
  LetterUnion() { std::iota(parent_.begin(), parent_.end(), std::uint8_t{0}); }

  std::uint8_t find(std::uint8_t a) noexcept {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::uint8_t a, std::uint8_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::array<std::uint8_t, kLetterCapacity> parent_{};
};

void check_same_width(const LabeledWord& word, const RowConfig& u) {
  if (word.width() != u.width()) throw InvalidArgument("row width does not match state width");
}

}  // namespace

bool continuation_allowed(const LabeledWord& word, const RowConfig& u) noexcept {
  if (word.width() != u.width()) return false;
  // Bit a is set when component a has been seen / continued.
  unsigned present = 0;
  unsigned continued = 0;
  for (int i = 0; i < word.width(); ++i) {
    const unsigned a = word[i];
    if (a == 0) continue;
    present |= 1u << a;
    if (u.cell(i)) continued |= 1u << a;
  }
  return present == continued;
}

LabelSequence vertical_connexity(const LabeledWord& word, const RowConfig& u) {
  check_same_width(word, u);
  if (!continuation_allowed(word, u)) {
    throw InvalidArgument("row " + u.to_string() + " loses a component of " + word.to_string());
  }
  LabelSequence x(word.width());
  int highest = word.component_count();
  for (int i = 0; i < word.width(); ++i) {
    if (!u.cell(i)) continue;
    if (word[i] != 0) {
      x.set(i, word[i]);
    } else {
      x.set(i, ++highest);
    }
    highest = std::max<int>(highest, x[i]);
  }
  return x;
}

LabeledWord horizontal_connexity(const LabelSequence& x) {
  LetterUnion sets;
  const int b = x.width();
  for (int i = 0; i + 1 < b; ++i) {
    if (x[i] != 0 && x[i + 1] != 0) sets.unite(x[i], x[i + 1]);
  }
  // After the union every run is labelled by its set's root; renumbering the
  // roots by first occurrence numbers the sets by their leftmost run.
  LabelSequence roots(b);
  for (int i = 0; i < b; ++i) {
    if (x[i] != 0) roots.set(i, sets.find(x[i]));
  }
  return canonical_unchecked(roots);
}

std::optional<AutomatonState> step(const AutomatonState& state, const RowConfig& u) {
  check_same_width(state.word, u);
  if (!continuation_allowed(state.word, u)) return std::nullopt;
  return AutomatonState{horizontal_connexity(vertical_connexity(state.word, u)),
                        state.left || u.touches_left(), state.right || u.touches_right()};
}

}  // namespace inscribed
