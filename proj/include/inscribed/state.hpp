#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inscribed/rowconfig.hpp"

namespace inscribed {

// Largest component label a valid word of width b may carry: ceil(b / 2).
constexpr int max_label(int b) noexcept { return (b + 1) / 2; }

// Fixed-capacity sequence of component labels with no constraints on the
// values. Used for raw input and for the intermediate word of a transition,
// which may break the separation condition and exceed max_label.
class LabelSequence {
 public:
  LabelSequence() = default;
  // All-zero sequence of the given width.
  explicit LabelSequence(int width);
  LabelSequence(std::initializer_list<int> labels);
  explicit LabelSequence(std::span<const int> labels);

  // Digits "10203", or comma separated labels "1,0,12" for labels >= 10.
  static LabelSequence parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint8_t operator[](int i) const noexcept { return labels_[static_cast<std::size_t>(i)]; }
  void set(int i, int label);
  int max() const noexcept;
  bool all_zero() const noexcept { return max() == 0; }

  // Digits when every label is < 10, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const LabelSequence& a, const LabelSequence& b) noexcept {
    return a.width_ == b.width_ && a.labels_ == b.labels_;
  }
  friend auto operator<=>(const LabelSequence& a, const LabelSequence& b) noexcept {
    // Lexicographic; widths compared first.
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  int width_ = 0;
  std::array<std::uint8_t, kMaxWidth> labels_{};
};

bool satisfies_separation(const LabelSequence& w) noexcept;
bool satisfies_non_crossing(const LabelSequence& w) noexcept;

// A labelled row in canonical form: nonzero labels first appear, left to
// right, as 1, 2, 3, ... and the separation and non-crossing conditions hold.
// Only canonicalize() and the factories below produce one.
class LabeledWord {
 public:
  static LabeledWord zeros(int width);
  // Parses and requires the text to already be canonical.
  static LabeledWord parse(std::string_view text);

  const LabelSequence& labels() const noexcept { return seq_; }
  int width() const noexcept { return seq_.width(); }
  std::uint8_t operator[](int i) const noexcept { return seq_[i]; }
  int component_count() const noexcept { return seq_.max(); }
  std::string to_string() const { return seq_.to_string(); }

  friend bool operator==(const LabeledWord&, const LabeledWord&) = default;
  friend auto operator<=>(const LabeledWord&, const LabeledWord&) = default;

 private:
  explicit LabeledWord(LabelSequence seq) : seq_(seq) {}
  friend LabeledWord canonicalize(const LabelSequence& w);
  friend LabeledWord canonical_unchecked(const LabelSequence& w) noexcept;

  LabelSequence seq_;
};

// First-occurrence renumbering. Throws InvalidArgument if w breaks
// separation, non-crossing, or the ceil(b/2) label bound.
LabeledWord canonicalize(const LabelSequence& w);

// Renumbering without validation, for callers that already guarantee the
// conditions (the transition function).
LabeledWord canonical_unchecked(const LabelSequence& w) noexcept;

// True iff w and v have the same zero positions and the same label blocks up
// to a permutation of labels.
bool are_equivalent(const LabelSequence& w, const LabelSequence& v);

// Automaton state (w, l, r).
struct AutomatonState {
  LabeledWord word;
  bool left = false;
  bool right = false;

  static AutomatonState initial(int width) { return {LabeledWord::zeros(width), false, false}; }
  // Parses "(10203,T,F)".
  static AutomatonState parse(std::string_view text);

  int width() const noexcept { return word.width(); }
  // "(10203,T,T)"
  std::string to_string() const;

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
  friend auto operator<=>(const AutomatonState&, const AutomatonState&) = default;
};

// Empty row, inscription, separation and non-crossing conditions, plus the
// label bound. Canonical form is not required.
bool is_valid_triplet(const LabelSequence& w, bool left, bool right) noexcept;

// Builds a state after checking is_valid_triplet; the word is canonicalized.
AutomatonState make_state(const LabelSequence& w, bool left, bool right);

// Single component touching both sides.
bool is_accepting(const AutomatonState& s) noexcept;

// Mixed-radix integer key, unique per canonical state of a given width.
std::uint64_t state_key(const AutomatonState& s) noexcept;

// Every canonical valid triplet of width b, the initial state first, ordered
// by zero/nonzero mask, then label pattern, then flags. Generated
// structurally: each mask contributes the non-crossing partitions of its runs.
std::vector<AutomatonState> enumerate_valid_states(int b);

}  // namespace inscribed
