#include "inscribed/state.hpp"

#include <algorithm>
#include <charconv>

#include "inscribed/errors.hpp"

namespace inscribed {

namespace {

void check_sequence_width(int width) {
  if (width < 0 || width > kMaxWidth) {
    throw InvalidArgument("label sequence width must be in [0, " + std::to_string(kMaxWidth) +
                          "], got " + std::to_string(width));
  }
}

}  // namespace

LabelSequence::LabelSequence(int width) : width_(width) { check_sequence_width(width); }

LabelSequence::LabelSequence(std::initializer_list<int> labels)
    : LabelSequence(std::span<const int>(labels.begin(), labels.size())) {}

LabelSequence::LabelSequence(std::span<const int> labels)
    : LabelSequence(static_cast<int>(labels.size())) {
  for (int i = 0; i < width_; ++i) set(i, labels[static_cast<std::size_t>(i)]);
}

void LabelSequence::set(int i, int label) {
  if (i < 0 || i >= width_) throw InvalidArgument("label position out of range");
  if (label < 0 || label > 255) throw InvalidArgument("label out of range");
  labels_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(label);
}

int LabelSequence::max() const noexcept {
  int m = 0;
  for (int i = 0; i < width_; ++i) m = std::max<int>(m, labels_[static_cast<std::size_t>(i)]);
  return m;
}

LabelSequence LabelSequence::parse(std::string_view text) {
  std::vector<int> labels;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view field = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InvalidArgument("bad label '" + std::string(field) + "'");
      }
      labels.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidArgument("bad label word '" + std::string(text) + "'");
      labels.push_back(c - '0');
    }
  }
  return LabelSequence(std::span<const int>(labels));
}

std::string LabelSequence::to_string() const {
  const bool wide = max() >= 10;
  std::string out;
  for (int i = 0; i < width_; ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string((*this)[i]);
  }
  return out;
}

bool satisfies_separation(const LabelSequence& w) noexcept {
  for (int i = 0; i + 1 < w.width(); ++i) {
    if (w[i] != 0 && w[i + 1] != 0 && w[i] != w[i + 1]) return false;
  }
  return true;
}

// Balanced-bracket test: a repeated label must be on top of the stack of
// still-open labels, and a label is closed at its last occurrence.
bool satisfies_non_crossing(const LabelSequence& w) noexcept {
  std::array<int, 256> last{};
  last.fill(-1);
  for (int i = 0; i < w.width(); ++i) last[w[i]] = i;
  std::array<bool, 256> seen{};
  std::array<std::uint8_t, kMaxWidth> stack{};
  int top = 0;
  for (int i = 0; i < w.width(); ++i) {
    const std::uint8_t a = w[i];
    if (a == 0) continue;
    if (seen[a]) {
      if (top == 0 || stack[static_cast<std::size_t>(top - 1)] != a) return false;
    } else {
      seen[a] = true;
      stack[static_cast<std::size_t>(top++)] = a;
    }
    if (last[a] == i) --top;
  }
  return true;
}

LabeledWord canonical_unchecked(const LabelSequence& w) noexcept {
  std::array<std::uint8_t, 256> rename{};
  std::uint8_t next = 0;
  LabelSequence out = w;
  for (int i = 0; i < w.width(); ++i) {
    const std::uint8_t a = w[i];
    if (a == 0) continue;
    if (rename[a] == 0) rename[a] = ++next;
    out.set(i, rename[a]);
  }
  return LabeledWord(out);
}

LabeledWord canonicalize(const LabelSequence& w) {
  if (w.max() > max_label(w.width())) {
    throw InvalidArgument("label exceeds ceil(b/2) in " + w.to_string());
  }
  if (!satisfies_separation(w)) throw InvalidArgument("separation violated in " + w.to_string());
  if (!satisfies_non_crossing(w)) throw InvalidArgument("non-crossing violated in " + w.to_string());
  return canonical_unchecked(w);
}

bool are_equivalent(const LabelSequence& w, const LabelSequence& v) {
  return canonicalize(w) == canonicalize(v);
}

LabeledWord LabeledWord::zeros(int width) { return LabeledWord(LabelSequence(width)); }

LabeledWord LabeledWord::parse(std::string_view text) {
  const LabelSequence seq = LabelSequence::parse(text);
  LabeledWord word = canonicalize(seq);
  if (word.labels() != seq) {
    throw InvalidArgument("label word '" + std::string(text) + "' is not canonical");
  }
  return word;
}

bool is_valid_triplet(const LabelSequence& w, bool left, bool right) noexcept {
  const int b = w.width();
  if (w.max() > max_label(b)) return false;
  if (w.all_zero() && (left || right)) return false;
  if (b > 0 && w[0] != 0 && !left) return false;
  if (b > 0 && w[b - 1] != 0 && !right) return false;
  return satisfies_separation(w) && satisfies_non_crossing(w);
}

AutomatonState make_state(const LabelSequence& w, bool left, bool right) {
  if (!is_valid_triplet(w, left, right)) {
    throw InvalidArgument("invalid state triplet (" + w.to_string() + "," + (left ? "T" : "F") +
                          "," + (right ? "T" : "F") + ")");
  }
  return AutomatonState{canonical_unchecked(w), left, right};
}

bool is_accepting(const AutomatonState& s) noexcept {
  const LabelSequence& w = s.word.labels();
  return s.left && s.right && w.max() == 1;
}

std::string AutomatonState::to_string() const {
  return "(" + word.to_string() + "," + (left ? "T" : "F") + "," + (right ? "T" : "F") + ")";
}

AutomatonState AutomatonState::parse(std::string_view text) {
  if (text.size() < 7 || text.front() != '(' || text.back() != ')') {
    throw InvalidArgument("bad state '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(1, text.size() - 2);
  const std::size_t comma_r = body.rfind(',');
  const std::size_t comma_l = body.rfind(',', comma_r - 1);
  if (comma_r == std::string_view::npos || comma_l == std::string_view::npos) {
    throw InvalidArgument("bad state '" + std::string(text) + "'");
  }
  auto flag = [&](std::string_view f) {
    if (f == "T") return true;
    if (f == "F") return false;
    throw InvalidArgument("bad flag in state '" + std::string(text) + "'");
  };
  const LabelSequence word = LabelSequence::parse(body.substr(0, comma_l));
  return make_state(word, flag(body.substr(comma_l + 1, comma_r - comma_l - 1)),
                    flag(body.substr(comma_r + 1)));
}

std::uint64_t state_key(const AutomatonState& s) noexcept {
  const std::uint64_t radix = static_cast<std::uint64_t>(max_label(s.width())) + 1;
  std::uint64_t key = 0;
  for (int i = 0; i < s.width(); ++i) key = key * radix + s.word[i];
  return (key << 2) | (s.left ? 2u : 0u) | (s.right ? 1u : 0u);
}

namespace {

// Appends to `out` every restricted growth string of length runs.size() that
// is non-crossing, then expands each into a word over the mask's runs.
void label_runs(int b, const std::vector<std::pair<int, int>>& runs, std::vector<int>& rgs,
                int current_max, std::vector<LabelSequence>& out) {
  if (rgs.size() == runs.size()) {
    LabelSequence w(b);
    for (std::size_t j = 0; j < runs.size(); ++j) {
      for (int i = runs[j].first; i < runs[j].second; ++i) w.set(i, rgs[j]);
    }
    if (satisfies_non_crossing(w)) out.push_back(w);
    return;
  }
  for (int label = 1; label <= current_max + 1; ++label) {
    rgs.push_back(label);
    label_runs(b, runs, rgs, std::max(current_max, label), out);
    rgs.pop_back();
  }
}

}  // namespace

std::vector<AutomatonState> enumerate_valid_states(int b) {
  if (b < 0 || b > kMaxWidth) {
    throw InvalidArgument("width must be in [0, " + std::to_string(kMaxWidth) + "]");
  }
  std::vector<AutomatonState> states;
  states.push_back(AutomatonState::initial(b));
  const std::uint32_t limit = std::uint32_t{1} << b;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    // Cell i is filled iff bit (b - 1 - i) is set.
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < b;) {
      if (((mask >> (b - 1 - i)) & 1u) == 0) {
        ++i;
        continue;
      }
      int j = i;
      while (j < b && ((mask >> (b - 1 - j)) & 1u) != 0) ++j;
      runs.emplace_back(i, j);
      i = j;
    }
    std::vector<LabelSequence> words;
    std::vector<int> rgs;
    label_runs(b, runs, rgs, 0, words);
    const bool first_filled = runs.front().first == 0;
    const bool last_filled = runs.back().second == b;
    for (const LabelSequence& w : words) {
      for (bool l : {false, true}) {
        if (first_filled && !l) continue;
        for (bool r : {false, true}) {
          if (last_filled && !r) continue;
          states.push_back(make_state(w, l, r));
        }
      }
    }
  }
  return states;
}

}  // namespace inscribed
