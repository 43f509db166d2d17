#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "inscribed/automaton.hpp"
#include "inscribed/errors.hpp"
#include "inscribed/transition.hpp"

namespace inscribed {

namespace {

using nlohmann::json;

// Digits for b <= 9, comma separated labels above.
std::string word_text(const LabeledWord& w) {
  if (w.width() <= 9) return w.to_string();
  std::string out;
  for (int i = 0; i < w.width(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

LabelSequence parse_word(const std::string& text, int b) {
  if (b > 9) {
    // A width-10+ word without separators would be ambiguous; require them.
    if (std::count(text.begin(), text.end(), ',') != b - 1) {
      throw MalformedInput("word '" + text + "' must list " + std::to_string(b) +
                           " comma separated labels");
    }
  }
  LabelSequence seq;
  try {
    seq = LabelSequence::parse(text);
  } catch (const InvalidArgument& e) {
    throw MalformedInput(e.what());
  }
  if (seq.width() != b) throw MalformedInput("word '" + text + "' does not have width " + std::to_string(b));
  return seq;
}

template <class T>
T field(const json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw MalformedInput(std::string("missing field '") + name + "'");
  }
  try {
    return object.at(name).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

std::string serialize(const Automaton& a) {
  json doc;
  doc["version"] = kSerializationVersion;
  doc["b"] = a.width();
  json states = json::array();
  for (const AutomatonState& s : a.states()) {
    states.push_back({{"word", word_text(s.word)}, {"l", s.left}, {"r", s.right}});
  }
  doc["states"] = std::move(states);
  doc["accepting"] = a.accepting_indices();
  json transitions = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.alphabet_size(); ++k) {
      const std::int32_t t = a.raw_target(i, k);
      if (t != Automaton::kNoTransition) row.push_back({k + 1, t});
    }
    transitions.push_back(std::move(row));
  }
  doc["transitions"] = std::move(transitions);
  return doc.dump() + "\n";
}

Automaton deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(e.what());
  }
  if (!doc.is_object()) throw MalformedInput("top level must be an object");
  const int version = field<int>(doc, "version");
  if (version != kSerializationVersion) {
    throw VersionMismatch("expected " + std::to_string(kSerializationVersion) + ", found " +
                          std::to_string(version));
  }
  const int b = field<int>(doc, "b");
  if (b < 1 || b > kMaxWidth) throw MalformedInput("width out of range");
  const auto state_docs = field<std::vector<json>>(doc, "states");
  const auto accepting_doc = field<std::vector<std::size_t>>(doc, "accepting");
  const auto transition_docs = field<std::vector<json>>(doc, "transitions");
  if (state_docs.empty()) throw MalformedInput("no states");
  if (transition_docs.size() != state_docs.size()) {
    throw MalformedInput("transitions must have one row per state");
  }

  std::vector<AutomatonState> states;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (const json& sd : state_docs) {
    const LabelSequence w = parse_word(field<std::string>(sd, "word"), b);
    const bool l = field<bool>(sd, "l");
    const bool r = field<bool>(sd, "r");
    if (!is_valid_triplet(w, l, r)) {
      throw InvariantViolation("state " + std::to_string(states.size()) + " is not a valid triplet");
    }
    AutomatonState s = make_state(w, l, r);
    if (s.word.labels() != w) {
      throw InvariantViolation("state " + std::to_string(states.size()) + " is not canonical");
    }
    if (!index.try_emplace(state_key(s), states.size()).second) {
      throw InvariantViolation("state " + std::to_string(states.size()) + " is a duplicate");
    }
    states.push_back(s);
  }
  if (states.front() != AutomatonState::initial(b)) {
    throw InvariantViolation("state 0 is not the initial state");
  }

  const std::size_t letters = (std::size_t{1} << b) - 1;
  std::vector<std::int32_t> table(states.size() * letters, Automaton::kNoTransition);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!transition_docs[i].is_array()) throw MalformedInput("transition row must be an array");
    for (const json& edge : transition_docs[i]) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_unsigned() ||
          !edge[1].is_number_unsigned()) {
        throw MalformedInput("transition must be [row_bitmask, target]");
      }
      const auto bits = edge[0].get<std::uint64_t>();
      const auto target = edge[1].get<std::uint64_t>();
      if (bits == 0 || bits > letters) throw MalformedInput("row bitmask out of range");
      if (target >= states.size()) throw InvariantViolation("transition target out of bounds");
      std::int32_t& slot = table[i * letters + (bits - 1)];
      if (slot != Automaton::kNoTransition) throw MalformedInput("duplicate transition");
      slot = static_cast<std::int32_t>(target);
    }
  }

  // The table must be exactly the transition function restricted to the
  // listed states, and every state must be reachable.
  const std::vector<RowConfig> alphabet = enumerate_alphabet(b);
  std::vector<bool> reached(states.size(), false);
  reached[0] = true;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t k = 0; k < letters; ++k) {
      const auto next = step(states[i], alphabet[k]);
      const std::int32_t t = table[i * letters + k];
      if (!next) {
        if (t != Automaton::kNoTransition) {
          throw InvariantViolation("transition defined where the transition function is not");
        }
        continue;
      }
      const auto it = index.find(state_key(*next));
      if (it == index.end() || t == Automaton::kNoTransition ||
          static_cast<std::size_t>(t) != it->second) {
        throw InvariantViolation("transition from state " + std::to_string(i) + " on " +
                                 alphabet[k].to_string() + " disagrees with the transition function");
      }
      reached[it->second] = true;
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw InvariantViolation("unreachable state listed");
  }

  Automaton a(b, std::move(states), std::move(table));
  std::vector<std::size_t> accepting = accepting_doc;
  std::sort(accepting.begin(), accepting.end());
  if (accepting != a.accepting_indices()) {
    throw InvariantViolation("accepting set does not match the accepting states");
  }
  return a;
}

std::string export_dot(const Automaton& a) {
  std::ostringstream out;
  out << "digraph A" << a.width() << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  start [shape=point];\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << "  s" << i << " [label=\"" << a.state(i).to_string() << "\"";
    if (a.accepting(i)) out << ", shape=doublecircle";
    out << "];\n";
  }
  out << "  start -> s0;\n";
  const std::vector<RowConfig> alphabet = enumerate_alphabet(a.width());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.alphabet_size(); ++k) {
      const std::int32_t t = a.raw_target(i, k);
      if (t == Automaton::kNoTransition) continue;
      out << "  s" << i << " -> s" << t << " [label=\"" << alphabet[k].to_string() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace inscribed
