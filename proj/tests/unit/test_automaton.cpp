#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "inscribed/automaton.hpp"
#include "inscribed/errors.hpp"
#include "inscribed/transition.hpp"
#include "json.hpp"

using namespace inscribed;
using nlohmann::json;

namespace {

mpz_class catalan_by_recurrence(unsigned m) {
  std::vector<mpz_class> c{1};
  for (unsigned n = 0; n < m; ++n) {
    mpz_class next = 0;
    for (unsigned i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c.push_back(next);
  }
  return c[m];
}

unsigned runs_by_scan(std::uint64_t k) {
  unsigned runs = 0;
  bool in_run = false;
  for (; k != 0; k >>= 1) {
    const bool bit = (k & 1u) != 0;
    if (bit && !in_run) ++runs;
    in_run = bit;
  }
  return runs;
}

// The state-count sum evaluated term by term.
mpz_class literal_sum(int b) {
  mpz_class total = 1;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << b); ++k) {
    mpz_class term = catalan_by_recurrence(runs_by_scan(k));
    if (k % 2 == 0) term *= 2;
    if (k < (std::uint64_t{1} << (b - 1))) term *= 2;
    total += term;
  }
  return total;
}

}  // namespace

TEST(Formula, KnownTable) {
  const long want[] = {1, 2, 6, 16, 40, 99, 247, 625, 1605, 4178, 11006, 29292};
  for (int b = 0; b <= 11; ++b) EXPECT_EQ(state_count_formula(b), want[b]) << "b=" << b;
}

TEST(Formula, MatchesLiteralSum) {
  for (int b = 1; b <= 18; ++b) EXPECT_EQ(state_count_formula(b), literal_sum(b)) << "b=" << b;
}

TEST(Formula, LargeWidthsAreCheapAndGrowing) {
  mpz_class prev = state_count_formula(20);
  for (int b = 21; b <= 62; ++b) {
    const mpz_class cur = state_count_formula(b);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
  EXPECT_THROW(state_count_formula(-1), InvalidArgument);
  EXPECT_THROW(state_count_formula(63), InvalidArgument);
}

TEST(Formula, MatchesEnumeration) {
  for (int b = 0; b <= 9; ++b) {
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_valid_states(b).size())), state_count_formula(b));
  }
}

TEST(Formula, Helpers) {
  const int c[] = {1, 1, 2, 5, 14};
  for (unsigned m = 0; m < 5; ++m) EXPECT_EQ(catalan(m), c[m]);
  for (unsigned m = 0; m < 30; ++m) EXPECT_EQ(catalan(m), catalan_by_recurrence(m));
  EXPECT_EQ(runs_of_ones(5), 2u);
  EXPECT_EQ(runs_of_ones(7), 1u);
  for (std::uint64_t k = 1; k < 5000; ++k) EXPECT_EQ(runs_of_ones(k), runs_by_scan(k));
}

TEST(Build, SmallWidths) {
  const Automaton a1 = build(1);
  EXPECT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1.accepting_indices().size(), 1u);
  EXPECT_EQ(a1.state(a1.accepting_indices()[0]).to_string(), "(1,T,T)");
  EXPECT_EQ(build(2).size(), 6u);
  EXPECT_EQ(build(6).size(), 247u);
  EXPECT_THROW(build(0), InvalidArgument);
}

TEST(Build, Invariants) {
  for (int b = 1; b <= 7; ++b) {
    const Automaton a = build(b);
    EXPECT_EQ(a.state(0), AutomatonState::initial(b));
    EXPECT_LE(mpz_class(static_cast<unsigned long>(a.size())), state_count_formula(b));
    std::set<std::string> seen;
    const auto sigma = enumerate_alphabet(b);
    std::vector<bool> reached(a.size(), false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    std::size_t defined = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(seen.insert(a.state(i).to_string()).second);
      EXPECT_EQ(a.accepting(i), is_accepting(a.state(i)));
      for (const RowConfig& u : sigma) {
        const auto t = a.target(i, u);
        const auto expected = step(a.state(i), u);
        ASSERT_EQ(t.has_value(), expected.has_value());
        if (!t) continue;
        ++defined;
        ASSERT_LT(*t, a.size());
        EXPECT_EQ(a.state(*t), *expected);
      }
    }
    EXPECT_EQ(defined, a.transition_count());
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (const RowConfig& u : sigma) {
        const auto t = a.target(i, u);
        if (t && !reached[*t]) {
          reached[*t] = true;
          queue.push_back(*t);
        }
      }
    }
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(reached[i]) << "state " << i;
  }
}

TEST(Build, BreadthFirstOrder) {
  const Automaton a = build(4);
  // Discovery order: scanning states in index order and letters ascending
  // never meets an undiscovered state beyond the next free index.
  std::size_t next = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t r = 0; r < a.alphabet_size(); ++r) {
      const std::int32_t t = a.raw_target(i, r);
      if (t == Automaton::kNoTransition) continue;
      ASSERT_LE(static_cast<std::size_t>(t), next);
      if (static_cast<std::size_t>(t) == next) ++next;
    }
  }
  EXPECT_EQ(next, a.size());
}

TEST(Build, ParallelMatchesSequential) {
  for (int b : {5, 7, 8}) {
    const Automaton seq = build(b, {.threads = 1});
    EXPECT_EQ(build(b, {.threads = 4}), seq) << "b=" << b;
    EXPECT_EQ(build(b, {.threads = 3}), seq) << "b=" << b;
  }
}

TEST(Build, CeilingIsEnforced) {
  EXPECT_THROW(build(6, {.max_states = 200}), ResourceLimitExceeded);
  EXPECT_NO_THROW(build(6, {.max_states = 247}));
}

TEST(Serialization, RoundTrip) {
  for (int b : {1, 2, 5, 10}) {
    const Automaton a = build(b);
    EXPECT_EQ(deserialize(serialize(a)), a) << "b=" << b;
  }
}

TEST(Serialization, WideWordsAreCommaSeparated) {
  const json doc = json::parse(serialize(build(10)));
  EXPECT_EQ(doc["states"][0]["word"], "0,0,0,0,0,0,0,0,0,0");
}

TEST(Serialization, TruncatedInput) {
  const std::string text = serialize(build(2));
  EXPECT_THROW(deserialize(text.substr(0, text.size() / 2)), MalformedInput);
  EXPECT_THROW(deserialize(""), MalformedInput);
}

TEST(Serialization, VersionMismatch) {
  json doc = json::parse(serialize(build(2)));
  doc["version"] = kSerializationVersion + 1;
  EXPECT_THROW(deserialize(doc.dump()), VersionMismatch);
}

TEST(Serialization, TamperedAcceptingSet) {
  const Automaton a = build(3);
  json doc = json::parse(serialize(a));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.accepting(i)) {
      doc["accepting"].push_back(i);
      break;
    }
  }
  EXPECT_THROW(deserialize(doc.dump()), InvariantViolation);
}

TEST(Serialization, TamperedTransition) {
  const Automaton a = build(3);
  json doc = json::parse(serialize(a));
  auto& edges = doc["transitions"][1];
  ASSERT_FALSE(edges.empty());
  const std::size_t old = edges[0][1].get<std::size_t>();
  edges[0][1] = (old + 1) % a.size();
  EXPECT_THROW(deserialize(doc.dump()), InvariantViolation);

  json bad = json::parse(serialize(a));
  bad["transitions"][0][0][1] = a.size() + 5;
  EXPECT_THROW(deserialize(bad.dump()), InvariantViolation);
}

TEST(Serialization, NonCanonicalWord) {
  json doc = json::parse(serialize(build(3)));
  for (auto& s : doc["states"]) {
    if (s["word"] == "101") {
      s["word"] = "202";
      break;
    }
  }
  EXPECT_THROW(deserialize(doc.dump()), InvariantViolation);
}

TEST(Dot, Structure) {
  for (int b : {1, 2, 4}) {
    const Automaton a = build(b);
    const std::string dot = export_dot(a);
    std::istringstream in(dot);
    std::string line;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    while (std::getline(in, line)) {
      if (line.find("->") != std::string::npos) {
        if (line.find("start") == std::string::npos) ++edges;
      } else if (line.find("label=\"(") != std::string::npos) {
        ++nodes;
      }
    }
    EXPECT_EQ(nodes, a.size()) << dot;
    EXPECT_EQ(edges, a.transition_count()) << dot;
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  }
}

TEST(Dot, WidthTwoEdge) {
  const Automaton a = build(2);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < a.size(); ++i) index[a.state(i).to_string()] = i;
  const auto t = a.target(index.at("(00,F,F)"), RowConfig::parse("11"));
  ASSERT_TRUE(t);
  EXPECT_EQ(a.state(*t).to_string(), "(11,T,T)");
  const std::string dot = export_dot(a);
  const std::string edge = "s" + std::to_string(index.at("(00,F,F)")) + " -> s" + std::to_string(*t) +
                           " [label=\"11\"]";
  EXPECT_NE(dot.find(edge), std::string::npos) << dot;
}
