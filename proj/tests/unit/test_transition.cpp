#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "inscribed/errors.hpp"
#include "inscribed/transition.hpp"

using namespace inscribed;

namespace {

// Merge runs of x that share a letter by repeated relabelling until nothing
// changes, then number the groups by first occurrence.
LabelSequence fixed_point_merge(const LabelSequence& x) {
  const int b = x.width();
  std::vector<int> run_of(static_cast<std::size_t>(b), -1);
  std::vector<std::set<int>> letters;
  for (int i = 0; i < b; ++i) {
    if (x[i] == 0) continue;
    if (i == 0 || x[i - 1] == 0) letters.emplace_back();
    run_of[static_cast<std::size_t>(i)] = static_cast<int>(letters.size()) - 1;
    letters.back().insert(x[i]);
  }
  std::vector<int> group(letters.size());
  for (std::size_t r = 0; r < group.size(); ++r) group[r] = static_cast<int>(r);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < letters.size(); ++r) {
      for (std::size_t s = 0; s < letters.size(); ++s) {
        if (group[r] == group[s]) continue;
        bool share = false;
        for (int a : letters[r]) share = share || letters[s].count(a) != 0;
        if (!share) continue;
        const int lo = std::min(group[r], group[s]);
        const int hi = std::max(group[r], group[s]);
        for (int& g : group) {
          if (g == hi) g = lo;
        }
        changed = true;
      }
    }
  }
  std::map<int, int> number;
  LabelSequence out(b);
  for (int i = 0; i < b; ++i) {
    const int r = run_of[static_cast<std::size_t>(i)];
    if (r < 0) continue;
    const int g = group[static_cast<std::size_t>(r)];
    auto it = number.emplace(g, static_cast<int>(number.size()) + 1).first;
    out.set(i, it->second);
  }
  return out;
}

int distinct_labels(const LabelSequence& w) {
  std::set<int> s;
  for (int i = 0; i < w.width(); ++i) {
    if (w[i] != 0) s.insert(w[i]);
  }
  return static_cast<int>(s.size());
}

int run_count(const LabelSequence& w) {
  int runs = 0;
  for (int i = 0; i < w.width(); ++i) runs += (w[i] != 0 && (i == 0 || w[i - 1] == 0)) ? 1 : 0;
  return runs;
}

}  // namespace

TEST(Continuation, Examples) {
  EXPECT_TRUE(continuation_allowed(LabeledWord::parse("10203020104"), RowConfig::parse("10111011101")));
  EXPECT_FALSE(continuation_allowed(LabeledWord::parse("01"), RowConfig::parse("10")));
  EXPECT_TRUE(continuation_allowed(LabeledWord::zeros(5), RowConfig::parse("01111")));
}

TEST(VerticalConnexity, Examples) {
  EXPECT_EQ(vertical_connexity(LabeledWord::parse("10203020104"), RowConfig::parse("10111011101")),
            LabelSequence::parse("10253026104"));
  EXPECT_EQ(vertical_connexity(LabeledWord::parse("11111"), RowConfig::parse("11111")),
            LabelSequence::parse("11111"));
  // Every fresh cell takes one more than the largest label to its left, so a
  // new run only gets a single label after the horizontal phase.
  const LabelSequence fresh = vertical_connexity(LabeledWord::zeros(5), RowConfig::parse("01110"));
  EXPECT_EQ(fresh, LabelSequence::parse("01230"));
  EXPECT_EQ(horizontal_connexity(fresh).to_string(), "01110");
  EXPECT_THROW(vertical_connexity(LabeledWord::parse("01"), RowConfig::parse("10")), InvalidArgument);
}

TEST(HorizontalConnexity, Examples) {
  EXPECT_EQ(horizontal_connexity(LabelSequence::parse("10253026104")).to_string(), "10111011102");
  EXPECT_EQ(horizontal_connexity(LabelSequence::parse("01110")).to_string(), "01110");
  // Runs "1", "2", "13": the last run links letters 1 and 3, so it joins the first.
  EXPECT_EQ(horizontal_connexity(LabelSequence::parse("102013")).to_string(), "102011");
  EXPECT_EQ(horizontal_connexity(LabelSequence::parse("102013")).labels(),
            fixed_point_merge(LabelSequence::parse("102013")));
}

TEST(HorizontalConnexity, AgreesWithFixedPointMerge) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20000; ++trial) {
    const int b = 1 + static_cast<int>(rng() % 12);
    LabelSequence x(b);
    const int alphabet = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < b; ++i) {
      if (rng() % 3 != 0) x.set(i, 1 + static_cast<int>(rng() % static_cast<unsigned>(alphabet)));
    }
    const LabelSequence want = fixed_point_merge(x);
    // Only planar inputs are guaranteed to be non-crossing after merging.
    if (!satisfies_non_crossing(want) || want.max() > max_label(b)) continue;
    EXPECT_EQ(horizontal_connexity(x).labels(), want) << x.to_string();
  }
}

TEST(Step, Examples) {
  const auto a = step(AutomatonState::initial(5), RowConfig::parse("01111"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->to_string(), "(01111,F,T)");
  const auto b = step(AutomatonState::parse("(00001,F,T)"), RowConfig::parse("10101"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->to_string(), "(10203,T,T)");
  EXPECT_FALSE(step(AutomatonState::parse("(01,F,T)"), RowConfig::parse("10")));
}

TEST(Step, WorkedExample) {
  const auto s = step(AutomatonState::parse("(10203020104,T,T)"), RowConfig::parse("10111011101"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->word.to_string(), "10111011102");
}

TEST(Step, PropertiesOverEveryStateAndLetter) {
  for (int b = 1; b <= 6; ++b) {
    for (const AutomatonState& s : enumerate_valid_states(b)) {
      for (const RowConfig& u : enumerate_alphabet(b)) {
        const auto t = step(s, u);
        EXPECT_EQ(t.has_value(), continuation_allowed(s.word, u));
        if (!t) continue;
        const LabelSequence x = vertical_connexity(s.word, u);
        EXPECT_TRUE(is_valid_triplet(t->word.labels(), t->left, t->right)) << s.to_string() << " " << u.to_string();
        EXPECT_EQ(canonicalize(t->word.labels()), t->word);
        EXPECT_GE(t->left, s.left);
        EXPECT_GE(t->right, s.right);
        EXPECT_EQ(t->left, s.left || u.touches_left());
        EXPECT_EQ(t->right, s.right || u.touches_right());
        EXPECT_LE(t->word.labels().max(), max_label(b));
        EXPECT_LE(distinct_labels(t->word.labels()), run_count(x));
        EXPECT_EQ(t->word.labels(), fixed_point_merge(x));
        EXPECT_EQ(step(s, u), t);
      }
    }
  }
}

TEST(Step, RandomWideStatesStayValid) {
  std::mt19937 rng(7);
  for (int b = 7; b <= 11; ++b) {
    const auto states = enumerate_valid_states(b);
    const auto sigma = enumerate_alphabet(b);
    for (int trial = 0; trial < 4000; ++trial) {
      const AutomatonState& s = states[rng() % states.size()];
      const RowConfig& u = sigma[rng() % sigma.size()];
      const auto t = step(s, u);
      if (!t) continue;
      EXPECT_TRUE(is_valid_triplet(t->word.labels(), t->left, t->right));
      EXPECT_EQ(t->word.labels(), fixed_point_merge(vertical_connexity(s.word, u)));
    }
  }
}
