#include <gtest/gtest.h>

#include "fo2/synthesis.hpp"
#include "test_support.hpp"

namespace fo2 {
namespace {

const Alphabet kAbc("abc");

std::vector<Position> satisfying(const Formula& f, const Word& w) {
  std::vector<Position> out;
  for (Position i = 1; i <= w.length(); ++i) {
    if (model_check(f, w, i)) out.push_back(i);
  }
  return out;
}

TEST(Comparison, Examples) {
  const Ranker ra = parse_ranker(">a");
  const Word bab(kAbc, "bab");
  EXPECT_EQ(satisfying(synth_comparison(ra, Relation::Greater), bab), std::vector<Position>{3});
  EXPECT_EQ(satisfying(synth_comparison(ra, Relation::GreaterEq), bab), (std::vector<Position>{2, 3}));
  EXPECT_TRUE(satisfying(synth_comparison(ra, Relation::Less), Word(kAbc, "bbb")).empty());
}

TEST(Comparison, ExhaustiveAgainstEvaluation) {
  for (const auto& nr : testing::all_naive_rankers("ab", 3)) {
    const Ranker r = parse_ranker(testing::naive_text(nr));
    for (Relation rel : {Relation::Less, Relation::LessEq, Relation::Greater, Relation::GreaterEq}) {
      for (Var v : {Var::X, Var::Y}) {
        const Formula f = synth_comparison(r, rel, v);
        EXPECT_LE(metrics(f).quantifier_depth, static_cast<int>(r.size()));
        for (const auto& w : testing::all_words("ab", 5)) {
          const auto pos = testing::naive_eval(nr, w);
          for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
            bool expected = false;
            if (pos) {
              switch (rel) {
                case Relation::Less: expected = i < *pos; break;
                case Relation::LessEq: expected = i <= *pos; break;
                case Relation::Greater: expected = i > *pos; break;
                case Relation::GreaterEq: expected = i >= *pos; break;
              }
            }
            const bool got = v == Var::X ? testing::naive_holds(f, w, i, 0) : testing::naive_holds(f, w, 0, i);
            EXPECT_EQ(got, expected) << to_string(r) << ' ' << to_string(rel) << " on " << w << " at " << i;
          }
        }
      }
    }
  }
}

TEST(Definedness, Examples) {
  const Formula fa = synth_definedness(parse_ranker(">a"));
  EXPECT_TRUE(model_check(fa, Word(kAbc, "ba")));
  EXPECT_FALSE(model_check(fa, Word(kAbc, "bb")));
  const Formula f3 = synth_definedness(parse_ranker(">a>c<b"));
  EXPECT_TRUE(model_check(f3, Word(kAbc, "cababcba")));
  EXPECT_FALSE(model_check(f3, Word(kAbc, "acbbca")));
  const Formula fl = synth_definedness(parse_ranker("<a"));
  EXPECT_TRUE(model_check(fl, Word(kAbc, "a")));
  EXPECT_FALSE(model_check(fl, Word(kAbc, "")));
}

TEST(Position, Examples) {
  EXPECT_EQ(satisfying(synth_position(parse_ranker(">a")), Word(kAbc, "bab")), std::vector<Position>{2});
  EXPECT_EQ(satisfying(synth_position(parse_ranker(">a>c<b")), Word(kAbc, "cababcba")), std::vector<Position>{5});
  EXPECT_TRUE(satisfying(synth_position(parse_ranker(">a")), Word(kAbc, "bbb")).empty());
}

TEST(Synthesis, ExhaustivePlain) {
  for (const auto& nr : testing::all_naive_rankers("ab", 3)) {
    const Ranker r = parse_ranker(testing::naive_text(nr));
    const Formula def = synth_definedness(r);
    const Formula pos = synth_position(r);
    EXPECT_LE(metrics(def).quantifier_depth, static_cast<int>(r.size()));
    EXPECT_LE(metrics(pos).quantifier_depth, static_cast<int>(r.size()));
    EXPECT_TRUE(metrics(def).is_sentence());
    EXPECT_TRUE(metrics(pos).free_x && !metrics(pos).free_y);
    for (const auto& w : testing::all_words("ab", 5)) {
      const auto expected = testing::naive_eval(nr, w);
      EXPECT_EQ(testing::naive_holds(def, w), expected.has_value()) << to_string(r) << " on " << w;
      for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        EXPECT_EQ(testing::naive_holds(pos, w, i), expected == i) << to_string(r) << " on " << w << " at " << i;
    }
  }
}

TEST(Synthesis, SuccessorRankers) {
  const std::vector<std::string> sides{"", "a", "b"};
  std::vector<SucRanker> rankers;
  for (Direction d1 : {Direction::Right, Direction::Left}) {
    for (char a1 : std::string("ab")) {
      NeighborhoodPos p1{d1, "", a1, ""};
      rankers.push_back(SucRanker({p1}));
      for (Direction d2 : {Direction::Right, Direction::Left}) {
        for (char a2 : std::string("ab")) {
          for (const auto& s : sides) {
            for (const auto& t : sides) rankers.push_back(SucRanker({p1, NeighborhoodPos{d2, s, a2, t}}));
          }
        }
      }
    }
  }
  rankers.push_back(parse_suc_ranker(">a<[b|a|]>[ba|b|aa]"));
  rankers.push_back(parse_suc_ranker("<b>[|a|b]<[ab|a|b]"));
  for (const auto& r : rankers) {
    const Formula def = synth_definedness(r);
    const Formula pos = synth_position(r);
    EXPECT_LE(metrics(def).quantifier_depth, static_cast<int>(r.size())) << to_string(r);
    EXPECT_LE(metrics(pos).quantifier_depth, static_cast<int>(r.size())) << to_string(r);
    for (const auto& w : testing::all_words("ab", 5)) {
      const auto expected = r.eval(w);
      EXPECT_EQ(testing::naive_holds(def, w), expected.has_value()) << to_string(r) << " on " << w;
      for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        EXPECT_EQ(testing::naive_holds(pos, w, i), expected == i) << to_string(r) << " on " << w << " at " << i;
    }
  }
}

TEST(UniquePosition, Examples) {
  std::vector<Word> corpus;
  for (const auto& w : testing::all_words("ab", 3)) corpus.emplace_back(Alphabet("ab"), w);
  const auto report = unique_position_positions(synth_position(parse_ranker(">a")), corpus);
  EXPECT_TRUE(report.unique);
  for (const auto& e : report.entries) {
    if (e.positions.size() == 1) EXPECT_EQ(e.ranker_position, true);
  }

  const std::vector<Word> aa{Word(Alphabet("ab"), "aa")};
  const auto bad = unique_position_positions(parse_formula("a(x)", Alphabet("ab")), aa);
  EXPECT_FALSE(bad.unique);
  EXPECT_EQ(bad.entries[0].positions, (std::vector<Position>{1, 2}));

  EXPECT_THROW(unique_position_positions(parse_formula("Ex.a(x)", Alphabet("ab")), aa), std::invalid_argument);
  EXPECT_THROW(unique_position_positions(parse_formula("x<y", Alphabet("ab")), aa), std::invalid_argument);
}

}  // namespace
}  // namespace fo2
