#include <gtest/gtest.h>

#include <map>

#include "fo2/errors.hpp"
#include "fo2/ranker.hpp"
#include "test_support.hpp"

namespace fo2 {
namespace {

Word W(std::string_view s, std::string_view alphabet = "abc") { return Word(Alphabet(alphabet), s); }

TEST(Boundary, Examples) {
  EXPECT_EQ(eval_boundary({Direction::Right, 'a'}, W("bab")), 2);
  EXPECT_EQ(eval_boundary({Direction::Right, 'a'}, W("bbb")), std::nullopt);
  EXPECT_EQ(eval_boundary({Direction::Left, 'b'}, W("cababcba"), 6), 5);
}

TEST(Boundary, MinimalityByScan) {
  for (const auto& w : testing::all_words("ab", 6)) {
    const auto len = static_cast<Position>(w.size());
    for (Position q = 1; q <= len; ++q) {
      for (char a : std::string("ab")) {
        if (auto i = eval_step(BoundaryPos{Direction::Right, a}, w, q)) {
          EXPECT_EQ(w[*i - 1], a);
          EXPECT_GT(*i, q);
          for (Position j = q + 1; j < *i; ++j) EXPECT_NE(w[j - 1], a);
        } else {
          for (Position j = q + 1; j <= len; ++j) EXPECT_NE(w[j - 1], a);
        }
        if (auto i = eval_step(BoundaryPos{Direction::Left, a}, w, q)) {
          EXPECT_EQ(w[*i - 1], a);
          EXPECT_LT(*i, q);
          for (Position j = *i + 1; j < q; ++j) EXPECT_NE(w[j - 1], a);
        } else {
          for (Position j = 1; j < q; ++j) EXPECT_NE(w[j - 1], a);
        }
      }
    }
  }
}

TEST(RankerEval, WorkedExample) {
  const Ranker r = parse_ranker(">a>c<b");
  EXPECT_EQ(r.eval(W("cababcba")), 5);
  EXPECT_EQ(r.eval(W("acbbca")), std::nullopt);
  EXPECT_EQ(parse_ranker(">a").eval(W("")), std::nullopt);
}

TEST(RankerEval, AgreesWithScanOracle) {
  for (const auto& nr : testing::all_naive_rankers("ab", 3)) {
    const Ranker r = parse_ranker(testing::naive_text(nr));
    for (const auto& w : testing::all_words("ab", 6)) {
      EXPECT_EQ(r.eval(w), testing::naive_eval(nr, w)) << to_string(r) << " on " << w;
    }
  }
}

TEST(RankerEval, PrefixDefinednessAndMonotonicity) {
  for (const auto& nr : testing::all_naive_rankers("ab", 3)) {
    const Ranker r = parse_ranker(testing::naive_text(nr));
    for (const auto& w : testing::all_words("ab", 5)) {
      if (!r.eval(w)) continue;
      for (std::size_t k = 1; k <= r.size(); ++k) {
        auto here = r.prefix(k).eval(w);
        ASSERT_TRUE(here.has_value());
        if (k >= 2) {
          auto prev = r.prefix(k - 1).eval(w);
          if (r.steps()[k - 1].direction == Direction::Right) EXPECT_GT(*here, *prev);
          else EXPECT_LT(*here, *prev);
        }
      }
    }
  }
}

TEST(RankerOps, Prefix) {
  EXPECT_EQ(parse_ranker(">a>c<b").prefix(2), parse_ranker(">a>c"));
  EXPECT_EQ(parse_ranker(">a").prefix(1), parse_ranker(">a"));
  EXPECT_EQ(parse_ranker("<b>a").prefix(1), parse_ranker("<b"));
  EXPECT_THROW(parse_ranker(">a").prefix(0), std::out_of_range);
  EXPECT_THROW(parse_ranker(">a").prefix(2), std::out_of_range);
}

TEST(RankerOps, AlternationBlocks) {
  EXPECT_EQ(parse_ranker(">a>c<b").alternation_blocks(), 2);
  EXPECT_EQ(parse_ranker(">a").alternation_blocks(), 1);
  EXPECT_EQ(parse_ranker("<a>b<c>d").alternation_blocks(), 4);
  EXPECT_EQ(parse_ranker(">a>c<b").final_direction(), Direction::Left);
  EXPECT_EQ(parse_suc_ranker(">a<[b|a|]").alternation_blocks(), 2);
}

TEST(RankerSyntax, RoundTrip) {
  for (const char* text : {">a<b>c", "<z", ">0<1"}) EXPECT_EQ(to_string(parse_ranker(text)), text);
  for (const char* text : {">[ab|c|]", "<[|a|]<[|a|b]", ">[|a|]>[b|a|a]>[ab|c|ba]"})
    EXPECT_EQ(to_string(parse_suc_ranker(text)), text);
  EXPECT_EQ(parse_suc_ranker(">a"), parse_suc_ranker(">[|a|]"));
}

TEST(RankerSyntax, Errors) {
  EXPECT_THROW(parse_ranker(""), ParseError);
  EXPECT_THROW(parse_ranker(">"), ParseError);
  EXPECT_THROW(parse_ranker("a"), ParseError);
  EXPECT_THROW(parse_suc_ranker(">[a|c]"), ParseError);
  EXPECT_THROW(parse_suc_ranker(">[a|-|]"), ParseError);
}

TEST(RankerSyntax, WidthBound) {
  EXPECT_TRUE(within_width_bound(parse_suc_ranker(">a>[b|a|b]<[ab|c|ba]")));
  EXPECT_FALSE(within_width_bound(parse_suc_ranker(">[ab|c|]")));
  EXPECT_FALSE(within_width_bound(parse_suc_ranker(">a>[|c|ab]")));
}

TEST(SucRankerEval, Examples) {
  EXPECT_EQ(parse_suc_ranker(">[|a|b]").eval(W("cab")), 2);
  EXPECT_EQ(parse_suc_ranker(">[b|a|]").eval(W("ab")), std::nullopt);
  EXPECT_EQ(parse_suc_ranker(">[|a|]").eval(W("bab")), 2);
  // Step 1 width limit forces the two-step form; the second step checks the window.
  EXPECT_EQ(parse_suc_ranker(">a>[a|a|]").eval(W("aa", "a")), 2);
}

// Window-scan oracle for a single neighborhood step.
std::optional<int> naive_window(const NeighborhoodPos& p, const std::string& w, std::optional<int> q) {
  const int k = static_cast<int>(p.before.size());
  const int l = static_cast<int>(p.after.size());
  std::vector<int> hits;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    if (i - k < 1 || i + l > static_cast<int>(w.size())) continue;
    if (w.substr(static_cast<std::size_t>(i - 1 - k), static_cast<std::size_t>(k + 1 + l)) !=
        p.before + p.letter + p.after)
      continue;
    if (q && (p.direction == Direction::Right ? i <= *q : i >= *q)) continue;
    hits.push_back(i);
  }
  if (hits.empty()) return std::nullopt;
  return p.direction == Direction::Right ? hits.front() : hits.back();
}

TEST(SucRankerEval, WindowOracle) {
  const std::vector<std::string> sides{"", "a", "b", "ab", "ba", "aa"};
  for (const auto& w : testing::all_words("ab", 6)) {
    for (Direction d : {Direction::Right, Direction::Left}) {
      for (const auto& s : sides) {
        for (const auto& t : sides) {
          for (char a : std::string("ab")) {
            NeighborhoodPos p{d, s, a, t};
            EXPECT_EQ(eval_step(p, w), naive_window(p, w, std::nullopt));
            for (int q = 1; q <= static_cast<int>(w.size()); ++q) EXPECT_EQ(eval_step(p, w, q), naive_window(p, w, q));
          }
        }
      }
    }
  }
}

TEST(SucRankerEval, EmptyNeighborhoodsMatchPlain) {
  for (const auto& nr : testing::all_naive_rankers("ab", 3)) {
    const Ranker r = parse_ranker(testing::naive_text(nr));
    const SucRanker s = as_suc_ranker(r);
    for (const auto& w : testing::all_words("ab", 5)) EXPECT_EQ(r.eval(w), s.eval(w));
  }
}

TEST(Realized, Examples) {
  const auto ab = realized_rankers(W("ab"), 1);
  std::map<std::string, Position> got;
  for (const auto& e : ab.entries()) got[to_string(e.ranker)] = e.position;
  EXPECT_EQ(got, (std::map<std::string, Position>{{">a", 1}, {">b", 2}, {"<a", 1}, {"<b", 2}}));
  EXPECT_TRUE(realized_rankers(W(""), 2).empty());

  RankerFilter f;
  f.min_length = 1;
  f.max_length = 1;
  f.final_direction = Direction::Right;
  const auto sel = realized_rankers(W("ababa"), 1).select(f);
  ASSERT_EQ(sel.size(), 2u);
  EXPECT_EQ(to_string(sel[0].ranker), ">a");
  EXPECT_EQ(sel[0].position, 1);
  EXPECT_EQ(to_string(sel[1].ranker), ">b");
  EXPECT_EQ(sel[1].position, 2);
}

TEST(Realized, SucExamples) {
  const auto ab = realized_suc_rankers(W("ab"), 1);
  std::map<std::string, Position> got;
  for (const auto& e : ab.entries()) got[to_string(e.ranker)] = e.position;
  EXPECT_EQ(got, (std::map<std::string, Position>{
                     {">[|a|]", 1}, {">[|b|]", 2}, {"<[|a|]", 1}, {"<[|b|]", 2}}));
  EXPECT_TRUE(realized_suc_rankers(W(""), 1).empty());
  EXPECT_EQ(realized_suc_rankers(W("aa", "a"), 2).find(parse_suc_ranker(">a>[a|a|]")), 2);
}

TEST(Realized, MatchesNaiveGenerator) {
  for (const std::string letters : {"a", "ab", "abc"}) {
    for (const auto& w : testing::all_words(letters, letters.size() == 3 ? 4 : 6)) {
      for (int n = 1; n <= 3; ++n) {
        const auto realized = realized_rankers(Word(Alphabet(letters), w), n);
        std::size_t expected = 0;
        for (const auto& nr : testing::all_naive_rankers(letters, n)) {
          auto pos = testing::naive_eval(nr, w);
          if (!pos) continue;
          ++expected;
          EXPECT_EQ(realized.find(parse_ranker(testing::naive_text(nr))), pos);
        }
        EXPECT_EQ(realized.size(), expected) << w << " n=" << n;
      }
    }
  }
}

TEST(Realized, BlockBoundAndCap) {
  const Word w = W("abcabc");
  const auto one_block = realized_rankers(w, 3, 1);
  EXPECT_FALSE(one_block.empty());
  for (const auto& e : one_block.entries()) EXPECT_EQ(e.ranker.alternation_blocks(), 1);
  EXPECT_THROW(realized_rankers(w, 4, std::nullopt, 10), ResourceError);
}

TEST(Realized, SucSoundAndComplete) {
  // Brute force over every neighborhood with widths allowed by the step index.
  const std::vector<std::string> sides{"", "a", "b"};
  for (const auto& w : testing::all_words("ab", 4)) {
    const auto realized = realized_suc_rankers(W(w, "ab"), 2);
    for (const auto& e : realized.entries()) EXPECT_EQ(e.ranker.eval(w), e.position);
    std::size_t expected = 0;
    for (Direction d1 : {Direction::Right, Direction::Left}) {
      for (char a1 : std::string("ab")) {
        NeighborhoodPos p1{d1, "", a1, ""};
        if (eval_step(p1, w)) ++expected;
        for (Direction d2 : {Direction::Right, Direction::Left}) {
          for (char a2 : std::string("ab")) {
            for (const auto& s : sides) {
              for (const auto& t : sides) {
                SucRanker r({p1, NeighborhoodPos{d2, s, a2, t}});
                if (auto pos = r.eval(w)) {
                  ++expected;
                  EXPECT_EQ(realized.find(r), pos);
                }
              }
            }
          }
        }
      }
    }
    EXPECT_EQ(realized.size(), expected) << w;
  }
}

}  // namespace
}  // namespace fo2
