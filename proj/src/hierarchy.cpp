#include "fo2/hierarchy.hpp"

#include <stdexcept>
#include <string>

#include "fo2/equivalence.hpp"
#include "fo2/game.hpp"

namespace fo2 {

namespace {

constexpr int kMaxLevel = 24;

void check_level(int m, int n) {
  if (m < 1 || m > kMaxLevel) throw std::invalid_argument("hierarchy level m must lie in [1, 24]");
  if (n < 1) throw std::invalid_argument("hierarchy parameter n must be >= 1");
}

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int k = 0; k < times; ++k) out += s;
  return out;
}

Alphabet witness_alphabet(int m, Signature sig) {
  std::string letters;
  for (int i = 0; i < m; ++i) letters += witness_letter(i, sig);
  if (sig == Signature::OrderSuccessor) letters += kPadLetter;
  return Alphabet(letters);
}

// Builds u and v level by level.  `unit(i)` renders a_i together with its
// padding: the odd-level prefix repeats unit_before(0..2i), the even-level
// suffix repeats unit_after(2i+1..0).
template <class Before, class After>
std::pair<std::string, std::string> build(int m, int n, std::string u, std::string v, std::string level2,
                                          Before unit_before, After unit_after) {
  if (m == 1) return {u, v};
  u += level2;
  v += level2;
  for (int level = 3; level <= m; ++level) {
    std::string block;
    if (level % 2 == 1) {
      for (int j = 0; j <= level - 1; ++j) block += unit_before(j);
      block = repeat(block, n);
      u = block + u;
      v = block + v;
    } else {
      for (int j = level - 1; j >= 0; --j) block += unit_after(j);
      block = repeat(block, n);
      u += block;
      v += block;
    }
  }
  return {u, v};
}

}  // namespace

char witness_letter(int i, Signature signature) {
  if (i < 0 || i > kMaxLevel) throw std::invalid_argument("witness letter index out of range");
  if (signature == Signature::Order || i == 0) return static_cast<char>('a' + i);
  return static_cast<char>('a' + i + 1);
}

WitnessPair witness_words(int m, int n) {
  check_level(m, n);
  const auto a = [](int i) { return std::string(1, witness_letter(i, Signature::Order)); };
  const std::string level2 = repeat(a(1) + a(0), 2 * n);
  auto [u, v] = build(m, n, a(0), "", level2, a, a);
  const Alphabet sigma = witness_alphabet(m, Signature::Order);
  return WitnessPair{m, n, Signature::Order, Word(sigma, u), Word(sigma, v)};
}

WitnessPair witness_words_suc(int m, int n) {
  check_level(m, n);
  const std::string pad(static_cast<std::size_t>(2 * n), kPadLetter);
  const auto a = [](int i) { return std::string(1, witness_letter(i, Signature::OrderSuccessor)); };
  const std::string level2 = repeat(a(1) + pad + a(0) + pad, 2 * n);
  auto [u, v] = build(
      m, n, pad + a(0) + pad, pad, level2, [&](int i) { return pad + a(i); }, [&](int i) { return a(i) + pad; });
  const Alphabet sigma = witness_alphabet(m, Signature::OrderSuccessor);
  return WitnessPair{m, n, Signature::OrderSuccessor, Word(sigma, u), Word(sigma, v)};
}

SeparatingRankerPair separating_rankers(int m, Signature signature) {
  if (m < 2 || m > kMaxLevel) throw std::invalid_argument("separating rankers need 2 <= m <= 24");
  std::vector<BoundaryPos> prefix;
  for (int level = m; level >= 3; --level) {
    // Level 2i+1 adds <a_{2i}; level 2i+2 adds >a_{2i+1}.
    const bool odd = level % 2 == 1;
    prefix.push_back({odd ? Direction::Left : Direction::Right, witness_letter(level - 1, signature)});
  }
  std::vector<BoundaryPos> r = prefix, s = prefix;
  r.push_back({Direction::Right, witness_letter(0, signature)});
  s.push_back({Direction::Right, witness_letter(1, signature)});
  return {Ranker(std::move(r)), Ranker(std::move(s))};
}

bool HierarchyReport::confirmed() const {
  if (words.m == 1) return level_one_u.value_or(false) && !level_one_v.value_or(true) && separating_depth.has_value();
  return rankers_indistinguishable.value_or(false) && game_indistinguishable.value_or(false) &&
         order_swapped.value_or(false) && separating_depth.has_value();
}

HierarchyReport verify_hierarchy_level(int m, int n, Signature signature) {
  const bool successor = signature == Signature::OrderSuccessor;
  HierarchyReport report(successor ? witness_words_suc(m, n) : witness_words(m, n));
  const Word& u = report.words.u;
  const Word& v = report.words.v;

  if (m == 1) {
    report.level_one_sentence = successor ? "Ex.a(x)" : "Ex.x=x";
    const Formula sentence = parse_formula(report.level_one_sentence, u.alphabet(), Signature::Order);
    report.level_one_u = model_check(sentence, u);
    report.level_one_v = model_check(sentence, v);
  } else {
    if (m - 1 <= n) {
      report.rankers_indistinguishable =
          (successor ? suc_ranker_equiv_alt(u, v, m - 1, n) : ranker_equiv_alt(u, v, m - 1, n)).verdict;
      report.game_indistinguishable = game_equiv_alt(u, v, m - 1, n, successor).delilah_wins;
    }
    report.rankers = separating_rankers(m, signature);
    report.r_u = report.rankers->r.eval(u);
    report.s_u = report.rankers->s.eval(u);
    report.r_v = report.rankers->r.eval(v);
    report.s_v = report.rankers->s.eval(v);
    if (report.r_u && report.s_u && report.r_v && report.s_v)
      report.order_swapped = ord(*report.r_u, *report.s_u) != ord(*report.r_v, *report.s_v);
    else
      report.order_swapped = false;
  }

  report.separation_search_bound = n + m;
  for (int depth = 1; depth <= report.separation_search_bound; ++depth) {
    if (!game_equiv_alt(u, v, std::min(m, depth), depth, successor).delilah_wins) {
      report.separating_depth = depth;
      break;
    }
  }
  return report;
}

}  // namespace fo2
