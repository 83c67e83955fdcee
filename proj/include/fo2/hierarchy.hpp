#pragma once

#include <optional>
#include <string>

#include "fo2/formula.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

/// The level-m witness pair u_{m,n}, v_{m,n} separating m quantifier blocks
/// from m-1.  Letters a_0, a_1, ... render as a, b, c, ...; in the successor
/// variant `b` is the padding letter and a_i for i >= 1 renders as the
/// (i+2)-th letter (c, d, ...).
struct WitnessPair {
  int m = 0;
  int n = 0;
  Signature signature = Signature::Order;
  Word u;
  Word v;
};

/// Letter used for a_i under the given signature.
char witness_letter(int i, Signature signature);

/// Padding letter of the successor variant.
inline constexpr char kPadLetter = 'b';

/// Order-signature witness words.  u_{1,n} = a, v_{1,n} = empty,
/// u_{2,n} = a(ba)^{2n}, v_{2,n} = (ba)^{2n}; odd levels prepend
/// (a_0...a_{2i})^n, even levels append (a_{2i+1}...a_0)^n.  Deleting one a
/// from u gives v.  Throws std::invalid_argument unless 1 <= m <= 24, n >= 1.
WitnessPair witness_words(int m, int n);

/// Successor-signature witness words: the same construction with every
/// letter separated by runs of exactly 2n pad letters.  Deleting the factor
/// a_0 b^{2n} from u gives v.  Same preconditions as witness_words.
WitnessPair witness_words_suc(int m, int n);

struct SeparatingRankerPair {
  Ranker r;
  Ranker s;
};

/// r_2 = >a_0, s_2 = >a_1; odd levels prefix <a_{2i}, even levels prefix
/// >a_{2i+1}.  Both have m-1 direction blocks.  Throws for m < 2 or m > 24.
SeparatingRankerPair separating_rankers(int m, Signature signature = Signature::Order);

struct HierarchyReport {
  explicit HierarchyReport(WitnessPair w) : words(std::move(w)) {}

  WitnessPair words;

  // Indistinguishability with m-1 blocks (levels m >= 2 only).
  std::optional<bool> rankers_indistinguishable;
  std::optional<bool> game_indistinguishable;

  // Separation at level m >= 2: the separating rankers evaluated on both words.
  std::optional<SeparatingRankerPair> rankers;
  MaybePosition r_u, s_u, r_v, s_v;
  std::optional<bool> order_swapped;

  // Level 1: a quantifier-free-bodied sentence true on u only.  Ex.x=x for
  // the order signature; Ex.a(x) in the successor variant, where v is a
  // non-empty pad run.
  std::string level_one_sentence;
  std::optional<bool> level_one_u, level_one_v;

  // Smallest depth n' <= separation_search_bound at which Samson wins with
  // at most m blocks, if any.
  std::optional<int> separating_depth;
  int separation_search_bound = 0;

  /// All checks that apply to this level came out as predicted.
  bool confirmed() const;
};

/// Generates the witness pair for level m and checks it: equivalent with
/// m-1 blocks at depth n (ranker decider and game), and separated with m
/// blocks (separating rankers swap order, and the game finds a Samson win at
/// some depth n' <= n+m).  Propagates ResourceError from the game, which
/// the successor words reach from m = 3, n = 3 on.
HierarchyReport verify_hierarchy_level(int m, int n, Signature signature = Signature::Order);

}  // namespace fo2
