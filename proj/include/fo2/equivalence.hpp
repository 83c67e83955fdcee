#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fo2/formula.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

enum class FailedCondition : std::uint8_t { None, Definedness, Order, CrossDirection };

/// "NONE", "DEFINEDNESS", "ORDER" or "CROSS-DIRECTION".
const char* to_string(FailedCondition c) noexcept;

struct RankerWitness {
  std::string ranker;
  MaybePosition pos_u;
  MaybePosition pos_v;

  friend bool operator==(const RankerWitness&, const RankerWitness&) = default;
};

/// Outcome of a structure-theorem check: the first violated condition in
/// the order definedness, order, cross-direction, with the ranker(s) that
/// violate it.
struct EquivReport {
  int n = 0;
  std::optional<int> m;
  Signature signature = Signature::Order;
  bool verdict = true;
  FailedCondition failed = FailedCondition::None;
  std::vector<RankerWitness> witnesses;
};

/// u and v agree on all FO²[<] sentences of depth <= n, decided through
/// ranker definedness (length <= n) and order types against rankers of
/// length <= n-1.  Throws std::invalid_argument on n < 1 or different
/// alphabets, ResourceError from enumeration.
EquivReport ranker_equiv(const Word& u, const Word& v, int n);

/// As ranker_equiv, restricted to sentences with at most m quantifier
/// blocks.  Needs 1 <= m <= n.
EquivReport ranker_equiv_alt(const Word& u, const Word& v, int m, int n);

/// Successor-signature versions: successor rankers and successor order types.
EquivReport suc_ranker_equiv(const Word& u, const Word& v, int n);
EquivReport suc_ranker_equiv_alt(const Word& u, const Word& v, int m, int n);

/// Checks that equivalence with |alphabet|+1 quantifier blocks (capped at n)
/// implies full depth-n equivalence.  Returns false on a counterexample.
bool alphabet_collapse_check(const Word& u, const Word& v, int n);

}  // namespace fo2
