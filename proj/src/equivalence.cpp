#include "fo2/equivalence.hpp"

#include <stdexcept>

namespace fo2 {

const char* to_string(FailedCondition c) noexcept {
  switch (c) {
    case FailedCondition::None: return "NONE";
    case FailedCondition::Definedness: return "DEFINEDNESS";
    case FailedCondition::Order: return "ORDER";
    case FailedCondition::CrossDirection: return "CROSS-DIRECTION";
  }
  return "?";
}

namespace {

void check_words(const Word& u, const Word& v, int m, int n) {
  if (n < 1) throw std::invalid_argument("equivalence depth n must be >= 1");
  if (m < 1 || m > n) throw std::invalid_argument("alternation bound needs 1 <= m <= n");
  if (!(u.alphabet() == v.alphabet()))
    throw std::invalid_argument("words are over different alphabets {" + u.alphabet().letters() + "} and {" +
                                v.alphabet().letters() + "}");
}

template <class R>
RankerWitness witness(const R& r, MaybePosition pu, MaybePosition pv) {
  return {to_string(r), pu, pv};
}

// Which r' a given r is compared with, and which condition a mismatch breaks.
struct PairRule {
  FailedCondition condition;
  RankerFilter partner;
  bool require_different_direction = false;
};

template <class R, class Compare>
EquivReport decide(const RealizedSet<R>& ru, const RealizedSet<R>& rv, const std::vector<PairRule>& rules,
                   Compare compare, EquivReport report) {
  // Definedness: the two realized sets must hold the same rankers.
  const auto& eu = ru.entries();
  const auto& ev = rv.entries();
  std::size_t i = 0, j = 0;
  while (i < eu.size() || j < ev.size()) {
    if (j == ev.size() || (i < eu.size() && eu[i].ranker < ev[j].ranker)) {
      report.verdict = false;
      report.failed = FailedCondition::Definedness;
      report.witnesses = {witness(eu[i].ranker, eu[i].position, std::nullopt)};
      return report;
    }
    if (i == eu.size() || ev[j].ranker < eu[i].ranker) {
      report.verdict = false;
      report.failed = FailedCondition::Definedness;
      report.witnesses = {witness(ev[j].ranker, std::nullopt, ev[j].position)};
      return report;
    }
    ++i;
    ++j;
  }
  // Equal sets in equal canonical order: entry k is the same ranker on both sides.
  for (const auto& rule : rules) {
    for (std::size_t a = 0; a < eu.size(); ++a) {
      for (std::size_t b = 0; b < eu.size(); ++b) {
        if (!rule.partner.matches(eu[b].ranker)) continue;
        if (rule.require_different_direction && eu[a].ranker.final_direction() == eu[b].ranker.final_direction())
          continue;
        if (compare(eu[a].position, eu[b].position) == compare(ev[a].position, ev[b].position)) continue;
        report.verdict = false;
        report.failed = rule.condition;
        report.witnesses = {witness(eu[a].ranker, eu[a].position, ev[a].position),
                            witness(eu[b].ranker, eu[b].position, ev[b].position)};
        return report;
      }
    }
  }
  return report;
}

std::vector<PairRule> plain_rules(int n) {
  PairRule order{FailedCondition::Order, {}};
  order.partner.max_length = static_cast<std::size_t>(n - 1);
  return {order};
}

std::vector<PairRule> alt_rules(int m, int n) {
  std::vector<PairRule> rules;
  if (m >= 2 && n >= 2) {
    PairRule order{FailedCondition::Order, {}};
    order.partner.max_length = static_cast<std::size_t>(n - 1);
    order.partner.max_blocks = m - 1;
    rules.push_back(order);
  }
  PairRule cross{FailedCondition::CrossDirection, {}, true};
  cross.partner.max_length = static_cast<std::size_t>(n - 1);
  rules.push_back(cross);
  return rules;
}

constexpr auto kOrd = [](Position a, Position b) { return ord(a, b); };
constexpr auto kSucord = [](Position a, Position b) { return sucord(a, b); };

EquivReport base(int n, std::optional<int> m, Signature s) {
  EquivReport r;
  r.n = n;
  r.m = m;
  r.signature = s;
  return r;
}

}  // namespace

EquivReport ranker_equiv(const Word& u, const Word& v, int n) {
  check_words(u, v, 1, n);
  return decide(realized_rankers(u, n), realized_rankers(v, n), plain_rules(n), kOrd,
                base(n, std::nullopt, Signature::Order));
}

EquivReport ranker_equiv_alt(const Word& u, const Word& v, int m, int n) {
  check_words(u, v, m, n);
  return decide(realized_rankers(u, n, m), realized_rankers(v, n, m), alt_rules(m, n), kOrd,
                base(n, m, Signature::Order));
}

EquivReport suc_ranker_equiv(const Word& u, const Word& v, int n) {
  check_words(u, v, 1, n);
  return decide(realized_suc_rankers(u, n), realized_suc_rankers(v, n), plain_rules(n), kSucord,
                base(n, std::nullopt, Signature::OrderSuccessor));
}

EquivReport suc_ranker_equiv_alt(const Word& u, const Word& v, int m, int n) {
  check_words(u, v, m, n);
  return decide(realized_suc_rankers(u, n, m), realized_suc_rankers(v, n, m), alt_rules(m, n), kSucord,
                base(n, m, Signature::OrderSuccessor));
}

bool alphabet_collapse_check(const Word& u, const Word& v, int n) {
  const int m = std::min(static_cast<int>(u.alphabet().size()) + 1, n);
  return !ranker_equiv_alt(u, v, m, n).verdict || ranker_equiv(u, v, n).verdict;
}

}  // namespace fo2
