#include "fo2/synthesis.hpp"

#include <stdexcept>

namespace fo2 {

const char* to_string(Relation rel) noexcept {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

namespace {

// An absent formula stands for `true`; keeps synthesized output free of
// vacuous conjuncts.
using Opt = std::optional<Formula>;

Formula and_opt(Formula a, const Opt& b) { return b ? Formula::conj(std::move(a), *b) : a; }

Formula match_step(const BoundaryPos& p, Var v) { return Formula::letter(p.letter, v); }

// The letters `t` sit immediately right of v (or `s` immediately left when
// leftwards).  Chains alternate the two variables, depth = |letters|.
Opt window_chain(std::string_view letters, Var v, bool rightwards) {
  if (letters.empty()) return std::nullopt;
  const Var o = other(v);
  const char c = rightwards ? letters.front() : letters.back();
  const std::string_view rest = rightwards ? letters.substr(1) : letters.substr(0, letters.size() - 1);
  Formula link = rightwards ? Formula::suc(v, o) : Formula::suc(o, v);
  Formula body = and_opt(Formula::conj(std::move(link), Formula::letter(c, o)), window_chain(rest, o, rightwards));
  return Formula::exists(o, std::move(body));
}

Formula match_step(const NeighborhoodPos& p, Var v) {
  Formula f = Formula::letter(p.letter, v);
  f = and_opt(std::move(f), window_chain(p.before, v, false));
  return and_opt(std::move(f), window_chain(p.after, v, true));
}

template <class Step>
struct Synth {
  std::span<const Step> steps;

  Opt prefix_gt(std::size_t k, Var i) const { return k == 0 ? Opt{} : Opt{gt(k, i)}; }
  Opt prefix_lt(std::size_t k, Var i) const { return k == 0 ? Opt{} : Opt{lt(k, i)}; }

  // Holds at i iff the first k steps are defined and i > r_k(w).
  Formula gt(std::size_t k, Var i) const {
    const Step& p = steps[k - 1];
    const Var z = other(i);
    if (detail::step_direction(p) == Direction::Right) {
      Formula inner = Formula::conj(match_step(p, z), Formula::less(z, i));
      return Formula::exists(z, and_opt(std::move(inner), prefix_gt(k - 1, z)));
    }
    Formula defined = Formula::exists(z, and_opt(match_step(p, z), prefix_lt(k - 1, z)));
    Formula blocked = Formula::exists(
        z, and_opt(Formula::conj(match_step(p, z), Formula::negation(Formula::less(z, i))), prefix_lt(k - 1, z)));
    return Formula::conj(std::move(defined), Formula::negation(std::move(blocked)));
  }

  // Holds at i iff the first k steps are defined and i < r_k(w).
  Formula lt(std::size_t k, Var i) const {
    const Step& p = steps[k - 1];
    const Var z = other(i);
    if (detail::step_direction(p) == Direction::Left) {
      Formula inner = Formula::conj(match_step(p, z), Formula::less(i, z));
      return Formula::exists(z, and_opt(std::move(inner), prefix_lt(k - 1, z)));
    }
    Formula defined = Formula::exists(z, and_opt(match_step(p, z), prefix_gt(k - 1, z)));
    Formula blocked = Formula::exists(
        z, and_opt(Formula::conj(match_step(p, z), Formula::negation(Formula::less(i, z))), prefix_gt(k - 1, z)));
    return Formula::conj(std::move(defined), Formula::negation(std::move(blocked)));
  }

  Formula defined(Var bound = Var::X) const {
    const Step& p = steps.back();
    const std::size_t k = steps.size();
    Opt rest = detail::step_direction(p) == Direction::Right ? prefix_gt(k - 1, bound) : prefix_lt(k - 1, bound);
    return Formula::exists(bound, and_opt(match_step(p, bound), rest));
  }

  Formula comparison(Relation rel, Var i) const {
    const std::size_t k = steps.size();
    switch (rel) {
      case Relation::Greater: return gt(k, i);
      case Relation::Less: return lt(k, i);
      case Relation::LessEq: return Formula::conj(defined(other(i)), Formula::negation(gt(k, i)));
      case Relation::GreaterEq: return Formula::conj(defined(other(i)), Formula::negation(lt(k, i)));
    }
    throw std::logic_error("unhandled relation");
  }

  Formula position() const {
    const Step& p = steps.back();
    const std::size_t k = steps.size();
    const bool right = detail::step_direction(p) == Direction::Right;
    auto before_prefix = [&](Var v) { return right ? prefix_gt(k - 1, v) : prefix_lt(k - 1, v); };
    Formula here = and_opt(match_step(p, Var::X), before_prefix(Var::X));
    Formula earlier = Formula::conj(right ? Formula::less(Var::Y, Var::X) : Formula::less(Var::X, Var::Y),
                                    match_step(p, Var::Y));
    Opt prev = before_prefix(Var::Y);
    Formula none = prev ? Formula::implies(std::move(earlier), Formula::negation(*prev))
                        : Formula::negation(std::move(earlier));
    return Formula::conj(std::move(here), Formula::forall(Var::Y, std::move(none)));
  }
};

template <class R>
Synth<typename R::step_type> synth_for(const R& r) {
  return {std::span<const typename R::step_type>(r.steps())};
}

}  // namespace

Formula synth_comparison(const Ranker& r, Relation rel, Var free) { return synth_for(r).comparison(rel, free); }
Formula synth_comparison(const SucRanker& r, Relation rel, Var free) {
  return synth_for(r).comparison(rel, free);
}
Formula synth_definedness(const Ranker& r) { return synth_for(r).defined(); }
Formula synth_definedness(const SucRanker& r) { return synth_for(r).defined(); }
Formula synth_position(const Ranker& r) { return synth_for(r).position(); }
Formula synth_position(const SucRanker& r) { return synth_for(r).position(); }

UniquePositionReport unique_position_positions(const Formula& f, std::span<const Word> corpus) {
  const FormulaMetrics m = metrics(f);
  if (!m.free_x || m.free_y)
    throw std::invalid_argument("unique-position check needs a formula whose only free variable is x");
  UniquePositionReport report;
  report.ranker_length = std::max(1, m.quantifier_depth);
  for (const Word& w : corpus) {
    UniquePositionReport::Entry e{w, {}, std::nullopt};
    for (Position i = 1; i <= w.length(); ++i) {
      if (model_check(f, w, i)) e.positions.push_back(i);
    }
    if (e.positions.size() >= 2) report.unique = false;
    if (e.positions.size() == 1) {
      const auto realized = realized_rankers(w, report.ranker_length);
      bool hit = false;
      for (const auto& entry : realized.entries()) hit = hit || entry.position == e.positions.front();
      e.ranker_position = hit;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace fo2
