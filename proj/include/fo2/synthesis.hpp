#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fo2/formula.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

/// Relation between a free position i and the position r(w).
enum class Relation : std::uint8_t { Less, LessEq, Greater, GreaterEq };

const char* to_string(Relation rel) noexcept;

/// Formula with free variable `free` that holds at i iff r is defined on w
/// and `i rel r(w)`.  Quantifier depth <= |r|.
Formula synth_comparison(const Ranker& r, Relation rel, Var free = Var::X);
Formula synth_comparison(const SucRanker& r, Relation rel, Var free = Var::X);

/// Sentence true exactly on the words where r is defined.  Depth <= |r|.
Formula synth_definedness(const Ranker& r);
Formula synth_definedness(const SucRanker& r);

/// Formula with free variable x that holds exactly at r(w).  Depth <= |r|.
Formula synth_position(const Ranker& r);
Formula synth_position(const SucRanker& r);

/// Satisfying positions of a one-variable formula across a corpus.
struct UniquePositionReport {
  struct Entry {
    Word word;
    std::vector<Position> positions;
    /// Set when exactly one position holds: whether some ranker of length
    /// <= max(1, quantifier depth) points to it.
    std::optional<bool> ranker_position;
  };

  bool unique = true;
  int ranker_length = 1;
  std::vector<Entry> entries;
};

/// Requires the free variables of `f` to be exactly {x}; throws
/// std::invalid_argument otherwise.
UniquePositionReport unique_position_positions(const Formula& f, std::span<const Word> corpus);

}  // namespace fo2
