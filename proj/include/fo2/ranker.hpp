#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/word.hpp"

namespace fo2 {

/// Right is "next/first occurrence" (rendered `>`), Left is "previous/last
/// occurrence" (rendered `<`).
enum class Direction : std::uint8_t { Right, Left };

constexpr char direction_symbol(Direction d) noexcept { return d == Direction::Right ? '>' : '<'; }

/// First (Right) or last (Left) occurrence of a letter.
struct BoundaryPos {
  Direction direction;
  char letter;

  friend auto operator<=>(const BoundaryPos&, const BoundaryPos&) = default;
  friend bool operator==(const BoundaryPos&, const BoundaryPos&) = default;
};

/// First or last occurrence of `letter` with `before` immediately to its
/// left and `after` immediately to its right.
struct NeighborhoodPos {
  Direction direction;
  std::string before;
  char letter;
  std::string after;

  friend bool operator==(const NeighborhoodPos&, const NeighborhoodPos&) = default;
  friend std::strong_ordering operator<=>(const NeighborhoodPos& a, const NeighborhoodPos& b);

  /// Window width on each side.
  std::size_t left_width() const noexcept { return before.size(); }
  std::size_t right_width() const noexcept { return after.size(); }
};

/// Evaluate one step on `w`.  Without `from` this is the first/last
/// occurrence in the whole word; with `from = q` it is the first occurrence
/// strictly after q (Right) or the last strictly before q (Left).
MaybePosition eval_step(const BoundaryPos& p, std::string_view w, MaybePosition from = {});
MaybePosition eval_step(const NeighborhoodPos& p, std::string_view w, MaybePosition from = {});

inline MaybePosition eval_boundary(const BoundaryPos& p, const Word& w, MaybePosition from = {}) {
  return eval_step(p, w.letters(), from);
}

/// Does the window s·a·t of `p` occur centred at position i of `w`?
bool neighborhood_matches(const NeighborhoodPos& p, std::string_view w, Position i) noexcept;

namespace detail {
inline Direction step_direction(const BoundaryPos& p) { return p.direction; }
inline Direction step_direction(const NeighborhoodPos& p) { return p.direction; }
void validate_steps(std::span<const BoundaryPos> steps);
void validate_steps(std::span<const NeighborhoodPos> steps);
}  // namespace detail

/// A non-empty sequence of steps evaluated left to right, each step starting
/// from the position the previous one reached.  Undefinedness propagates.
template <class Step>
class BasicRanker {
 public:
  using step_type = Step;

  explicit BasicRanker(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("a ranker needs at least one step");
    detail::validate_steps(steps_);
  }

  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  const Step& back() const noexcept { return steps_.back(); }

  /// First k steps, 1 <= k <= size().
  BasicRanker prefix(std::size_t k) const {
    if (k < 1 || k > steps_.size())
      throw std::out_of_range("prefix length " + std::to_string(k) + " outside [1, " +
                              std::to_string(steps_.size()) + "]");
    return BasicRanker(std::vector<Step>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  BasicRanker extended(Step step) const {
    std::vector<Step> steps = steps_;
    steps.push_back(std::move(step));
    return BasicRanker(std::move(steps));
  }

  /// Number of maximal runs of equal direction.
  int alternation_blocks() const noexcept {
    int blocks = 1;
    for (std::size_t i = 1; i < steps_.size(); ++i) {
      if (detail::step_direction(steps_[i]) != detail::step_direction(steps_[i - 1])) ++blocks;
    }
    return blocks;
  }

  Direction final_direction() const noexcept { return detail::step_direction(steps_.back()); }

  MaybePosition eval(std::string_view w) const {
    MaybePosition pos;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      pos = eval_step(steps_[i], w, i == 0 ? MaybePosition{} : pos);
      if (!pos) return std::nullopt;
    }
    return pos;
  }
  MaybePosition eval(const Word& w) const { return eval(w.letters()); }

  friend bool operator==(const BasicRanker&, const BasicRanker&) = default;

  /// Canonical order: shorter first, then lexicographic by step.
  friend std::strong_ordering operator<=>(const BasicRanker& a, const BasicRanker& b) {
    if (auto c = a.steps_.size() <=> b.steps_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(),
                                                  b.steps_.begin(), b.steps_.end());
  }

 private:
  std::vector<Step> steps_;
};

using Ranker = BasicRanker<BoundaryPos>;
using SucRanker = BasicRanker<NeighborhoodPos>;

/// Successor rankers proper let step i (1-indexed) look at most i-1 letters
/// to either side.  Wider steps still evaluate, but fall outside the
/// enumerated sets and the synthesis depth bound.
bool within_width_bound(const SucRanker& r) noexcept;

/// Plain ranker viewed as a successor ranker with empty neighborhoods.
SucRanker as_suc_ranker(const Ranker& r);

/// `>a<b>c` syntax.
Ranker parse_ranker(std::string_view text);
/// `>[s|a|t]` syntax; plain `>a` steps are accepted as empty neighborhoods.
SucRanker parse_suc_ranker(std::string_view text);

std::string to_string(const BoundaryPos& p);
std::string to_string(const NeighborhoodPos& p);
std::string to_string(const Ranker& r);
std::string to_string(const SucRanker& r);

/// Throws std::invalid_argument if the ranker mentions a letter outside
/// `alphabet`.
void check_letters(const Ranker& r, const Alphabet& alphabet);
void check_letters(const SucRanker& r, const Alphabet& alphabet);

/// Selection over a realized set by length, block count and final direction.
struct RankerFilter {
  std::optional<std::size_t> min_length;
  std::optional<std::size_t> max_length;
  std::optional<int> exact_blocks;
  std::optional<int> max_blocks;
  std::optional<Direction> final_direction;

  template <class R>
  bool matches(const R& r) const {
    if (min_length && r.size() < *min_length) return false;
    if (max_length && r.size() > *max_length) return false;
    if (exact_blocks || max_blocks) {
      int blocks = r.alternation_blocks();
      if (exact_blocks && blocks != *exact_blocks) return false;
      if (max_blocks && blocks > *max_blocks) return false;
    }
    if (final_direction && r.final_direction() != *final_direction) return false;
    return true;
  }
};

template <class R>
struct Realized {
  R ranker;
  Position position;
};

/// Every ranker of bounded length (and optionally bounded block count) that
/// is defined on a fixed word, with the position it points to.  Entries are
/// kept in canonical ranker order.
template <class R>
class RealizedSet {
 public:
  using Entry = Realized<R>;

  RealizedSet() = default;
  explicit RealizedSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.ranker < b.ranker; });
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  MaybePosition find(const R& r) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                               [](const Entry& e, const R& key) { return e.ranker < key; });
    if (it == entries_.end() || !(it->ranker == r)) return std::nullopt;
    return it->position;
  }
  bool contains(const R& r) const { return find(r).has_value(); }

  std::vector<Entry> select(const RankerFilter& filter) const {
    std::vector<Entry> out;
    for (const auto& e : entries_) {
      if (filter.matches(e.ranker)) out.push_back(e);
    }
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

inline constexpr std::size_t kDefaultRealizedCap = 200'000;

/// All rankers of length <= n (and <= max_blocks blocks) defined on `w`.
/// Grows rankers one step at a time from defined prefixes only.  Throws
/// ResourceError once more than `cap` rankers are realized.
RealizedSet<Ranker> realized_rankers(const Word& w, int n, std::optional<int> max_blocks = {},
                                     std::size_t cap = kDefaultRealizedCap);

/// Successor-ranker analogue; neighborhoods are harvested from windows that
/// actually occur in `w`.
RealizedSet<SucRanker> realized_suc_rankers(const Word& w, int n, std::optional<int> max_blocks = {},
                                            std::size_t cap = kDefaultRealizedCap);

}  // namespace fo2
