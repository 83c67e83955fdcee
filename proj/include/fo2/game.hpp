#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "fo2/word.hpp"

namespace fo2 {

enum class Side : std::uint8_t { None, U, V };
enum class Pebble : std::uint8_t { X, Y };

const char* to_string(Side s) noexcept;
const char* to_string(Pebble p) noexcept;

/// Two-pebble game position.  A pebble is placed on u iff its mate is placed
/// on v.  `switch_budget` empty means Samson may change sides freely.
struct GameConfig {
  std::string u;
  std::string v;
  MaybePosition x_u, y_u, x_v, y_v;
  int depth_left = 0;
  std::optional<int> switch_budget;
  Side last_side = Side::None;
  bool with_successor = false;
};

struct SamsonMove {
  Side side;
  Pebble pebble;
  Position position;

  friend bool operator==(const SamsonMove&, const SamsonMove&) = default;
};

struct GameVerdict {
  bool delilah_wins = true;
  /// Samson's first winning move in the order side U before V, pebble x
  /// before y, positions ascending.  Absent when Delilah wins, and when the
  /// starting configuration already violates the partial isomorphism.
  std::optional<SamsonMove> first_winning_move;
  std::size_t states = 0;
};

inline constexpr std::size_t kDefaultGameCap = 5'000'000;
/// Longest word the packed state key supports.
inline constexpr Position kMaxGameWordLength = 4095;

/// Letters agree on placed pairs and, when both pairs are placed, the
/// (successor) order type of x and y agrees across the words.
bool partial_iso(const GameConfig& c) noexcept;

/// Exact memoized search from `c`.  `start_side` forces the side of the first
/// move only.  Throws ResourceError when more than `cap` states are stored,
/// std::invalid_argument on malformed configurations.
GameVerdict solve_game(const GameConfig& c, std::optional<Side> start_side = {},
                       std::size_t cap = kDefaultGameCap);

/// n-move game from the empty configuration with unlimited side switches.
GameVerdict game_equiv(const Word& u, const Word& v, int n, bool with_successor = false,
                       std::size_t cap = kDefaultGameCap);

/// n-move game in which Samson may change sides at most m-1 times.  m = 0
/// admits no move at all.
GameVerdict game_equiv_alt(const Word& u, const Word& v, int m, int n, bool with_successor = false,
                           std::optional<Side> start_side = {}, std::size_t cap = kDefaultGameCap);

/// Game from (u, i1, i2) versus (v, j1, j2): x starts on i1/j1, y on i2/j2.
GameVerdict game_equiv_general(const Word& u, Position i1, Position i2, const Word& v, Position j1, Position j2,
                               int n, std::optional<int> m = {}, std::optional<Side> start_side = {},
                               bool with_successor = false, std::size_t cap = kDefaultGameCap);

}  // namespace fo2
