#include "fo2/game.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fo2/errors.hpp"

namespace fo2 {

const char* to_string(Side s) noexcept {
  switch (s) {
    case Side::None: return "none";
    case Side::U: return "u";
    case Side::V: return "v";
  }
  return "?";
}

const char* to_string(Pebble p) noexcept { return p == Pebble::X ? "x" : "y"; }

bool partial_iso(const GameConfig& c) noexcept {
  auto letter = [](const std::string& w, Position i) { return w[static_cast<std::size_t>(i - 1)]; };
  if (c.x_u && letter(c.u, *c.x_u) != letter(c.v, *c.x_v)) return false;
  if (c.y_u && letter(c.u, *c.y_u) != letter(c.v, *c.y_v)) return false;
  if (c.x_u && c.y_u) {
    if (c.with_successor) return sucord(*c.x_u, *c.y_u) == sucord(*c.x_v, *c.y_v);
    return ord(*c.x_u, *c.y_u) == ord(*c.x_v, *c.y_v);
  }
  return true;
}

namespace {

constexpr int kUnbounded = 63;

// Positions use 0 for "unset".
struct State {
  std::array<Position, 4> pos;  // x_u, y_u, x_v, y_v
  int depth;
  int budget;  // kUnbounded for no limit
  Side last;
};

class Solver {
 public:
  Solver(const GameConfig& c, std::size_t cap) : u_(c.u), v_(c.v), successor_(c.with_successor), cap_(cap) {
    index(u_, by_letter_u_);
    index(v_, by_letter_v_);
  }

  bool iso(const State& s) const {
    auto letter = [](const std::string& w, Position i) { return w[static_cast<std::size_t>(i - 1)]; };
    if (s.pos[0] && letter(u_, s.pos[0]) != letter(v_, s.pos[2])) return false;
    if (s.pos[1] && letter(u_, s.pos[1]) != letter(v_, s.pos[3])) return false;
    if (s.pos[0] && s.pos[1]) {
      if (successor_) return sucord(s.pos[0], s.pos[1]) == sucord(s.pos[2], s.pos[3]);
      return ord(s.pos[0], s.pos[1]) == ord(s.pos[2], s.pos[3]);
    }
    return true;
  }

  // True iff Samson wins from s.
  bool samson_wins(const State& s) {
    if (!iso(s)) return true;
    if (s.depth == 0) return false;
    const std::uint64_t key = pack(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for_each_move(s, std::nullopt, [&](const SamsonMove& m) {
      result = move_wins(s, m);
      return result;
    });
    if (memo_.size() >= cap_) throw ResourceError("game state cap", cap_);
    memo_.emplace(key, result);
    return result;
  }

  // Calls f on Samson's legal moves in canonical order until f returns true.
  template <class F>
  void for_each_move(const State& s, std::optional<Side> forced, F&& f) const {
    const bool fresh = s.pos[0] == 0 && s.pos[1] == 0;
    for (Side side : {Side::U, Side::V}) {
      if (forced && side != *forced) continue;
      if (s.budget != kUnbounded && s.last != Side::None && side != s.last && s.budget == 0) continue;
      const auto len = static_cast<Position>(side == Side::U ? u_.size() : v_.size());
      for (Pebble p : {Pebble::X, Pebble::Y}) {
        // With nothing placed the two pebble pairs are interchangeable.
        if (fresh && p == Pebble::Y) continue;
        for (Position i = 1; i <= len; ++i) {
          if (f(SamsonMove{side, p, i})) return;
        }
      }
    }
  }

  // Samson's move wins iff every same-letter reply by Delilah loses.
  bool move_wins(const State& s, const SamsonMove& m) {
    State next = s;
    next.depth = s.depth - 1;
    if (s.budget != kUnbounded) {
      if (s.last != Side::None && m.side != s.last) --next.budget;
      next.last = m.side;
    }
    const bool on_u = m.side == Side::U;
    const std::string& from = on_u ? u_ : v_;
    const auto& replies = (on_u ? by_letter_v_ : by_letter_u_)[static_cast<unsigned char>(
        from[static_cast<std::size_t>(m.position - 1)])];
    const int pebble = m.pebble == Pebble::X ? 0 : 1;
    const int samson_slot = (on_u ? 0 : 2) + pebble;
    const int delilah_slot = (on_u ? 2 : 0) + pebble;
    next.pos[static_cast<std::size_t>(samson_slot)] = m.position;
    for (Position j : replies) {
      next.pos[static_cast<std::size_t>(delilah_slot)] = j;
      if (!samson_wins(next)) return false;
    }
    return true;
  }

  std::size_t states() const noexcept { return memo_.size(); }

 private:
  static void index(const std::string& w, std::array<std::vector<Position>, 256>& out) {
    for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<unsigned char>(w[i])].push_back(static_cast<Position>(i + 1));
  }

  static std::uint64_t pack(const State& s) {
    std::uint64_t k = 0;
    for (Position p : s.pos) k = (k << 12) | static_cast<std::uint64_t>(p);
    k = (k << 6) | static_cast<std::uint64_t>(s.depth);
    k = (k << 6) | static_cast<std::uint64_t>(s.budget);
    k = (k << 2) | static_cast<std::uint64_t>(s.budget == kUnbounded ? Side::None : s.last);
    return k;
  }

  const std::string& u_;
  const std::string& v_;
  bool successor_;
  std::size_t cap_;
  std::array<std::vector<Position>, 256> by_letter_u_;
  std::array<std::vector<Position>, 256> by_letter_v_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

void validate(const GameConfig& c) {
  if (c.u.size() > static_cast<std::size_t>(kMaxGameWordLength) ||
      c.v.size() > static_cast<std::size_t>(kMaxGameWordLength))
    throw std::invalid_argument("game words are limited to " + std::to_string(kMaxGameWordLength) + " letters");
  if (c.depth_left < 0 || c.depth_left > 62) throw std::invalid_argument("game depth must lie in [0, 62]");
  if (c.switch_budget && (*c.switch_budget < 0 || *c.switch_budget > 62))
    throw std::invalid_argument("switch budget must lie in [0, 62]");
  if (c.x_u.has_value() != c.x_v.has_value() || c.y_u.has_value() != c.y_v.has_value())
    throw std::invalid_argument("pebbles must be placed in pairs");
  auto check = [](MaybePosition p, const std::string& w) {
    if (p && (*p < 1 || *p > static_cast<Position>(w.size())))
      throw std::invalid_argument("pebble position " + std::to_string(*p) + " outside the word");
  };
  check(c.x_u, c.u);
  check(c.y_u, c.u);
  check(c.x_v, c.v);
  check(c.y_v, c.v);
}

}  // namespace

GameVerdict solve_game(const GameConfig& c, std::optional<Side> start_side, std::size_t cap) {
  validate(c);
  GameVerdict verdict;
  if (!partial_iso(c)) {
    verdict.delilah_wins = false;
    return verdict;
  }
  Solver solver(c, cap);
  State root{{c.x_u.value_or(0), c.y_u.value_or(0), c.x_v.value_or(0), c.y_v.value_or(0)},
             c.depth_left,
             c.switch_budget.value_or(kUnbounded),
             c.last_side};
  if (root.depth > 0) {
    std::optional<Side> forced = start_side && *start_side != Side::None ? start_side : std::nullopt;
    solver.for_each_move(root, forced, [&](const SamsonMove& m) {
      if (!solver.move_wins(root, m)) return false;
      verdict.delilah_wins = false;
      verdict.first_winning_move = m;
      return true;
    });
  }
  verdict.states = solver.states();
  return verdict;
}

GameVerdict game_equiv(const Word& u, const Word& v, int n, bool with_successor, std::size_t cap) {
  if (n < 0) throw std::invalid_argument("game length must be >= 0");
  GameConfig c;
  c.u = u.letters();
  c.v = v.letters();
  c.depth_left = n;
  c.with_successor = with_successor;
  return solve_game(c, std::nullopt, cap);
}

GameVerdict game_equiv_alt(const Word& u, const Word& v, int m, int n, bool with_successor,
                           std::optional<Side> start_side, std::size_t cap) {
  if (m < 0 || n < 0 || m > n) throw std::invalid_argument("alternation game needs 0 <= m <= n");
  GameConfig c;
  c.u = u.letters();
  c.v = v.letters();
  c.depth_left = m == 0 ? 0 : n;
  c.switch_budget = m == 0 ? 0 : m - 1;
  c.with_successor = with_successor;
  return solve_game(c, start_side, cap);
}

GameVerdict game_equiv_general(const Word& u, Position i1, Position i2, const Word& v, Position j1, Position j2,
                               int n, std::optional<int> m, std::optional<Side> start_side, bool with_successor,
                               std::size_t cap) {
  if (n < 0) throw std::invalid_argument("game length must be >= 0");
  if (m && (*m < 0 || *m > n)) throw std::invalid_argument("alternation game needs 0 <= m <= n");
  GameConfig c;
  c.u = u.letters();
  c.v = v.letters();
  c.x_u = i1;
  c.y_u = i2;
  c.x_v = j1;
  c.y_v = j2;
  c.depth_left = (m && *m == 0) ? 0 : n;
  if (m) c.switch_budget = *m == 0 ? 0 : *m - 1;
  c.with_successor = with_successor;
  return solve_game(c, start_side, cap);
}

}  // namespace fo2
