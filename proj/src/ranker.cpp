#include "fo2/ranker.hpp"

#include <cctype>
#include <set>

#include "fo2/errors.hpp"

namespace fo2 {

std::strong_ordering operator<=>(const NeighborhoodPos& a, const NeighborhoodPos& b) {
  if (auto c = a.direction <=> b.direction; c != 0) return c;
  if (auto c = a.letter <=> b.letter; c != 0) return c;
  if (auto c = a.before.size() <=> b.before.size(); c != 0) return c;
  if (auto c = a.before <=> b.before; c != 0) return c;
  if (auto c = a.after.size() <=> b.after.size(); c != 0) return c;
  return a.after <=> b.after;
}

MaybePosition eval_step(const BoundaryPos& p, std::string_view w, MaybePosition from) {
  const auto len = static_cast<Position>(w.size());
  if (p.direction == Direction::Right) {
    for (Position i = from ? *from + 1 : 1; i <= len; ++i) {
      if (w[static_cast<std::size_t>(i - 1)] == p.letter) return i;
    }
  } else {
    for (Position i = from ? *from - 1 : len; i >= 1; --i) {
      if (w[static_cast<std::size_t>(i - 1)] == p.letter) return i;
    }
  }
  return std::nullopt;
}

bool neighborhood_matches(const NeighborhoodPos& p, std::string_view w, Position i) noexcept {
  const auto k = static_cast<Position>(p.before.size());
  const auto l = static_cast<Position>(p.after.size());
  const auto len = static_cast<Position>(w.size());
  if (i - k < 1 || i + l > len) return false;
  if (w[static_cast<std::size_t>(i - 1)] != p.letter) return false;
  return w.substr(static_cast<std::size_t>(i - 1 - k), p.before.size()) == p.before &&
         w.substr(static_cast<std::size_t>(i), p.after.size()) == p.after;
}

MaybePosition eval_step(const NeighborhoodPos& p, std::string_view w, MaybePosition from) {
  const auto k = static_cast<Position>(p.before.size());
  const auto l = static_cast<Position>(p.after.size());
  const auto len = static_cast<Position>(w.size());
  if (p.direction == Direction::Right) {
    const Position lo = std::max(from ? *from + 1 : 1, k + 1);
    for (Position i = lo; i <= len - l; ++i) {
      if (neighborhood_matches(p, w, i)) return i;
    }
  } else {
    const Position hi = std::min(from ? *from - 1 : len, len - l);
    for (Position i = hi; i >= k + 1; --i) {
      if (neighborhood_matches(p, w, i)) return i;
    }
  }
  return std::nullopt;
}

namespace detail {

void validate_steps(std::span<const BoundaryPos> steps) {
  for (const auto& s : steps) {
    if (!std::isalnum(static_cast<unsigned char>(s.letter)))
      throw std::invalid_argument(std::string("ranker letter '") + s.letter + "' is not alphanumeric");
  }
}

void validate_steps(std::span<const NeighborhoodPos> steps) {
  auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (!alnum(s.letter) || !std::all_of(s.before.begin(), s.before.end(), alnum) ||
        !std::all_of(s.after.begin(), s.after.end(), alnum))
      throw std::invalid_argument("successor-ranker step " + std::to_string(i + 1) +
                                  " contains a non-alphanumeric letter");
  }
}

}  // namespace detail

bool within_width_bound(const SucRanker& r) noexcept {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.steps()[i].before.size() > i || r.steps()[i].after.size() > i) return false;
  }
  return true;
}

SucRanker as_suc_ranker(const Ranker& r) {
  std::vector<NeighborhoodPos> steps;
  steps.reserve(r.size());
  for (const auto& s : r.steps()) steps.push_back({s.direction, "", s.letter, ""});
  return SucRanker(std::move(steps));
}

namespace {

class RankerLexer {
 public:
  explicit RankerLexer(std::string_view text) : text_(text) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  Direction direction() {
    skip_space();
    if (pos_ < text_.size() && (text_[pos_] == '>' || text_[pos_] == '<'))
      return text_[pos_++] == '>' ? Direction::Right : Direction::Left;
    fail("expected '>' or '<'");
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char letter() {
    skip_space();
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) return text_[pos_++];
    fail("expected a letter");
  }

  std::string letters() {
    std::string out;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, pos_,
                     "ranker syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ranker parse_ranker(std::string_view text) {
  RankerLexer lex(text);
  std::vector<BoundaryPos> steps;
  while (!lex.done()) {
    Direction d = lex.direction();
    steps.push_back({d, lex.letter()});
  }
  if (steps.empty()) lex.fail("empty ranker");
  return Ranker(std::move(steps));
}

SucRanker parse_suc_ranker(std::string_view text) {
  RankerLexer lex(text);
  std::vector<NeighborhoodPos> steps;
  while (!lex.done()) {
    NeighborhoodPos p{lex.direction(), "", '\0', ""};
    if (lex.peek('[')) {
      lex.expect('[');
      p.before = lex.letters();
      lex.expect('|');
      p.letter = lex.letter();
      lex.expect('|');
      p.after = lex.letters();
      lex.expect(']');
    } else {
      p.letter = lex.letter();
    }
    steps.push_back(std::move(p));
  }
  if (steps.empty()) lex.fail("empty ranker");
  try {
    return SucRanker(std::move(steps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::Syntax, 0, e.what());
  }
}

std::string to_string(const BoundaryPos& p) { return {direction_symbol(p.direction), p.letter}; }

std::string to_string(const NeighborhoodPos& p) {
  std::string out{direction_symbol(p.direction), '['};
  out += p.before;
  out += '|';
  out += p.letter;
  out += '|';
  out += p.after;
  out += ']';
  return out;
}

std::string to_string(const Ranker& r) {
  std::string out;
  for (const auto& s : r.steps()) out += to_string(s);
  return out;
}

std::string to_string(const SucRanker& r) {
  std::string out;
  for (const auto& s : r.steps()) out += to_string(s);
  return out;
}

void check_letters(const Ranker& r, const Alphabet& alphabet) {
  for (const auto& s : r.steps()) {
    if (!alphabet.contains(s.letter))
      throw std::invalid_argument(std::string("ranker letter '") + s.letter + "' is not in the alphabet");
  }
}

void check_letters(const SucRanker& r, const Alphabet& alphabet) {
  for (const auto& s : r.steps()) {
    auto ok = [&](char c) { return alphabet.contains(c); };
    if (!ok(s.letter) || !std::all_of(s.before.begin(), s.before.end(), ok) ||
        !std::all_of(s.after.begin(), s.after.end(), ok))
      throw std::invalid_argument("successor-ranker step " + to_string(s) + " uses a letter outside the alphabet");
  }
}

namespace {

// Breadth-first growth: level i holds the defined rankers of length i.
template <class R, class CandidateFn>
RealizedSet<R> grow(const Word& w, int n, std::optional<int> max_blocks, std::size_t cap,
                    CandidateFn candidates_for_level) {
  if (n < 1) throw std::invalid_argument("ranker length bound must be >= 1");
  if (max_blocks && *max_blocks < 1) throw std::invalid_argument("block bound must be >= 1");
  std::vector<Realized<R>> all;
  std::vector<Realized<R>> frontier;
  const std::string_view letters = w.letters();
  auto admit = [&](Realized<R> e) {
    if (all.size() >= cap) throw ResourceError("realized-ranker cap", cap);
    all.push_back(e);
    frontier.push_back(std::move(e));
  };

  for (const auto& step : candidates_for_level(1)) {
    if (auto pos = eval_step(step, letters)) admit({R({step}), *pos});
  }
  for (int level = 2; level <= n && !frontier.empty(); ++level) {
    const auto steps = candidates_for_level(level);
    std::vector<Realized<R>> previous = std::move(frontier);
    frontier.clear();
    for (const auto& e : previous) {
      for (const auto& step : steps) {
        auto pos = eval_step(step, letters, e.position);
        if (!pos) continue;
        R next = e.ranker.extended(step);
        if (max_blocks && next.alternation_blocks() > *max_blocks) continue;
        admit({std::move(next), *pos});
      }
    }
  }
  return RealizedSet<R>(std::move(all));
}

}  // namespace

RealizedSet<Ranker> realized_rankers(const Word& w, int n, std::optional<int> max_blocks, std::size_t cap) {
  std::vector<BoundaryPos> steps;
  for (Direction d : {Direction::Right, Direction::Left}) {
    for (char c : w.occurring_letters()) steps.push_back({d, c});
  }
  return grow<Ranker>(w, n, max_blocks, cap, [&](int) { return steps; });
}

RealizedSet<SucRanker> realized_suc_rankers(const Word& w, int n, std::optional<int> max_blocks,
                                            std::size_t cap) {
  const std::string& s = w.letters();
  auto windows = [&](int level) {
    // Windows (before, letter, after) with widths <= level-1 that occur in w.
    const std::size_t width = static_cast<std::size_t>(level - 1);
    std::set<NeighborhoodPos> found;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t k = 0; k <= std::min(width, i); ++k) {
        for (std::size_t l = 0; l <= std::min(width, s.size() - 1 - i); ++l) {
          for (Direction d : {Direction::Right, Direction::Left})
            found.insert({d, s.substr(i - k, k), s[i], s.substr(i + 1, l)});
        }
      }
    }
    return std::vector<NeighborhoodPos>(found.begin(), found.end());
  };
  return grow<SucRanker>(w, n, max_blocks, cap, windows);
}

}  // namespace fo2
