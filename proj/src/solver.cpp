#include "fo2/solver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "fo2/errors.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

std::int64_t small_model_bound(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("small model bound needs n >= 1 and k >= 1");
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  const std::int64_t factor = 4 * static_cast<std::int64_t>(n) + 2;
  std::int64_t b = 2 * static_cast<std::int64_t>(n);
  for (int i = 1; i < k; ++i) {
    if (b > kMax / factor) return kMax;
    b *= factor;
  }
  return b;
}

// ---------------------------------------------------------------- shrink

namespace {

std::size_t distinct_letters(std::string_view w) {
  bool seen[256] = {};
  std::size_t count = 0;
  for (unsigned char c : w) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

std::string cut_segments(std::string_view w, std::size_t limit) {
  std::string out;
  for (const Segment& s : segments(w)) out.append(std::min<std::size_t>(s.length(), limit), s.letter);
  return out;
}

// Closed 0-based index range of a maximal segment.
struct Interval {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Scanning from the left: each cut is the segment at which the remaining
// word first shows all `k` letters.
std::vector<Interval> left_cuts(const std::string& w, std::size_t k) {
  std::vector<Interval> cuts;
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool seen[256] = {};
    std::size_t count = 0, j = pos;
    for (; j < w.size(); ++j) {
      auto c = static_cast<unsigned char>(w[j]);
      if (!seen[c]) {
        seen[c] = true;
        if (++count == k) break;
      }
    }
    if (j == w.size()) break;
    std::size_t end = j;
    while (end + 1 < w.size() && w[end + 1] == w[j]) ++end;
    cuts.push_back({j, end});
    pos = end + 1;
  }
  return cuts;
}

std::vector<Interval> right_cuts(const std::string& w, std::size_t k) {
  std::string reversed(w.rbegin(), w.rend());
  std::vector<Interval> cuts;
  for (const Interval& c : left_cuts(reversed, k)) cuts.push_back({w.size() - 1 - c.last, w.size() - 1 - c.first});
  return cuts;
}

std::string shrink_letters(const std::string& w, std::size_t n);

std::string shrunk_piece(const std::string& w, std::size_t from, std::size_t to) {
  return from >= to ? std::string() : std::string(w.substr(from, to - from));
}

std::string shrink_letters(const std::string& w, std::size_t n) {
  const std::size_t k = distinct_letters(w);
  if (k <= 1) return w.size() <= 2 * n ? w : w.substr(0, n) + w.substr(w.size() - n);
  const std::string cut = cut_segments(w, 2 * n);
  const auto left = left_cuts(cut, k);
  const auto right = right_cuts(cut, k);
  auto piece = [&](std::size_t from, std::size_t to) { return shrink_letters(shrunk_piece(cut, from, to), n); };
  auto segment = [&](const Interval& s) { return cut.substr(s.first, s.last - s.first + 1); };

  std::string out;
  if (left.size() > 2 * n && right.size() > 2 * n) {
    // Keep u_1 s_1 ... u_n s_n and t_n v_n ... t_1 v_1, dropping the middle.
    const Interval& sn = left[n - 1];
    const Interval& tn = right[n - 1];
    if (!(sn.last < tn.first)) throw std::logic_error("shrink: left and right cuts overlap");
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out += piece(pos, left[i].first);
      out += segment(left[i]);
      pos = left[i].last + 1;
    }
    std::string tail;
    std::size_t end = cut.size();
    for (std::size_t i = 0; i < n; ++i) {
      tail = segment(right[i]) + piece(right[i].last + 1, end) + tail;
      end = right[i].first;
    }
    return out + tail;
  }
  // Few cuts: keep every cut segment and shrink the pieces between them.
  std::vector<Interval> all = left;
  all.insert(all.end(), right.begin(), right.end());
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.first < b.first; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::size_t pos = 0;
  for (const Interval& s : all) {
    out += piece(pos, s.first);
    out += segment(s);
    pos = s.last + 1;
  }
  return out + piece(pos, cut.size());
}

}  // namespace

Word shrink(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("shrink needs n >= 1");
  return Word(w.alphabet(), shrink_letters(w.letters(), static_cast<std::size_t>(n)));
}

// ---------------------------------------------------------------- search

const char* to_string(SatStatus s) noexcept {
  switch (s) {
    case SatStatus::Sat: return "SAT";
    case SatStatus::UnsatDefinitive: return "UNSAT_DEFINITIVE";
    case SatStatus::UnsatUpToBound: return "UNSAT_UP_TO_BOUND";
  }
  return "?";
}

namespace {

void collect_letters(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Letter: out += f.symbol(); return;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: collect_letters(f.lhs(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_letters(f.lhs(), out);
      collect_letters(f.rhs(), out);
      return;
    default: return;
  }
}

// Determines the depth-n class of a word: the realized rankers of length
// <= n and the order of each against every realized ranker of length <= n-1.
std::string class_key(const Word& w, int n) {
  const auto realized = realized_rankers(w, n);
  const auto& entries = realized.entries();
  std::string key;
  std::vector<Position> shorter;
  for (const auto& e : entries) {
    key += to_string(e.ranker);
    key += ',';
    if (e.ranker.size() < static_cast<std::size_t>(n)) shorter.push_back(e.position);
  }
  key += ';';
  for (const auto& e : entries) {
    for (Position p : shorter) key += static_cast<char>('0' + static_cast<int>(ord(e.position, p)));
  }
  return key;
}

// 128-bit fingerprint of a class key; full keys can be several kilobytes.
struct Fingerprint {
  std::uint64_t a;
  std::uint64_t b;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept { return static_cast<std::size_t>(f.a ^ (f.b * 31)); }
};

Fingerprint fingerprint(const std::string& key) {
  std::uint64_t fnv = 1469598103934665603ull;
  for (unsigned char c : key) fnv = (fnv ^ c) * 1099511628211ull;
  return {fnv, static_cast<std::uint64_t>(std::hash<std::string>{}(key))};
}

class Checker {
 public:
  Checker(const Formula& f, std::size_t cap) : f_(f), cap_(cap) {}

  bool holds(const Word& w) {
    if (++checked_ > cap_) throw ResourceError("sat search word cap", cap_);
    return model_check(f_, w);
  }
  std::size_t checked() const noexcept { return checked_; }

 private:
  const Formula& f_;
  std::size_t cap_;
  std::size_t checked_ = 0;
};

SatResult exact_length_search(const Alphabet& sigma, std::int64_t len, Checker& checker, std::size_t cap) {
  if (len < 0) throw std::invalid_argument("exact length must be >= 0");
  double total = 1;
  for (std::int64_t i = 0; i < len; ++i) total *= static_cast<double>(sigma.size());
  if (total > static_cast<double>(cap)) throw ResourceError("sat search word cap", cap);
  const std::string& letters = sigma.letters();
  std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
  SatResult result;
  result.explored_bound = len;
  while (true) {
    std::string s;
    for (std::size_t d : digits) s += letters[d];
    Word w(sigma, s);
    if (checker.holds(w)) {
      result.status = SatStatus::Sat;
      result.witness = std::move(w);
      break;
    }
    // Odometer increment, last digit fastest, gives lexicographic order.
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] + 1 == letters.size()) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  result.words_checked = checker.checked();
  return result;
}

}  // namespace

SatResult sat_search(const Formula& f, const Alphabet& alphabet, SatLimits limits) {
  const FormulaMetrics m = metrics(f);
  if (!m.is_sentence()) throw std::invalid_argument("satisfiability search needs a sentence");
  if (m.uses_successor) throw std::invalid_argument("satisfiability search supports the order signature only");
  std::string letters;
  collect_letters(f, letters);
  for (char c : letters) {
    if (!alphabet.contains(c)) throw std::invalid_argument(std::string("formula letter '") + c + "' is not in the alphabet");
  }
  if (limits.max_len && *limits.max_len < 0) throw std::invalid_argument("maximal length must be >= 0");

  Checker checker(f, limits.word_cap);
  if (limits.exact_len) return exact_length_search(alphabet, *limits.exact_len, checker, limits.word_cap);

  const int n = std::max(1, m.quantifier_depth);
  const std::int64_t bound = small_model_bound(n, static_cast<int>(alphabet.size()));
  const std::int64_t limit = limits.max_len ? std::min(*limits.max_len, bound) : bound;

  SatResult result;
  std::unordered_set<Fingerprint, FingerprintHash> seen;
  std::vector<Word> layer{Word(alphabet, "")};
  seen.insert(fingerprint(class_key(layer.front(), n)));
  for (std::int64_t len = 0;; ++len) {
    for (const Word& w : layer) {
      if (checker.holds(w)) {
        result.status = SatStatus::Sat;
        result.witness = w;
        result.explored_bound = len;
        result.words_checked = checker.checked();
        return result;
      }
    }
    if (len == limit) {
      result.explored_bound = len;
      result.status = len == bound ? SatStatus::UnsatDefinitive : SatStatus::UnsatUpToBound;
      break;
    }
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (char a : alphabet.letters()) {
        Word child(alphabet, w.letters() + a);
        if (seen.insert(fingerprint(class_key(child, n))).second) {
          if (seen.size() > limits.word_cap) throw ResourceError("sat search word cap", limits.word_cap);
          next.push_back(std::move(child));
        }
      }
    }
    if (next.empty()) {
      // Every class is already represented, so no longer word is new.
      result.status = SatStatus::UnsatDefinitive;
      result.explored_bound = bound;
      break;
    }
    layer = std::move(next);
  }
  result.words_checked = checker.checked();
  return result;
}

// ---------------------------------------------------------------- CNF

std::size_t Cnf::size() const noexcept {
  std::size_t s = clauses.size();
  for (const auto& c : clauses) s += c.size();
  return s;
}

namespace {

class DimacsReader {
 public:
  explicit DimacsReader(std::string_view text) : text_(text) {}

  Cnf read() {
    Cnf cnf;
    std::optional<long> declared_clauses;
    std::vector<int> clause;
    bool open = false;
    while (skip_space(), pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == 'c' && at_line_start()) {
        skip_line();
        continue;
      }
      if (c == '%') break;  // end marker used by some benchmark files
      if (c == 'p') {
        if (declared_clauses) fail("duplicate header");
        const std::size_t at = pos_;
        ++pos_;
        skip_space();
        if (text_.substr(pos_, 3) != "cnf") fail("expected 'p cnf <vars> <clauses>'");
        pos_ += 3;
        const long vars = number();
        const long count = number();
        if (vars < 0 || count < 0 || vars > std::numeric_limits<int>::max()) {
          pos_ = at;
          fail("negative or oversized header counts");
        }
        cnf.variable_count = static_cast<int>(vars);
        declared_clauses = count;
        continue;
      }
      if (!declared_clauses) fail("clause before the 'p cnf' header");
      const std::size_t at = pos_;
      const long lit = number();
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
        open = false;
        continue;
      }
      if (lit < -static_cast<long>(cnf.variable_count) || lit > cnf.variable_count) {
        pos_ = at;
        fail("literal " + std::to_string(lit) + " outside 1.." + std::to_string(cnf.variable_count));
      }
      clause.push_back(static_cast<int>(lit));
      open = true;
    }
    if (!declared_clauses) fail("missing 'p cnf' header");
    if (open) fail("last clause is not terminated by 0");
    if (static_cast<long>(cnf.clauses.size()) != *declared_clauses)
      fail("header declares " + std::to_string(*declared_clauses) + " clauses, found " +
           std::to_string(cnf.clauses.size()));
    return cnf;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, "DIMACS error at offset " + std::to_string(pos_) + ": " + msg);
  }

  bool at_line_start() const {
    std::size_t i = pos_;
    while (i > 0 && (text_[i - 1] == ' ' || text_[i - 1] == '\t')) --i;
    return i == 0 || text_[i - 1] == '\n' || text_[i - 1] == '\r';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

  long number() {
    skip_space();
    long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr)))) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// At least i positions lie strictly below v.
Formula at_least_below(int i, Var v) {
  if (i == 0) return Formula::truth();
  const Var o = other(v);
  return Formula::exists(o, Formula::conj(Formula::less(o, v), at_least_below(i - 1, o)));
}

Formula conj_all(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::truth();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conj(out, parts[i]);
  return out;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) { return DimacsReader(text).read(); }

bool cnf_brute_force(const Cnf& cnf) {
  if (cnf.variable_count < 0 || cnf.variable_count > 20)
    throw std::invalid_argument("brute force handles at most 20 variables");
  const std::uint32_t total = 1u << cnf.variable_count;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const bool all = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::vector<int>& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1u;
        return lit > 0 ? value : !value;
      });
    });
    if (all) return true;
  }
  return false;
}

Alphabet cnf_alphabet() { return Alphabet("01"); }

std::pair<Formula, int> cnf_to_fo2(const Cnf& cnf) {
  if (cnf.variable_count < 1) throw std::invalid_argument("CNF needs at least one variable");
  if (cnf.clauses.empty()) throw std::invalid_argument("CNF has no clauses (trivially satisfiable)");
  const int n = cnf.variable_count;
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > n) throw std::invalid_argument("CNF literal outside 1..variable_count");
    }
  }
  const Var x = Var::X;
  // Exactly n positions: some position has n-1 below it, none has n.
  const Formula length = Formula::conj(Formula::exists(x, at_least_below(n - 1, x)),
                                       Formula::negation(Formula::exists(x, at_least_below(n, x))));
  // Position i (exactly i-1 positions below it) carries a 1.
  auto is_one = [&](int i) {
    return Formula::exists(x, Formula::conj(Formula::letter('1', x),
                                            Formula::conj(at_least_below(i - 1, x),
                                                          Formula::negation(at_least_below(i, x)))));
  };
  std::vector<Formula> parts{length};
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) {
      parts.push_back(Formula::falsity());
      continue;
    }
    Formula c = clause.front() > 0 ? is_one(clause.front()) : Formula::negation(is_one(-clause.front()));
    for (std::size_t j = 1; j < clause.size(); ++j) {
      const int lit = clause[j];
      c = Formula::disj(c, lit > 0 ? is_one(lit) : Formula::negation(is_one(-lit)));
    }
    parts.push_back(c);
  }
  return {conj_all(std::move(parts)), n};
}

}  // namespace fo2
