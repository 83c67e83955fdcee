#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/formula.hpp"
#include "fo2/word.hpp"

namespace fo2 {

/// 2n * (4n+2)^(k-1): a model-size bound for satisfiable depth-n sentences
/// over k letters.  Saturates at INT64_MAX.  Throws std::invalid_argument
/// for n < 1 or k < 1.
std::int64_t small_model_bound(int n, int k);

/// A word of length <= small_model_bound(n, occurring letters) agreeing
/// with w on all depth-n sentences.  Long segments are cut to 2n letters,
/// then the word is split at the segments that complete its alphabet from
/// the left and from the right, and the pieces in between, which use fewer
/// letters, are shrunk recursively.  Never longer than w.  Throws
/// std::invalid_argument for n < 1.
Word shrink(const Word& w, int n);

enum class SatStatus : std::uint8_t { Sat, UnsatDefinitive, UnsatUpToBound };

/// "SAT", "UNSAT_DEFINITIVE" or "UNSAT_UP_TO_BOUND".
const char* to_string(SatStatus s) noexcept;

struct SatResult {
  SatStatus status = SatStatus::UnsatUpToBound;
  std::optional<Word> witness;
  /// Every word up to this length is known to be covered.
  std::int64_t explored_bound = 0;
  /// Words model-checked (one per equivalence class in the default mode).
  std::size_t words_checked = 0;
};

struct SatLimits {
  std::optional<std::int64_t> max_len;
  /// Only words of exactly this length, enumerated one by one.
  std::optional<std::int64_t> exact_len;
  /// Maximal number of words model-checked before ResourceError.
  std::size_t word_cap = 200'000;
};

/// Finds the shortlex-least model of an order-signature sentence over
/// `alphabet`, searching lengths up to min(max_len, small_model_bound).
/// Words are grouped by their depth-n equivalence class (n = quantifier
/// depth); only the least word of each class is extended, and once no new
/// class appears the search is complete at every length.  Throws
/// std::invalid_argument for formulas with free variables or successor,
/// ResourceError when the word cap is reached.
SatResult sat_search(const Formula& f, const Alphabet& alphabet, SatLimits limits = {});

/// A CNF over variables 1..variable_count.  Literals are signed indices.
struct Cnf {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  /// Number of literal occurrences plus number of clauses.
  std::size_t size() const noexcept;
};

/// Parses DIMACS text: `c` comment lines, a `p cnf <vars> <clauses>`
/// header, then zero-terminated clauses.  A lone `0` is an empty clause.
/// Throws ParseError (with the byte offset) on malformed input, literals
/// out of range, or a clause count that differs from the header.
Cnf parse_dimacs(std::string_view text);

/// Exhaustive satisfiability check.  Throws std::invalid_argument above 20
/// variables.
bool cnf_brute_force(const Cnf& cnf);

/// Sentence over {0,1} whose models are exactly the words of length
/// variable_count encoding satisfying assignments (position i holds 1 iff
/// X_i is true).  Throws std::invalid_argument for an empty clause list or
/// no variables.
std::pair<Formula, int> cnf_to_fo2(const Cnf& cnf);

/// The alphabet {0,1} used by cnf_to_fo2.
Alphabet cnf_alphabet();

}  // namespace fo2
