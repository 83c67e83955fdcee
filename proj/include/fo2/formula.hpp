#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "fo2/word.hpp"

namespace fo2 {

/// The only two variable names.
enum class Var : std::uint8_t { X, Y };

constexpr Var other(Var v) noexcept { return v == Var::X ? Var::Y : Var::X; }
constexpr char var_name(Var v) noexcept { return v == Var::X ? 'x' : 'y'; }

/// Which binary predicates a formula may use besides letters and equality.
enum class Signature : std::uint8_t { Order, OrderSuccessor };

const char* to_string(Signature s) noexcept;

/// Half-open character range in the source text; empty for built formulas.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Immutable FO² syntax tree over letters, <, = and optionally suc.
/// Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    True, False, Letter, Less, Equal, Suc, Not, And, Or, Implies, Exists, Forall
  };

  static Formula truth();
  static Formula falsity();
  static Formula letter(char a, Var v);
  static Formula less(Var a, Var b);
  static Formula equal(Var a, Var b);
  /// suc(a, b) holds iff a + 1 = b.
  static Formula suc(Var a, Var b);
  static Formula negation(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula exists(Var v, Formula body);
  static Formula forall(Var v, Formula body);

  Kind kind() const noexcept;
  /// Letter of a Letter atom.
  char symbol() const noexcept;
  /// First variable of an atom, or the bound variable of a quantifier.
  Var var() const noexcept;
  /// Second variable of a binary atom.
  Var var2() const noexcept;
  /// Operand of Not, left operand of a binary connective, body of a quantifier.
  const Formula& lhs() const noexcept;
  const Formula& rhs() const noexcept;
  const Formula& body() const noexcept { return lhs(); }

  bool is_atom() const noexcept;
  bool is_quantifier() const noexcept;

  SourceSpan span() const noexcept;
  Formula with_span(SourceSpan span) const;

  /// Structural equality; spans are ignored.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parse the ASCII grammar.  Precedence, tightest first: `!`, `&`, `|`,
/// `->` (right associative).  Quantifier bodies extend as far right as
/// possible.  Throws ParseError on syntax errors, letters outside
/// `alphabet`, or `suc` under the order-only signature.
Formula parse_formula(std::string_view text, const Alphabet& alphabet,
                      Signature signature = Signature::OrderSuccessor);

/// Fully parenthesized form accepted by parse_formula.
std::string render(const Formula& f);

/// Negation normal form.  Implications are eliminated, negations sit only on
/// atoms, x=x and x<x style atoms fold to constants and constants are
/// propagated through the connectives.  Quantifiers are never dropped.
Formula nnf(const Formula& f);

struct FormulaMetrics {
  int quantifier_depth = 0;
  /// Maximal number of blocks of like quantifiers along a root-to-leaf path.
  int alternation_depth = 0;
  bool uses_successor = false;
  bool free_x = false;
  bool free_y = false;

  bool is_sentence() const noexcept { return !free_x && !free_y; }
  friend bool operator==(const FormulaMetrics&, const FormulaMetrics&) = default;
};

/// Depth and alternation are measured on nnf(f).
FormulaMetrics metrics(const Formula& f);

/// Number of AST nodes.
std::size_t node_count(const Formula& f);

/// Tarskian truth.  Quantifiers range over [1, |w|].  Throws
/// std::invalid_argument when a free variable has no position, or a
/// position lies outside the word.
bool model_check(const Formula& f, const Word& w, MaybePosition x = {}, MaybePosition y = {});

}  // namespace fo2
