#include <cctype>

#include "fo2/errors.hpp"
#include "fo2/formula.hpp"

namespace fo2 {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Recursive descent over the raw text.  Letters are single characters, so
// the lexer is folded into the parser and ambiguities between letters and
// keywords (E, A, x, y, suc, true, false) are settled by lookahead.
class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet, Signature signature)
      : text_(text), alphabet_(alphabet), signature_(signature) {}

  Formula parse() {
    Formula f = implication();
    skip();
    if (pos_ < text_.size()) fail(ParseError::Kind::Syntax, pos_, "unexpected trailing input");
    return f;
  }

 private:
  Formula implication() {
    const std::size_t begin = here();
    Formula left = disjunction();
    if (accept("->")) {
      Formula right = implication();
      return Formula::implies(std::move(left), std::move(right)).with_span({begin, pos_});
    }
    return left;
  }

  Formula disjunction() {
    const std::size_t begin = here();
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(std::move(f), conjunction()).with_span({begin, pos_});
    return f;
  }

  Formula conjunction() {
    const std::size_t begin = here();
    Formula f = unary();
    while (accept("&")) f = Formula::conj(std::move(f), unary()).with_span({begin, pos_});
    return f;
  }

  Formula unary() {
    const std::size_t begin = here();
    if (accept("!")) return Formula::negation(unary()).with_span({begin, pos_});
    if (accept("(")) {
      Formula f = implication();
      expect(")");
      return f;
    }
    if (looks_like_quantifier()) {
      const bool exists = text_[pos_] == 'E';
      ++pos_;
      Var v = variable();
      expect(".");
      Formula body = implication();
      return (exists ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body)))
          .with_span({begin, pos_});
    }
    return atom();
  }

  Formula atom() {
    const std::size_t begin = here();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, pos_, "unexpected end of input");
    if (keyword("true")) return Formula::truth().with_span({begin, pos_});
    if (keyword("false")) return Formula::falsity().with_span({begin, pos_});
    if (text_.substr(pos_, 3) == "suc" && next_non_space(pos_ + 3) == '(') {
      if (signature_ == Signature::Order)
        fail(ParseError::Kind::Signature, begin, "suc is not available in the order-only signature");
      pos_ += 3;
      expect("(");
      Var a = variable();
      expect(",");
      Var b = variable();
      expect(")");
      return Formula::suc(a, b).with_span({begin, pos_});
    }
    const char c = text_[pos_];
    if (!is_alnum(c)) fail(ParseError::Kind::Syntax, pos_, std::string("unexpected '") + c + "'");
    if (next_non_space(pos_ + 1) == '(') {
      if (!alphabet_.contains(c))
        fail(ParseError::Kind::UnknownLetter, pos_,
             std::string("letter '") + c + "' is not in the alphabet {" + alphabet_.letters() + "}");
      ++pos_;
      expect("(");
      Var v = variable();
      expect(")");
      return Formula::letter(c, v).with_span({begin, pos_});
    }
    Var a = variable();
    skip();
    if (accept("<")) {
      Var b = variable();
      return Formula::less(a, b).with_span({begin, pos_});
    }
    if (accept("=")) {
      Var b = variable();
      return Formula::equal(a, b).with_span({begin, pos_});
    }
    fail(ParseError::Kind::Syntax, pos_, "expected '<' or '=' after a variable");
  }

  Var variable() {
    skip();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == 'x' || c == 'y') {
        ++pos_;
        return c == 'x' ? Var::X : Var::Y;
      }
      if (is_alnum(c))
        fail(ParseError::Kind::Variable, pos_, std::string("'") + c + "' is not a variable (only x and y)");
    }
    fail(ParseError::Kind::Syntax, pos_, "expected a variable");
  }

  // `E v .` or `A v .` where v is any alphanumeric; a bad v is reported
  // later as a variable error rather than as a letter atom.
  bool looks_like_quantifier() {
    skip();
    if (pos_ >= text_.size() || (text_[pos_] != 'E' && text_[pos_] != 'A')) return false;
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || !is_alnum(text_[p])) return false;
    return next_non_space(p + 1) == '.';
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && (is_alnum(text_[after]) || text_[after] == '(')) return false;
    pos_ = after;
    return true;
  }

  char next_non_space(std::size_t p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  std::size_t here() {
    skip();
    return pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail(ParseError::Kind::Syntax, pos_, "expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t offset, const std::string& what) const {
    throw ParseError(kind, offset, "formula error at offset " + std::to_string(offset) + ": " + what);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  Signature signature_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& alphabet, Signature signature) {
  return Parser(text, alphabet, signature).parse();
}

}  // namespace fo2
