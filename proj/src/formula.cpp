#include "fo2/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fo2 {

struct Formula::Node {
  Node(Kind k, char c = '\0', Var v1 = Var::X, Var v2 = Var::X, std::vector<Formula> children = {})
      : kind(k), letter(c), a(v1), b(v2), kids(std::move(children)) {}

  Kind kind;
  char letter;
  Var a;
  Var b;
  std::vector<Formula> kids;
  SourceSpan span{};
};

namespace {

using Kind = Formula::Kind;

}  // namespace

const char* to_string(Signature s) noexcept {
  return s == Signature::Order ? "order" : "order+successor";
}

Formula Formula::truth() { return Formula(std::make_shared<Node>(Kind::True)); }
Formula Formula::falsity() { return Formula(std::make_shared<Node>(Kind::False)); }

Formula Formula::letter(char a, Var v) {
  return Formula(std::make_shared<Node>(Kind::Letter, a, v));
}
Formula Formula::less(Var a, Var b) { return Formula(std::make_shared<Node>(Kind::Less, '\0', a, b)); }
Formula Formula::equal(Var a, Var b) { return Formula(std::make_shared<Node>(Kind::Equal, '\0', a, b)); }
Formula Formula::suc(Var a, Var b) { return Formula(std::make_shared<Node>(Kind::Suc, '\0', a, b)); }

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Kind::Not, '\0', Var::X, Var::X, std::vector<Formula>{std::move(f)}));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Kind::And, '\0', Var::X, Var::X, std::vector<Formula>{std::move(l), std::move(r)}));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Kind::Or, '\0', Var::X, Var::X, std::vector<Formula>{std::move(l), std::move(r)}));
}
Formula Formula::implies(Formula l, Formula r) {
  return Formula(
      std::make_shared<Node>(Kind::Implies, '\0', Var::X, Var::X, std::vector<Formula>{std::move(l), std::move(r)}));
}
Formula Formula::exists(Var v, Formula body) {
  return Formula(std::make_shared<Node>(Kind::Exists, '\0', v, Var::X, std::vector<Formula>{std::move(body)}));
}
Formula Formula::forall(Var v, Formula body) {
  return Formula(std::make_shared<Node>(Kind::Forall, '\0', v, Var::X, std::vector<Formula>{std::move(body)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
char Formula::symbol() const noexcept { return node_->letter; }
Var Formula::var() const noexcept { return node_->a; }
Var Formula::var2() const noexcept { return node_->b; }
const Formula& Formula::lhs() const noexcept { return node_->kids[0]; }
const Formula& Formula::rhs() const noexcept { return node_->kids[1]; }
SourceSpan Formula::span() const noexcept { return node_->span; }

bool Formula::is_atom() const noexcept {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Letter:
    case Kind::Less:
    case Kind::Equal:
    case Kind::Suc:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const noexcept {
  return node_->kind == Kind::Exists || node_->kind == Kind::Forall;
}

Formula Formula::with_span(SourceSpan span) const {
  auto copy = std::make_shared<Node>(*node_);
  copy->span = span;
  return Formula(std::move(copy));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::Letter:
      return x.letter == y.letter && x.a == y.a;
    case Kind::Less:
    case Kind::Equal:
    case Kind::Suc:
      return x.a == y.a && x.b == y.b;
    case Kind::Exists:
    case Kind::Forall:
      if (x.a != y.a) return false;
      break;
    default:
      break;
  }
  return x.kids == y.kids;
}

std::string render(const Formula& f) {
  const auto v = [](Var var) { return var_name(var); };
  switch (f.kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Letter: return std::string{f.symbol(), '(', v(f.var()), ')'};
    case Kind::Less: return std::string{v(f.var()), '<', v(f.var2())};
    case Kind::Equal: return std::string{v(f.var()), '=', v(f.var2())};
    case Kind::Suc: return std::string("suc(") + v(f.var()) + ',' + v(f.var2()) + ')';
    case Kind::Not: return "!" + render(f.lhs());
    case Kind::And: return "(" + render(f.lhs()) + " & " + render(f.rhs()) + ")";
    case Kind::Or: return "(" + render(f.lhs()) + " | " + render(f.rhs()) + ")";
    case Kind::Implies: return "(" + render(f.lhs()) + " -> " + render(f.rhs()) + ")";
    case Kind::Exists: return std::string("(E") + v(f.var()) + '.' + render(f.body()) + ')';
    case Kind::Forall: return std::string("(A") + v(f.var()) + '.' + render(f.body()) + ')';
  }
  return {};
}

namespace {

Formula make_and(Formula l, Formula r) {
  if (l.kind() == Kind::False || r.kind() == Kind::False) return Formula::falsity();
  if (l.kind() == Kind::True) return r;
  if (r.kind() == Kind::True) return l;
  return Formula::conj(std::move(l), std::move(r));
}

Formula make_or(Formula l, Formula r) {
  if (l.kind() == Kind::True || r.kind() == Kind::True) return Formula::truth();
  if (l.kind() == Kind::False) return r;
  if (r.kind() == Kind::False) return l;
  return Formula::disj(std::move(l), std::move(r));
}

Formula nnf_signed(const Formula& f, bool negate) {
  switch (f.kind()) {
    case Kind::True:
      return negate ? Formula::falsity() : Formula::truth();
    case Kind::False:
      return negate ? Formula::truth() : Formula::falsity();
    case Kind::Letter:
      return negate ? Formula::negation(Formula::letter(f.symbol(), f.var())) : Formula::letter(f.symbol(), f.var());
    case Kind::Equal:
      if (f.var() == f.var2()) return negate ? Formula::falsity() : Formula::truth();
      return negate ? Formula::negation(Formula::equal(f.var(), f.var2())) : Formula::equal(f.var(), f.var2());
    case Kind::Less:
      if (f.var() == f.var2()) return negate ? Formula::truth() : Formula::falsity();
      return negate ? Formula::negation(Formula::less(f.var(), f.var2())) : Formula::less(f.var(), f.var2());
    case Kind::Suc:
      if (f.var() == f.var2()) return negate ? Formula::truth() : Formula::falsity();
      return negate ? Formula::negation(Formula::suc(f.var(), f.var2())) : Formula::suc(f.var(), f.var2());
    case Kind::Not:
      return nnf_signed(f.lhs(), !negate);
    case Kind::And:
      return negate ? make_or(nnf_signed(f.lhs(), true), nnf_signed(f.rhs(), true))
                    : make_and(nnf_signed(f.lhs(), false), nnf_signed(f.rhs(), false));
    case Kind::Or:
      return negate ? make_and(nnf_signed(f.lhs(), true), nnf_signed(f.rhs(), true))
                    : make_or(nnf_signed(f.lhs(), false), nnf_signed(f.rhs(), false));
    case Kind::Implies:
      return negate ? make_and(nnf_signed(f.lhs(), false), nnf_signed(f.rhs(), true))
                    : make_or(nnf_signed(f.lhs(), true), nnf_signed(f.rhs(), false));
    case Kind::Exists:
      return negate ? Formula::forall(f.var(), nnf_signed(f.body(), true))
                    : Formula::exists(f.var(), nnf_signed(f.body(), false));
    case Kind::Forall:
      return negate ? Formula::exists(f.var(), nnf_signed(f.body(), true))
                    : Formula::forall(f.var(), nnf_signed(f.body(), false));
  }
  throw std::logic_error("unhandled formula kind");
}

struct PathStats {
  int depth = 0;
  int blocks = 0;
};

// `outer` is the kind of the nearest enclosing quantifier, or Not if none.
PathStats path_stats(const Formula& f, Kind outer) {
  switch (f.kind()) {
    case Kind::Exists:
    case Kind::Forall: {
      PathStats inner = path_stats(f.body(), f.kind());
      return {inner.depth + 1, inner.blocks + (f.kind() == outer ? 0 : 1)};
    }
    case Kind::Not:
      return path_stats(f.lhs(), outer);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      PathStats l = path_stats(f.lhs(), outer);
      PathStats r = path_stats(f.rhs(), outer);
      return {std::max(l.depth, r.depth), std::max(l.blocks, r.blocks)};
    }
    default:
      return {};
  }
}

struct Syntax {
  bool successor = false;
  bool free[2] = {false, false};
};

void collect_syntax(const Formula& f, bool bound_x, bool bound_y, Syntax& out) {
  auto use = [&](Var v) {
    if (v == Var::X && !bound_x) out.free[0] = true;
    if (v == Var::Y && !bound_y) out.free[1] = true;
  };
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return;
    case Kind::Letter:
      use(f.var());
      return;
    case Kind::Suc:
      out.successor = true;
      [[fallthrough]];
    case Kind::Less:
    case Kind::Equal:
      use(f.var());
      use(f.var2());
      return;
    case Kind::Not:
      collect_syntax(f.lhs(), bound_x, bound_y, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      collect_syntax(f.lhs(), bound_x, bound_y, out);
      collect_syntax(f.rhs(), bound_x, bound_y, out);
      return;
    case Kind::Exists:
    case Kind::Forall:
      collect_syntax(f.body(), bound_x || f.var() == Var::X, bound_y || f.var() == Var::Y, out);
      return;
  }
}

// Truth table of a subformula over all assignments (x, y) in [0, L]^2, where
// index 0 stands for "unassigned".  Cells that read an unassigned variable are
// never consulted by callers.
class TableEvaluator {
 public:
  explicit TableEvaluator(const std::string& w) : w_(w), side_(w.size() + 1) {}

  std::vector<std::uint8_t> eval(const Formula& f) const {
    std::vector<std::uint8_t> t(side_ * side_, 0);
    switch (f.kind()) {
      case Kind::True:
        std::fill(t.begin(), t.end(), 1);
        break;
      case Kind::False:
        break;
      case Kind::Letter:
        fill([&](std::size_t x, std::size_t y) {
          std::size_t p = f.var() == Var::X ? x : y;
          return p != 0 && w_[p - 1] == f.symbol();
        }, t);
        break;
      case Kind::Less:
      case Kind::Equal:
      case Kind::Suc:
        fill([&](std::size_t x, std::size_t y) {
          std::size_t a = f.var() == Var::X ? x : y;
          std::size_t b = f.var2() == Var::X ? x : y;
          if (f.kind() == Kind::Less) return a < b;
          if (f.kind() == Kind::Equal) return a == b;
          return a + 1 == b;
        }, t);
        break;
      case Kind::Not: {
        t = eval(f.lhs());
        for (auto& c : t) c = !c;
        break;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        t = eval(f.lhs());
        const auto r = eval(f.rhs());
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (f.kind() == Kind::And) t[i] = t[i] && r[i];
          else if (f.kind() == Kind::Or) t[i] = t[i] || r[i];
          else t[i] = !t[i] || r[i];
        }
        break;
      }
      case Kind::Exists:
      case Kind::Forall: {
        const auto body = eval(f.body());
        const bool any = f.kind() == Kind::Exists;
        const bool over_x = f.var() == Var::X;
        for (std::size_t other = 0; other < side_; ++other) {
          bool acc = !any;
          for (std::size_t p = 1; p < side_; ++p) {
            bool v = body[over_x ? index(p, other) : index(other, p)];
            if (v == any) {
              acc = any;
              break;
            }
          }
          for (std::size_t q = 0; q < side_; ++q) t[over_x ? index(q, other) : index(other, q)] = acc;
        }
        break;
      }
    }
    return t;
  }

  std::size_t index(std::size_t x, std::size_t y) const noexcept { return x * side_ + y; }

 private:
  template <class Pred>
  void fill(Pred pred, std::vector<std::uint8_t>& t) const {
    for (std::size_t x = 0; x < side_; ++x) {
      for (std::size_t y = 0; y < side_; ++y) t[index(x, y)] = pred(x, y);
    }
  }

  const std::string& w_;
  std::size_t side_;
};

}  // namespace

Formula nnf(const Formula& f) { return nnf_signed(f, false); }

FormulaMetrics metrics(const Formula& f) {
  FormulaMetrics m;
  const PathStats stats = path_stats(nnf(f), Kind::Not);
  m.quantifier_depth = stats.depth;
  m.alternation_depth = stats.blocks;
  Syntax syn;
  collect_syntax(f, false, false, syn);
  m.uses_successor = syn.successor;
  m.free_x = syn.free[0];
  m.free_y = syn.free[1];
  return m;
}

std::size_t node_count(const Formula& f) {
  switch (f.kind()) {
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall:
      return 1 + node_count(f.lhs());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return 1 + node_count(f.lhs()) + node_count(f.rhs());
    default:
      return 1;
  }
}

bool model_check(const Formula& f, const Word& w, MaybePosition x, MaybePosition y) {
  Syntax syn;
  collect_syntax(f, false, false, syn);
  if (syn.free[0] && !x) throw std::invalid_argument("free variable x has no assigned position");
  if (syn.free[1] && !y) throw std::invalid_argument("free variable y has no assigned position");
  for (auto p : {x, y}) {
    if (p && (*p < 1 || *p > w.length()))
      throw std::invalid_argument("position " + std::to_string(*p) + " outside [1, " +
                                  std::to_string(w.length()) + "]");
  }
  TableEvaluator ev(w.letters());
  const auto table = ev.eval(f);
  return table[ev.index(x ? static_cast<std::size_t>(*x) : 0, y ? static_cast<std::size_t>(*y) : 0)] != 0;
}

}  // namespace fo2
