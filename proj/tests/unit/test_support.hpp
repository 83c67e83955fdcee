#pragma once

// Reference implementations used as oracles by the unit tests.  The oracles
// are deliberately naive and use only the library's data types.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fo2/formula.hpp"

namespace fo2::testing {

/// Every word over `letters` of length <= max_len, shortlex order.
inline std::vector<std::string> all_words(const std::string& letters, int max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : letters) next.push_back(w + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Plain step as (direction is right, letter).
struct NaiveStep {
  bool right;
  char letter;
};

/// Scan-based evaluation: position 1-indexed, nullopt when undefined.
inline std::optional<int> naive_eval(const std::vector<NaiveStep>& steps, const std::string& w) {
  int q = -1;  // -1: no position yet
  for (const auto& s : steps) {
    std::vector<int> hits;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
      if (w[i - 1] != s.letter) continue;
      if (q == -1 || (s.right ? i > q : i < q)) hits.push_back(i);
    }
    if (hits.empty()) return std::nullopt;
    q = s.right ? hits.front() : hits.back();
  }
  return q;
}

/// Every syntactic plain ranker of length in [1, max_len] over `letters`.
inline std::vector<std::vector<NaiveStep>> all_naive_rankers(const std::string& letters, int max_len) {
  std::vector<std::vector<NaiveStep>> out;
  std::vector<std::vector<NaiveStep>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<NaiveStep>> next;
    for (const auto& r : layer) {
      for (bool right : {true, false}) {
        for (char c : letters) {
          auto e = r;
          e.push_back({right, c});
          next.push_back(e);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::string naive_text(const std::vector<NaiveStep>& r) {
  std::string s;
  for (const auto& st : r) {
    s += st.right ? '>' : '<';
    s += st.letter;
  }
  return s;
}

/// Direct recursive Tarskian evaluation; env[0] is x, env[1] is y (0 = unset).
inline bool naive_holds(const Formula& f, const std::string& w, int env[2]) {
  auto val = [&](Var v) { return env[v == Var::X ? 0 : 1]; };
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Letter: return w.at(static_cast<std::size_t>(val(f.var()) - 1)) == f.symbol();
    case K::Less: return val(f.var()) < val(f.var2());
    case K::Equal: return val(f.var()) == val(f.var2());
    case K::Suc: return val(f.var()) + 1 == val(f.var2());
    case K::Not: return !naive_holds(f.lhs(), w, env);
    case K::And: return naive_holds(f.lhs(), w, env) && naive_holds(f.rhs(), w, env);
    case K::Or: return naive_holds(f.lhs(), w, env) || naive_holds(f.rhs(), w, env);
    case K::Implies: return !naive_holds(f.lhs(), w, env) || naive_holds(f.rhs(), w, env);
    case K::Exists:
    case K::Forall: {
      const int slot = f.var() == Var::X ? 0 : 1;
      const int saved = env[slot];
      const bool want = f.kind() == K::Exists;
      bool result = !want;
      for (int i = 1; i <= static_cast<int>(w.size()) && result != want; ++i) {
        env[slot] = i;
        if (naive_holds(f.body(), w, env) == want) result = want;
      }
      env[slot] = saved;
      return result;
    }
  }
  return false;
}

inline bool naive_holds(const Formula& f, const std::string& w, int x = 0, int y = 0) {
  int env[2] = {x, y};
  return naive_holds(f, w, env);
}

/// Random formula over `letters` with quantifier depth <= depth.  Free
/// variables may occur; callers bind them or wrap in quantifiers.
inline Formula random_formula(std::mt19937& rng, const std::string& letters, int depth, bool successor = false) {
  std::uniform_int_distribution<int> pick(0, 9);
  auto var = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) ? Var::X : Var::Y; };
  const int choice = pick(rng);
  if (depth == 0 || choice < 3) {
    switch (std::uniform_int_distribution<int>(0, successor ? 4 : 3)(rng)) {
      case 0:
        return Formula::letter(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)], var());
      case 1: return Formula::less(var(), var());
      case 2: return Formula::equal(var(), var());
      case 3: return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Formula::truth() : Formula::less(var(), var());
      default: return Formula::suc(var(), var());
    }
  }
  switch (choice) {
    case 3: return Formula::negation(random_formula(rng, letters, depth, successor));
    case 4: return Formula::conj(random_formula(rng, letters, depth - 1, successor), random_formula(rng, letters, depth - 1, successor));
    case 5: return Formula::disj(random_formula(rng, letters, depth - 1, successor), random_formula(rng, letters, depth - 1, successor));
    case 6: return Formula::implies(random_formula(rng, letters, depth - 1, successor), random_formula(rng, letters, depth - 1, successor));
    case 7:
    case 8: return Formula::exists(var(), random_formula(rng, letters, depth - 1, successor));
    default: return Formula::forall(var(), random_formula(rng, letters, depth - 1, successor));
  }
}

/// Close a formula by existentially or universally binding its free variables.
inline Formula close_formula(std::mt19937& rng, Formula f) {
  const auto m = metrics(f);
  if (m.free_x) f = std::uniform_int_distribution<int>(0, 1)(rng) ? Formula::exists(Var::X, f) : Formula::forall(Var::X, f);
  if (m.free_y) f = std::uniform_int_distribution<int>(0, 1)(rng) ? Formula::exists(Var::Y, f) : Formula::forall(Var::Y, f);
  return f;
}

inline std::string random_word(std::mt19937& rng, const std::string& letters, int max_len) {
  std::string w(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_len)(rng)), ' ');
  for (auto& c : w) c = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
  return w;
}

}  // namespace fo2::testing
