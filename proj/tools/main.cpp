#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "fo2/errors.hpp"
#include "fo2/synthesis.hpp"

namespace fo2::cli {
namespace {

enum class Format { Auto, Text, Json };

struct Output {
  Format format = Format::Auto;

  // Prints `j` or `text` according to the requested format, falling back to
  // the subcommand's natural format.
  void emit(const ordered_json& j, const std::string& text, bool json_by_default) const {
    const bool json = format == Format::Json || (format == Format::Auto && json_by_default);
    if (json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

const char* parse_kind(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::UnknownLetter: return "unknown-letter";
    case ParseError::Kind::Signature: return "signature";
    case ParseError::Kind::Variable: return "variable";
  }
  return "syntax";
}

int fail(const std::string& code, const std::string& message, int exit_code, ordered_json extra = {}) {
  ordered_json j;
  j["error"] = code;
  j["message"] = message;
  if (extra.is_object()) j.update(extra);
  std::cerr << j.dump() << '\n';
  return exit_code;
}

std::string text_position(MaybePosition p) { return p ? std::to_string(*p) : "UNDEFINED"; }

bool looks_successor(std::string_view ranker) { return ranker.find('[') != std::string_view::npos; }

std::string ranker_letters(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-variable first-order logic on finite words: rankers, equivalence, games, satisfiability."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Output out;
  std::string format_name = "auto";
  app.add_option("--format", format_name, "Output format: text, json, or auto (per-command default)")
      ->check(CLI::IsMember({"auto", "text", "json"}));
  app.add_flag_callback("--json", [&] { format_name = "json"; }, "Same as --format json");

  std::function<int()> action;
  std::optional<std::string> alphabet;
  auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", alphabet, "Alphabet letters (default: letters of the inputs)");
  };

  // eval-ranker
  {
    auto* sub = app.add_subcommand("eval-ranker", "Position a ranker points to in a word");
    auto ranker = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    sub->add_option("ranker", *ranker, "Ranker, e.g. '>a>c<b' or '>[|a|b]'")->required();
    sub->add_option("word", *word, "Word (inline, @file or -)")->required();
    sub->callback([&, ranker, word] {
      action = [&, ranker, word] {
        const std::string r = resolve_text(*ranker);
        const std::string w = resolve_text(*word);
        const Word wd(choose_alphabet(alphabet, {w, ranker_letters(r)}), w);
        MaybePosition p;
        std::string canonical;
        if (looks_successor(r)) {
          const SucRanker sr = parse_suc_ranker(r);
          p = sr.eval(wd);
          canonical = to_string(sr);
        } else {
          const Ranker pr = parse_ranker(r);
          p = pr.eval(wd);
          canonical = to_string(pr);
        }
        out.emit({{"ranker", canonical}, {"word", w}, {"position", position_json(p)}}, text_position(p) + "\n", false);
        return 0;
      };
    });
    add_alphabet(sub);
  }

  // rankers
  {
    auto* sub = app.add_subcommand("rankers", "All rankers of bounded length defined on a word");
    auto word = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto m = std::make_shared<std::optional<int>>();
    auto suc = std::make_shared<bool>(false);
    sub->add_option("word", *word, "Word (inline, @file or -)")->required();
    sub->add_option("-n", *n, "Maximal ranker length")->required()->check(CLI::Range(1, 62));
    sub->add_option("-m", *m, "Maximal number of direction blocks")->check(CLI::Range(1, 62));
    sub->add_flag("--suc", *suc, "Successor rankers");
    add_alphabet(sub);
    sub->callback([&, word, n, m, suc] {
      action = [&, word, n, m, suc] {
        const std::string w = resolve_text(*word);
        const Word wd(choose_alphabet(alphabet, {w}), w);
        ordered_json list = ordered_json::array();
        std::string text;
        auto add = [&](const std::string& r, Position p) {
          list.push_back({{"ranker", r}, {"position", p}});
          text += r + "\t" + std::to_string(p) + "\n";
        };
        if (*suc) {
          const auto set = realized_suc_rankers(wd, *n, *m);
          for (const auto& e : set.entries()) add(to_string(e.ranker), e.position);
        } else {
          const auto set = realized_rankers(wd, *n, *m);
          for (const auto& e : set.entries()) add(to_string(e.ranker), e.position);
        }
        ordered_json j{{"word", w}, {"n", *n}};
        if (*m) j["m"] = **m;
        j["signature"] = *suc ? "order+successor" : "order";
        j["count"] = list.size();
        j["rankers"] = list;
        out.emit(j, text, true);
        return 0;
      };
    });
  }

  // equiv
  {
    auto* sub = app.add_subcommand("equiv", "Decide depth-n (and m-block) equivalence of two words");
    auto u = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto m = std::make_shared<std::optional<int>>();
    auto suc = std::make_shared<bool>(false);
    auto method = std::make_shared<std::string>("ranker");
    sub->add_option("u", *u, "First word (inline, @file or -)")->required();
    sub->add_option("v", *v, "Second word (inline, @file or -)")->required();
    sub->add_option("-n", *n, "Quantifier depth")->required()->check(CLI::Range(1, 62));
    sub->add_option("-m", *m, "Quantifier blocks")->check(CLI::Range(1, 62));
    sub->add_flag("--suc", *suc, "Include the successor relation");
    sub->add_option("--method", *method, "ranker, game, or both (exit 3 if they disagree)")
        ->check(CLI::IsMember({"ranker", "game", "both"}));
    add_alphabet(sub);
    sub->callback([&, u, v, n, m, suc, method] {
      action = [&, u, v, n, m, suc, method]() -> int {
        const std::string a = resolve_text(*u);
        const std::string b = resolve_text(*v);
        const Alphabet sigma = choose_alphabet(alphabet, {a, b});
        const Word wu(sigma, a), wv(sigma, b);
        if (*m && **m > *n) throw std::invalid_argument("-m must not exceed -n");
        ordered_json j;
        std::string text;
        std::optional<bool> ranker_verdict, game_verdict;
        if (*method != "game") {
          EquivReport r;
          if (*m)
            r = *suc ? suc_ranker_equiv_alt(wu, wv, **m, *n) : ranker_equiv_alt(wu, wv, **m, *n);
          else
            r = *suc ? suc_ranker_equiv(wu, wv, *n) : ranker_equiv(wu, wv, *n);
          j = to_json(r);
          ranker_verdict = r.verdict;
          text += std::string("ranker: ") + (r.verdict ? "equivalent" : "not equivalent");
          if (!r.verdict) {
            text += std::string(" (") + to_string(r.failed) + ")";
            for (const auto& w : r.witnesses)
              text += "\n  " + w.ranker + "  u:" + text_position(w.pos_u) + "  v:" + text_position(w.pos_v);
          }
          text += "\n";
        } else {
          j["n"] = *n;
          if (*m) j["m"] = **m;
          j["signature"] = *suc ? "order+successor" : "order";
        }
        if (*method != "ranker") {
          const GameVerdict g = *m ? game_equiv_alt(wu, wv, **m, *n, *suc) : game_equiv(wu, wv, *n, *suc);
          game_verdict = g.delilah_wins;
          j["game"] = to_json(g);
          text += std::string("game: ") + (g.delilah_wins ? "Delilah wins" : "Samson wins");
          if (g.first_winning_move) {
            const auto& mv = *g.first_winning_move;
            text += std::string(" (first move ") + to_string(mv.pebble) + " on " + to_string(mv.side) + " at " +
                    std::to_string(mv.position) + ")";
          }
          text += "\n";
        }
        j["method"] = *method;
        j["verdict"] = ranker_verdict.value_or(game_verdict.value_or(false));
        bool disagree = false;
        if (ranker_verdict && game_verdict) {
          disagree = *ranker_verdict != *game_verdict;
          j["methodsAgree"] = !disagree;
          if (disagree) text += "methods disagree\n";
        }
        out.emit(j, text, true);
        return disagree ? 3 : 0;
      };
    });
  }

  // check
  {
    auto* sub = app.add_subcommand("check", "Model-check a formula on a word");
    auto formula = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto x = std::make_shared<std::optional<int>>();
    auto y = std::make_shared<std::optional<int>>();
    sub->add_option("formula", *formula, "Formula file, @file, - or inline text")->required();
    sub->add_option("word", *word, "Word (inline, @file or -)")->required();
    sub->add_option("-x", *x, "Position assigned to x (1-based)");
    sub->add_option("-y", *y, "Position assigned to y (1-based)");
    add_alphabet(sub);
    sub->callback([&, formula, word, x, y] {
      action = [&, formula, word, x, y] {
        const std::string text = resolve_file_or_text(*formula);
        const std::string w = resolve_text(*word);
        const Alphabet sigma = choose_alphabet(alphabet, {w, formula_letters(text)});
        const Formula f = parse_formula(text, sigma);
        const Word wd(sigma, w);
        const bool holds = model_check(f, wd, *x, *y);
        ordered_json j{{"formula", render(f)}, {"word", w}};
        j["x"] = *x ? ordered_json(**x) : ordered_json(nullptr);
        j["y"] = *y ? ordered_json(**y) : ordered_json(nullptr);
        j["holds"] = holds;
        out.emit(j, holds ? "true\n" : "false\n", false);
        return 0;
      };
    });
  }

  // metrics
  {
    auto* sub = app.add_subcommand("metrics", "Quantifier depth, alternation depth and free variables");
    auto formula = std::make_shared<std::string>();
    sub->add_option("formula", *formula, "Formula file, @file, - or inline text")->required();
    add_alphabet(sub);
    sub->callback([&, formula] {
      action = [&, formula] {
        const std::string text = resolve_file_or_text(*formula);
        const Alphabet sigma = choose_alphabet(alphabet, {formula_letters(text)});
        const Formula f = parse_formula(text, sigma);
        const FormulaMetrics mt = metrics(f);
        ordered_json j{{"formula", render(f)}, {"nnf", render(nnf(f))}};
        j.update(to_json(mt));
        j["size"] = node_count(f);
        std::string t = "quantifier depth: " + std::to_string(mt.quantifier_depth) +
                        "\nalternation depth: " + std::to_string(mt.alternation_depth) +
                        "\nsuccessor: " + (mt.uses_successor ? "yes" : "no") + "\nfree variables:" +
                        (mt.free_x ? " x" : "") + (mt.free_y ? " y" : "") + "\n";
        out.emit(j, t, true);
        return 0;
      };
    });
  }

  // synth
  {
    auto* sub = app.add_subcommand("synth", "Formula defining a ranker's definedness or position");
    auto ranker = std::make_shared<std::string>();
    auto position = std::make_shared<bool>(false);
    sub->add_option("ranker", *ranker, "Ranker (inline, @file or -)")->required();
    auto* def = sub->add_flag("--definedness", "Sentence true iff the ranker is defined (default)");
    sub->add_flag("--position", *position, "Formula in x true exactly at the ranker's position")->excludes(def);
    sub->callback([&, ranker, position] {
      action = [&, ranker, position] {
        const std::string r = resolve_text(*ranker);
        Formula f = Formula::truth();
        std::string canonical;
        if (looks_successor(r)) {
          const SucRanker sr = parse_suc_ranker(r);
          f = *position ? synth_position(sr) : synth_definedness(sr);
          canonical = to_string(sr);
        } else {
          const Ranker pr = parse_ranker(r);
          f = *position ? synth_position(pr) : synth_definedness(pr);
          canonical = to_string(pr);
        }
        const FormulaMetrics mt = metrics(f);
        ordered_json j{{"ranker", canonical},
                       {"kind", *position ? "position" : "definedness"},
                       {"formula", render(f)},
                       {"quantifierDepth", mt.quantifier_depth}};
        out.emit(j, render(f) + "\n", false);
        return 0;
      };
    });
  }

  // witness
  {
    auto* sub = app.add_subcommand("witness", "Hierarchy witness words u and v");
    auto m = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto suc = std::make_shared<bool>(false);
    sub->add_option("-m", *m, "Level")->required();
    sub->add_option("-n", *n, "Size parameter")->required();
    sub->add_flag("--suc", *suc, "Padded words for the successor signature (pad letter b)");
    sub->callback([&, m, n, suc] {
      action = [&, m, n, suc] {
        const WitnessPair w = *suc ? witness_words_suc(*m, *n) : witness_words(*m, *n);
        ordered_json j{{"m", w.m},
                       {"n", w.n},
                       {"signature", to_string(w.signature)},
                       {"alphabet", w.u.alphabet().letters()},
                       {"u", w.u.letters()},
                       {"v", w.v.letters()}};
        out.emit(j, w.u.letters() + "\n" + w.v.letters() + "\n", false);
        return 0;
      };
    });
  }

  // verify-hierarchy
  {
    auto* sub = app.add_subcommand("verify-hierarchy", "Check that level m of the alternation hierarchy is strict");
    auto m = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto suc = std::make_shared<bool>(false);
    sub->add_option("-m", *m, "Level")->required();
    sub->add_option("-n", *n, "Size parameter")->required();
    sub->add_flag("--suc", *suc, "Successor signature");
    sub->callback([&, m, n, suc] {
      action = [&, m, n, suc] {
        const HierarchyReport r = verify_hierarchy_level(*m, *n, *suc ? Signature::OrderSuccessor : Signature::Order);
        std::string t = std::string(r.confirmed() ? "confirmed" : "NOT confirmed") + "\nu = " + r.words.u.letters() +
                        "\nv = " + r.words.v.letters() + "\n";
        if (r.separating_depth) t += "separated by the game at depth " + std::to_string(*r.separating_depth) + "\n";
        out.emit(to_json(r), t, true);
        return 0;
      };
    });
  }

  // sat
  {
    auto* sub = app.add_subcommand("sat", "Search for a model of an order-signature sentence");
    auto formula = std::make_shared<std::string>();
    auto limits = std::make_shared<SatLimits>();
    auto max_len = std::make_shared<std::optional<std::int64_t>>();
    auto exact_len = std::make_shared<std::optional<std::int64_t>>();
    sub->add_option("formula", *formula, "Formula file, @file, - or inline text")->required();
    sub->add_option("--alphabet", alphabet, "Alphabet letters")->required();
    sub->add_option("--max-len", *max_len, "Stop after this length")->check(CLI::NonNegativeNumber);
    sub->add_option("--exact-len", *exact_len, "Only words of exactly this length")->check(CLI::NonNegativeNumber);
    sub->add_option("--word-cap", limits->word_cap, "Words checked before giving up");
    sub->callback([&, formula, limits, max_len, exact_len] {
      action = [&, formula, limits, max_len, exact_len] {
        const std::string text = resolve_file_or_text(*formula);
        const Alphabet sigma(*alphabet);
        const Formula f = parse_formula(text, sigma, Signature::Order);
        limits->max_len = *max_len;
        limits->exact_len = *exact_len;
        const SatResult r = sat_search(f, sigma, *limits);
        ordered_json j = to_json(r);
        j["alphabet"] = sigma.letters();
        j["quantifierDepth"] = metrics(f).quantifier_depth;
        std::string t = std::string(to_string(r.status)) + "\n";
        if (r.witness) t += r.witness->letters() + "\n";
        out.emit(j, t, true);
        return 0;
      };
    });
  }

  // shrink
  {
    auto* sub = app.add_subcommand("shrink", "Shorter word with the same depth-n sentences");
    auto word = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    sub->add_option("word", *word, "Word (inline, @file or -)")->required();
    sub->add_option("-n", *n, "Quantifier depth")->required()->check(CLI::Range(1, 62));
    add_alphabet(sub);
    sub->callback([&, word, n] {
      action = [&, word, n] {
        const std::string w = resolve_text(*word);
        const Word wd(choose_alphabet(alphabet, {w}), w);
        const Word s = shrink(wd, *n);
        const int k = static_cast<int>(wd.occurring_letters().size());
        ordered_json j{{"input", w}, {"n", *n}, {"output", s.letters()}, {"length", s.length()}};
        j["bound"] = k > 0 ? ordered_json(small_model_bound(*n, k)) : ordered_json(0);
        out.emit(j, s.letters() + "\n", false);
        return 0;
      };
    });
  }

  // reduce-cnf
  {
    auto* sub = app.add_subcommand("reduce-cnf", "Translate a DIMACS CNF into an equisatisfiable sentence");
    auto file = std::make_shared<std::string>();
    auto solve = std::make_shared<bool>(false);
    sub->add_option("dimacs", *file, "DIMACS file, @file or -")->required();
    sub->add_flag("--solve", *solve, "Also decide the sentence and the CNF");
    sub->callback([&, file, solve] {
      action = [&, file, solve] {
        const Cnf cnf = parse_dimacs(resolve_file_or_text(*file));
        const auto [f, n] = cnf_to_fo2(cnf);
        const std::string rendered = render(f);
        ordered_json j{{"variables", cnf.variable_count},
                       {"clauses", cnf.clauses.size()},
                       {"n", n},
                       {"alphabet", cnf_alphabet().letters()},
                       {"formula", rendered},
                       {"size", rendered.size()}};
        std::string t = rendered + "\n";
        if (*solve) {
          SatLimits lim;
          lim.exact_len = n;
          const SatResult r = sat_search(f, cnf_alphabet(), lim);
          const bool brute = cnf_brute_force(cnf);
          j["sat"] = to_json(r);
          j["bruteForce"] = brute;
          t += std::string(to_string(r.status)) + (r.witness ? " " + r.witness->letters() : "") +
               "\nbrute force: " + (brute ? "SAT" : "UNSAT") + "\n";
        }
        out.emit(j, t, true);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 1);
  }
  out.format = format_name == "json" ? Format::Json : format_name == "text" ? Format::Text : Format::Auto;
  return action ? action() : 0;
}

}  // namespace
}  // namespace fo2::cli

int main(int argc, char** argv) {
  using namespace fo2;
  using fo2::cli::fail;
  try {
    return fo2::cli::run(argc, argv);
  } catch (const ParseError& e) {
    return fail("parse-error", e.what(), 1, {{"kind", fo2::cli::parse_kind(e.kind())}, {"offset", e.offset()}});
  } catch (const ResourceError& e) {
    return fail("resource-cap", e.what(), 2, {{"cap", e.cap()}, {"limit", e.limit()}});
  } catch (const fo2::cli::InputError& e) {
    return fail("io-error", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return fail("invalid-input", e.what(), 1);
  } catch (const std::out_of_range& e) {
    return fail("invalid-input", e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
}
