#include "cli_support.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fo2::cli {

namespace {

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return trim_right(buf.str());
}

std::string read_stdin() {
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return trim_right(std::move(all));
}

}  // namespace

std::string resolve_text(const std::string& arg) {
  if (arg == "-") return read_stdin();
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

std::string resolve_file_or_text(const std::string& arg) {
  if (arg == "-" || (!arg.empty() && arg.front() == '@')) return resolve_text(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

Alphabet choose_alphabet(const std::optional<std::string>& given, const std::vector<std::string_view>& sources) {
  if (given) return Alphabet(*given);
  std::string letters;
  for (auto s : sources) letters.append(s);
  if (letters.empty()) return Alphabet("a");
  return Alphabet::infer(letters);
}

std::string formula_letters(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (!std::isalnum(c) || text[i + 1] != '(') continue;
    if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
    out += text[i];
  }
  return out;
}

ordered_json position_json(MaybePosition p) { return p ? ordered_json(*p) : ordered_json(nullptr); }

ordered_json to_json(const EquivReport& r) {
  ordered_json j;
  j["n"] = r.n;
  if (r.m) j["m"] = *r.m;
  j["signature"] = to_string(r.signature);
  j["verdict"] = r.verdict;
  j["failedCondition"] = to_string(r.failed);
  j["witnesses"] = ordered_json::array();
  for (const auto& w : r.witnesses) {
    j["witnesses"].push_back({{"ranker", w.ranker}, {"posU", position_json(w.pos_u)}, {"posV", position_json(w.pos_v)}});
  }
  return j;
}

ordered_json to_json(const GameVerdict& v) {
  ordered_json j;
  j["delilahWins"] = v.delilah_wins;
  if (v.first_winning_move) {
    const auto& m = *v.first_winning_move;
    j["firstMove"] = {{"side", to_string(m.side)}, {"pebble", to_string(m.pebble)}, {"position", m.position}};
  } else {
    j["firstMove"] = nullptr;
  }
  j["states"] = v.states;
  return j;
}

ordered_json to_json(const HierarchyReport& r) {
  ordered_json j;
  j["m"] = r.words.m;
  j["n"] = r.words.n;
  j["signature"] = to_string(r.words.signature);
  j["u"] = r.words.u.letters();
  j["v"] = r.words.v.letters();
  if (r.rankers_indistinguishable || r.game_indistinguishable) {
    j["indistinguishable"] = {{"m", r.words.m - 1},
                              {"n", r.words.n},
                              {"rankers", r.rankers_indistinguishable.value_or(false)},
                              {"game", r.game_indistinguishable.value_or(false)}};
  } else {
    j["indistinguishable"] = nullptr;
  }
  if (r.rankers) {
    j["separatingRankers"] = {{"r", to_string(r.rankers->r)},
                              {"s", to_string(r.rankers->s)},
                              {"rU", position_json(r.r_u)},
                              {"sU", position_json(r.s_u)},
                              {"rV", position_json(r.r_v)},
                              {"sV", position_json(r.s_v)},
                              {"orderSwapped", r.order_swapped.value_or(false)}};
  } else {
    j["separatingRankers"] = nullptr;
  }
  if (r.level_one_u) {
    j["levelOne"] = {{"sentence", r.level_one_sentence}, {"u", *r.level_one_u}, {"v", r.level_one_v.value_or(false)}};
  } else {
    j["levelOne"] = nullptr;
  }
  j["separatingDepth"] = r.separating_depth ? ordered_json(*r.separating_depth) : ordered_json(nullptr);
  j["separationSearchBound"] = r.separation_search_bound;
  j["confirmed"] = r.confirmed();
  return j;
}

ordered_json to_json(const SatResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? ordered_json(r.witness->letters()) : ordered_json(nullptr);
  j["exploredBound"] = r.explored_bound;
  j["wordsChecked"] = r.words_checked;
  return j;
}

ordered_json to_json(const FormulaMetrics& m) {
  ordered_json j;
  j["quantifierDepth"] = m.quantifier_depth;
  j["alternationDepth"] = m.alternation_depth;
  j["usesSuccessor"] = m.uses_successor;
  ordered_json free = ordered_json::array();
  if (m.free_x) free.push_back("x");
  if (m.free_y) free.push_back("y");
  j["freeVariables"] = free;
  j["sentence"] = m.is_sentence();
  return j;
}

}  // namespace fo2::cli
