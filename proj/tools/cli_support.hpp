#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fo2/equivalence.hpp"
#include "fo2/game.hpp"
#include "fo2/hierarchy.hpp"
#include "fo2/solver.hpp"

namespace fo2::cli {

using nlohmann::ordered_json;

/// Raised for unreadable input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolves an argument: `-` reads stdin, `@path` reads a file, anything
/// else is taken literally.  File and stdin contents lose trailing
/// whitespace.
std::string resolve_text(const std::string& arg);

/// As resolve_text, but a plain argument naming an existing file is read
/// from that file.
std::string resolve_file_or_text(const std::string& arg);

/// `--alphabet` if given, else the letters of `sources` (falling back to
/// {a} when there are none).
Alphabet choose_alphabet(const std::optional<std::string>& given, const std::vector<std::string_view>& sources);

/// Letters a formula text applies as predicates: an alphanumeric character
/// directly followed by `(` and not preceded by another alphanumeric.
std::string formula_letters(std::string_view text);

ordered_json position_json(MaybePosition p);
ordered_json to_json(const EquivReport& r);
ordered_json to_json(const GameVerdict& v);
ordered_json to_json(const HierarchyReport& r);
ordered_json to_json(const SatResult& r);
ordered_json to_json(const FormulaMetrics& m);

}  // namespace fo2::cli
