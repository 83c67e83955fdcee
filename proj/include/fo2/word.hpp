#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fo2 {

/// 1-indexed position in a word.
using Position = std::int32_t;

/// A position, or nothing when a ranker is undefined on a word.
using MaybePosition = std::optional<Position>;

/// Finite alphabet of single alphanumeric letters, kept sorted so that every
/// enumeration over it is deterministic.
class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty set, duplicates or letters
  /// that are not alphanumeric.
  explicit Alphabet(std::string_view letters);

  /// The sorted set of letters occurring in `text` plus `extras`.
  static Alphabet infer(std::string_view text, std::string_view extras = {});

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool contains(char c) const noexcept;

  /// Smallest alphabet containing both.
  Alphabet merged(const Alphabet& other) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// A finite word over a declared alphabet.  Immutable after construction.
class Word {
 public:
  /// Throws std::invalid_argument if a letter is outside `alphabet`.
  Word(Alphabet alphabet, std::string_view letters);

  /// Word over the alphabet inferred from its own letters.  The empty word
  /// needs an explicit alphabet.
  static Word over_own_letters(std::string_view letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& letters() const noexcept { return letters_; }
  Position length() const noexcept { return static_cast<Position>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter at 1-indexed position i.  Unchecked.
  char at(Position i) const noexcept { return letters_[static_cast<std::size_t>(i - 1)]; }

  /// Distinct letters that actually occur, sorted.
  std::string occurring_letters() const;

  /// Same letters viewed over a larger alphabet.
  Word with_alphabet(const Alphabet& alphabet) const { return Word(alphabet, letters_); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::string letters_;
};

enum class OrderType : std::uint8_t { Less, Equal, Greater };

/// Successor order type: i << j, i = j-1, i = j, i = j+1, i >> j.
enum class SucOrderType : std::uint8_t { FarBelow, Pred, Equal, Succ, FarAbove };

constexpr OrderType ord(Position i, Position j) noexcept {
  return i < j ? OrderType::Less : (i == j ? OrderType::Equal : OrderType::Greater);
}

constexpr SucOrderType sucord(Position i, Position j) noexcept {
  if (i < j - 1) return SucOrderType::FarBelow;
  if (i == j - 1) return SucOrderType::Pred;
  if (i == j) return SucOrderType::Equal;
  if (i == j + 1) return SucOrderType::Succ;
  return SucOrderType::FarAbove;
}

const char* to_string(OrderType t) noexcept;
const char* to_string(SucOrderType t) noexcept;

/// Maximal run of one letter, [start, end] inclusive and 1-indexed.
struct Segment {
  char letter;
  Position start;
  Position end;

  Position length() const noexcept { return end - start + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

std::vector<Segment> segments(std::string_view letters);
inline std::vector<Segment> segments(const Word& w) { return segments(w.letters()); }

}  // namespace fo2
