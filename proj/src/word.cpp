#include "fo2/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fo2 {

namespace {

std::string sorted_unique(std::string_view text) {
  std::string out(text);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (char c : letters) {
    if (!std::isalnum(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("alphabet letter '") + c + "' is not alphanumeric");
  }
  letters_ = sorted_unique(letters);
  if (letters_.size() != letters.size())
    throw std::invalid_argument("alphabet contains duplicate letters");
}

Alphabet Alphabet::infer(std::string_view text, std::string_view extras) {
  std::string all(text);
  all.append(extras);
  return Alphabet(sorted_unique(all));
}

bool Alphabet::contains(char c) const noexcept {
  return std::binary_search(letters_.begin(), letters_.end(), c);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return infer(letters_, other.letters_);
}

Word::Word(Alphabet alphabet, std::string_view letters)
    : alphabet_(std::move(alphabet)), letters_(letters) {
  for (char c : letters_) {
    if (!alphabet_.contains(c))
      throw std::invalid_argument(std::string("letter '") + c + "' is not in the alphabet {" +
                                  alphabet_.letters() + "}");
  }
}

Word Word::over_own_letters(std::string_view letters) {
  return Word(Alphabet::infer(letters), letters);
}

std::string Word::occurring_letters() const { return sorted_unique(letters_); }

const char* to_string(OrderType t) noexcept {
  switch (t) {
    case OrderType::Less: return "<";
    case OrderType::Equal: return "=";
    case OrderType::Greater: return ">";
  }
  return "?";
}

const char* to_string(SucOrderType t) noexcept {
  switch (t) {
    case SucOrderType::FarBelow: return "<<";
    case SucOrderType::Pred: return "-1";
    case SucOrderType::Equal: return "=";
    case SucOrderType::Succ: return "+1";
    case SucOrderType::FarAbove: return ">>";
  }
  return "?";
}

std::vector<Segment> segments(std::string_view letters) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out.push_back({letters[i], static_cast<Position>(i + 1), static_cast<Position>(j)});
    i = j;
  }
  return out;
}

}  // namespace fo2
