#include "lls/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace lls {

namespace {

bool duplicate_free(const std::vector<Letter>& letters) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : letters) {
    if (!seen.insert(l).second) {
      return false;
    }
  }
  return true;
}

bool contains(const std::vector<Letter>& letters, const Letter& l) {
  return std::find(letters.begin(), letters.end(), l) != letters.end();
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("a word must contain at least one letter");
  }
  for (const auto& l : letters_) {
    if (l.empty()) {
      throw std::invalid_argument("empty letter token");
    }
    if (l.find_first_of(" \t\r\n\f\v") != std::string::npos) {
      throw std::invalid_argument("letter token contains whitespace: \"" + l +
                                  "\"");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.emplace_back(text.substr(start, i - start));
    }
  }
  if (tokens.empty()) {
    throw std::invalid_argument("empty word");
  }
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // single-character packing: "xy" is the two-letter word x y
    std::vector<Letter> unpacked;
    unpacked.reserve(tokens[0].size());
    for (char c : tokens[0]) {
      unpacked.emplace_back(1, c);
    }
    return Word(std::move(unpacked));
  }
  return Word(std::move(tokens));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(ls));
}

std::string Word::str() const {
  bool packed = std::all_of(letters_.begin(), letters_.end(),
                            [](const Letter& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && !packed) {
      out += ' ';
    }
    out += letters_[i];
  }
  return out;
}

NormalWord::NormalWord(Word w) : word_(std::move(w)) {
  std::vector<Letter> rest = word_.letters();
  if (rest.size() >= 2 && rest[0] == rest[1]) {
    rest.erase(rest.begin());
  }
  if (!duplicate_free(rest)) {
    throw std::invalid_argument("not a normal word: \"" + word_.str() + "\"");
  }
}

bool NormalWord::doubled_head() const noexcept {
  return word_.size() >= 2 && word_[0] == word_[1];
}

Word support_sequence(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (!contains(out, l)) {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word star(const NormalWord& w) {
  if (!w.doubled_head()) {
    return w.word();
  }
  std::vector<Letter> ls = w.word().letters();
  ls.erase(ls.begin());
  return Word(std::move(ls));
}

NormalWord normalize(const Word& w) {
  if (w.size() == 1) {
    return NormalWord(w);
  }
  // head = first letter, doubled when the word starts with a square;
  // tail = the remaining distinct letters in first-occurrence order
  Word v = support_sequence(w);
  std::vector<Letter> out;
  out.push_back(w[0]);
  if (w[0] == w[1]) {
    out.push_back(w[0]);
  }
  out.insert(out.end(), v.letters().begin() + 1, v.letters().end());
  return NormalWord(Word(std::move(out)));
}

NormalWord circ(const NormalWord& a, const NormalWord& b) {
  const std::vector<Letter>& al = a.word().letters();
  std::vector<Letter> out = al;
  if (a.size() == 1 && b.word()[0] == al[0]) {
    out.push_back(al[0]);
  }
  for (const auto& l : star(b)) {
    if (!contains(al, l)) {
      out.push_back(l);
    }
  }
  return NormalWord(Word(std::move(out)));
}

bool are_equivalent(const Word& a, const Word& b) {
  return normalize(a) == normalize(b);
}

}  // namespace lls
