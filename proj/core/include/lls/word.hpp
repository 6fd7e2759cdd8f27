#ifndef LLS_WORD_HPP_
#define LLS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lls {

//! A letter is an arbitrary non-whitespace token from an ordered alphabet.
using Letter = std::string;

//! A nonempty finite sequence of letters.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  //! Parses whitespace-separated letter tokens. A single token of several
  //! characters is unpacked letter-by-letter, so "xy" means x then y.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept {
    return letters_.size();
  }

  const Letter& operator[](std::size_t i) const {
    return letters_[i];
  }

  const std::vector<Letter>& letters() const noexcept {
    return letters_;
  }

  auto begin() const noexcept {
    return letters_.begin();
  }

  auto end() const noexcept {
    return letters_.end();
  }

  Word concat(const Word& other) const;

  //! Packed ("xxy") when every letter is a single character, otherwise
  //! space-separated ("ab cd").
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

//! A word in which every letter occurs at most once, except that the first
//! letter may occur doubled at the head ("xxyz" is fine, "xyx" is not).
//! These are exactly the normal forms of the rewriting system
//! {aba -> ab, aaa -> aa, abb -> ab} over all words.
class NormalWord {
 public:
  explicit NormalWord(Word w);  // validates the shape

  const Word& word() const noexcept {
    return word_;
  }

  std::size_t size() const noexcept {
    return word_.size();
  }

  bool doubled_head() const noexcept;

  std::string str() const {
    return word_.str();
  }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;

 private:
  Word word_;
};

//! Distinct letters of w in order of first occurrence.
Word support_sequence(const Word& w);

//! Drops one of the first two letters when they are equal. For a normal
//! word the result is duplicate-free.
Word star(const NormalWord& w);

//! The unique normal word equivalent to w modulo the identities
//! uvu = uv, uuu = uu, uvv = uv.
NormalWord normalize(const Word& w);

//! Product of two normal words; realizes the multiplication of the free
//! semigroup of the aba = ab variety on the common alphabet.
NormalWord circ(const NormalWord& a, const NormalWord& b);

//! Word problem: true when a and b have the same normal form.
bool are_equivalent(const Word& a, const Word& b);

}  // namespace lls

#endif  // LLS_WORD_HPP_
