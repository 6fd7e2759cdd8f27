#include "lls/free_semigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lls/error.hpp"

namespace lls {

namespace {

//! Duplicate-free words as alphabet-index sequences, every nonempty prefix
//! of every arrangement, in DFS order.
void arrangements(int n, std::vector<int>& cur, std::vector<bool>& used,
                  std::vector<std::vector<int>>& out) {
  for (int i = 0; i < n; ++i) {
    if (used[i]) {
      continue;
    }
    used[i] = true;
    cur.push_back(i);
    out.push_back(cur);
    arrangements(n, cur, used, out);
    cur.pop_back();
    used[i] = false;
  }
}

std::string element_name(const NormalWord& w) {
  bool packed = std::all_of(w.word().begin(), w.word().end(),
                            [](const Letter& l) { return l.size() == 1; });
  if (packed) {
    return w.str();
  }
  // names must be whitespace-free in the table format
  std::string out;
  for (const auto& l : w.word()) {
    if (!out.empty()) {
      out += '.';
    }
    out += l;
  }
  return out;
}

}  // namespace

std::size_t free_semigroup_order(std::size_t alphabet_size) {
  std::size_t total = 0, falling = 1;
  for (std::size_t k = 1; k <= alphabet_size; ++k) {
    falling *= alphabet_size - k + 1;  // n! / (n-k)!
    total += falling;
  }
  return 2 * total;
}

FreeSemigroup free_semigroup(const std::vector<Letter>& alphabet,
                             std::size_t max_letters) {
  if (alphabet.empty()) {
    throw std::invalid_argument("the alphabet must be nonempty");
  }
  {
    auto sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("the alphabet contains a repeated letter");
    }
  }
  if (alphabet.size() > max_letters) {
    throw SizeError("alphabet of " + std::to_string(alphabet.size()) +
                    " letters gives a free semigroup of order " +
                    std::to_string(free_semigroup_order(alphabet.size())) +
                    "; the bound is " + std::to_string(max_letters) +
                    " letters");
  }
  int n = static_cast<int>(alphabet.size());

  std::vector<std::vector<int>> bare;
  {
    std::vector<int> cur;
    std::vector<bool> used(n, false);
    arrangements(n, cur, used, bare);
  }

  // every normal word is a duplicate-free word or one with a doubled head
  std::vector<std::vector<int>> seqs;
  seqs.reserve(2 * bare.size());
  for (const auto& w : bare) {
    seqs.push_back(w);
    std::vector<int> doubled;
    doubled.reserve(w.size() + 1);
    doubled.push_back(w[0]);
    doubled.insert(doubled.end(), w.begin(), w.end());
    seqs.push_back(std::move(doubled));
  }
  std::sort(seqs.begin(), seqs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;  // graded lexicographic
            });

  std::vector<NormalWord> elements;
  elements.reserve(seqs.size());
  std::map<std::vector<Letter>, int> index;
  for (const auto& seq : seqs) {
    std::vector<Letter> letters;
    letters.reserve(seq.size());
    for (int i : seq) {
      letters.push_back(alphabet[i]);
    }
    index.emplace(letters, static_cast<int>(elements.size()));
    elements.emplace_back(Word(std::move(letters)));
  }

  int m = static_cast<int>(elements.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& e : elements) {
    names.push_back(element_name(e));
  }
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      NormalWord p = circ(elements[i], elements[j]);
      flat[static_cast<std::size_t>(i) * m + j] = index.at(p.word().letters());
    }
  }
  return FreeSemigroup{std::move(elements),
                       CayleyTable(std::move(names), std::move(flat))};
}

}  // namespace lls
