#ifndef LLS_FREE_SEMIGROUP_HPP_
#define LLS_FREE_SEMIGROUP_HPP_

#include <cstddef>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/word.hpp"

namespace lls {

struct FreeSemigroup {
  //! All normal words over the alphabet in graded lexicographic order:
  //! by length, then lexicographically by alphabet position.
  std::vector<NormalWord> elements;

  //! Multiplication table of circ on elements; element names are the words
  //! (packed for single-character letters, '.'-joined otherwise, so that
  //! names stay whitespace-free).
  CayleyTable table;
};

//! 2 * sum_{k=1..n} n!/(n-k)!, the number of normal words over n letters.
std::size_t free_semigroup_order(std::size_t alphabet_size);

//! The free object of the aba = ab variety on the given alphabet, as an
//! explicit element list and Cayley table. The alphabet must be nonempty,
//! duplicate-free, and at most max_letters long (default 4, order 128).
FreeSemigroup free_semigroup(const std::vector<Letter>& alphabet,
                             std::size_t max_letters = 4);

}  // namespace lls

#endif  // LLS_FREE_SEMIGROUP_HPP_
