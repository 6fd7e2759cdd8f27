#ifndef LLS_TESTS_HELPERS_HPP_
#define LLS_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/partition.hpp"
#include "lls/word.hpp"

namespace testkit {

lls::CayleyTable left_zero(int n);
lls::CayleyTable right_zero(int n);

//! Element 0 absorbs everything.
lls::CayleyTable zero_semigroup(int n);

//! {0 < 1 < ... < n-1} under min.
lls::CayleyTable chain_semilattice(int n);

//! Z_n under addition.
lls::CayleyTable cyclic_group(int n);

//! The five-element combinatorial Brandt semigroup: 2x2 matrix units and 0.
lls::CayleyTable brandt_b2();

//! Loads tables/<stem>.cay from the source tree.
lls::CayleyTable load_fixture(const std::string& stem);

//! Partition of t's elements given as blocks of element names.
lls::Partition blocks_by_names(
    const lls::CayleyTable& t,
    const std::vector<std::vector<std::string>>& blocks);

//! All words of length 1..max_len over the alphabet, shortest first.
std::vector<lls::Word> all_words(const std::vector<lls::Letter>& alphabet,
                                 int max_len);

}  // namespace testkit

#endif  // LLS_TESTS_HELPERS_HPP_
