#ifndef LLS_CONSTRUCTIONS_HPP_
#define LLS_CONSTRUCTIONS_HPP_

#include <optional>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/partition.hpp"

namespace lls {

//! Restriction of t to a multiplication-closed subset (indices ascending).
//! Throws PreconditionError naming an escaping product otherwise.
CayleyTable subtable(const CayleyTable& t, const std::vector<int>& subset);

struct SquareIdeal {
  std::vector<int> elements;  // indices of S^2 in t, ascending
  CayleyTable sub;            // the subsemigroup S^2
};

//! The ideal S^2 = { ab : a, b in S }. Pre: t associative.
SquareIdeal square_ideal(const CayleyTable& t);

//! Collapses a (two-sided) ideal to a single zero element named "0", kept
//! last; the other elements keep their order and names. Throws
//! PreconditionError naming a violating pair when the set is not an ideal.
CayleyTable rees_quotient(const CayleyTable& t, const std::vector<int>& ideal);

//! Componentwise product on pairs; element (i, j) of the result is named
//! "(a,b)" from the factor names and sits at index i * b.order() + j.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

//! Index of the two-sided identity element, if any.
std::optional<int> identity_element(const CayleyTable& t);

//! Returns t unchanged when it already has an identity, else appends a new
//! element named "1" acting as one.
CayleyTable adjoin_identity(const CayleyTable& t);

//! Table on the blocks of a congruence; block names are the leaders' names.
//! Throws PreconditionError when p is not compatible with t.
CayleyTable quotient_table(const CayleyTable& t, const Partition& p);

}  // namespace lls

#endif  // LLS_CONSTRUCTIONS_HPP_
