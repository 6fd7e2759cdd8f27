#ifndef LLS_IDENTITY_HPP_
#define LLS_IDENTITY_HPP_

#include <string>
#include <string_view>

#include "lls/cayley_table.hpp"

namespace lls {

//! A semigroup identity lhs = rhs where both sides are nonempty words over
//! the variables a..z, e.g. Identity("aba", "ab").
class Identity {
 public:
  Identity(std::string lhs, std::string rhs);

  //! Parses "aba=ab".
  static Identity parse(std::string_view text);

  const std::string& lhs() const noexcept {
    return lhs_;
  }

  const std::string& rhs() const noexcept {
    return rhs_;
  }

  //! Distinct variables across both sides, in sorted order.
  const std::string& variables() const noexcept {
    return vars_;
  }

  std::string str() const {
    return lhs_ + "=" + rhs_;
  }

 private:
  std::string lhs_, rhs_, vars_;
};

//! Exhaustive check of the identity over all variable assignments.
//! Pre: t associative. Throws SizeError for more than 4 variables on a
//! table of order > 32 (and on assignment counts past 2^27 regardless).
bool satisfies_identity(const CayleyTable& t, const Identity& id);

//! t has a constant product, i.e. xy = z for a fixed z and all x, y.
bool is_zero_semigroup(const CayleyTable& t);

struct BasicPredicates {
  bool is_band;               // aa = a
  bool is_left_zero;          // ab = a
  bool is_zero_semigroup;     // constant product
  bool is_semilattice;        // band and commutative
  bool is_left_regular_band;  // band and aba = ab
  bool is_left_normal_band;   // band and abc = acb
  bool is_left_legal;         // aba = ab
  bool is_commutative;        // ab = ba
};

//! Pre: t associative.
BasicPredicates basic_predicates(const CayleyTable& t);

}  // namespace lls

#endif  // LLS_IDENTITY_HPP_
