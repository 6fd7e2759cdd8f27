#ifndef LLS_CONGRUENCES_HPP_
#define LLS_CONGRUENCES_HPP_

#include <optional>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/partition.hpp"

namespace lls {

//! A pair a ~ b whose products by c separate, on the named side.
struct CongruenceWitness {
  int a, b, c;
  bool left;  // true: ca !~ cb, false: ac !~ bc
};

//! First compatibility violation of p with t, if any.
std::optional<CongruenceWitness> congruence_violation(const CayleyTable& t,
                                                      const Partition& p);

//! A partition compatible with the multiplication of a table; compatibility
//! is checked at construction.
class Congruence {
 public:
  Congruence(const CayleyTable& t, Partition p);

  const Partition& partition() const noexcept {
    return partition_;
  }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Partition partition_;
};

//! Smallest congruence of t identifying a and b (pair-merge fixpoint).
Partition principal_congruence(const CayleyTable& t, int a, int b);

//! All congruences, computed as the join closure of the principal
//! congruences plus the identity relation, sorted by (block count
//! descending, canonical encoding). Exhaustive and exact. Throws SizeError
//! above max_order.
std::vector<Congruence> enumerate_congruences(const CayleyTable& t,
                                              int max_order = 8);

//! True when the intersection of all congruences strictly above the
//! identity relation is itself strictly above it. Order 1 gives false.
bool is_subdirectly_irreducible(const CayleyTable& t, int max_order = 8);

//! Intersection of all congruences with a semilattice quotient. The result
//! is verified to be such a congruence itself.
Congruence least_semilattice_congruence(const CayleyTable& t,
                                        int max_order = 8);

}  // namespace lls

#endif  // LLS_CONGRUENCES_HPP_
