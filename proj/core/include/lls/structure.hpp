#ifndef LLS_STRUCTURE_HPP_
#define LLS_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/congruences.hpp"
#include "lls/partition.hpp"

namespace lls {

struct EquivalenceReport {
  Partition relation;
  bool is_congruence;
  std::optional<CongruenceWitness> witness;  // set when not a congruence
  //! Set when is_congruence: whether the quotient is a semilattice.
  std::optional<bool> quotient_is_semilattice;
};

//! The relation a ~ b iff a^n b = a^{n+1} and b^n a = b^{n+1} for some
//! n <= order + 1 (a complete bound: both conditions are monotone in n and
//! power sequences cycle within order steps). dual = true multiplies on the
//! left instead: b a^n = a^{n+1} and a b^n = b^{n+1}.
//! Pre: t associative.
EquivalenceReport tau_relation(const CayleyTable& t, bool dual = false);

//! The relation a ~ b iff a^n in SbS and b^n in SaS for some n <= order + 1.
//! Requires a left legal table (throws PreconditionError otherwise; the
//! relation need not be reflexive in general).
EquivalenceReport eta_relation(const CayleyTable& t);

//! Partition of S by the left-zero classes of the band S^2, lifted through
//! a -> a^2. Requires a left legal table.
Partition semilattice_components(const CayleyTable& t);

struct RetractVerdict {
  bool is_homomorphism;  // (ab)^2 = a^2 b^2 for all a, b
  bool fixes_ideal;      // e^2 = e for every e in S^2
  bool is_retract;       // homomorphism onto S^2 fixing it pointwise
};

//! Examines the squaring map a -> a^2 as a candidate retraction onto S^2.
RetractVerdict square_retract_check(const CayleyTable& t);

//! a in S^1 b S^1 implies a^m in S^1 b^2 S^1 for some m <= order + 1.
bool is_putcha(const CayleyTable& t);

struct SeparativityFlags {
  bool right_separative;   // ab = b^2 and ba = a^2 imply a = b
  bool left_separative;    // ab = a^2 and ba = b^2 imply a = b
  bool weakly_separative;  // a^2 = ab = b^2 implies a = b
};

SeparativityFlags separativity(const CayleyTable& t);

enum class ClauseStatus { pass, vacuous_pass, fail };

std::string to_string(ClauseStatus s);

struct AuditClause {
  char id;           // 'a' .. 'h'
  std::string name;  // stable slug, e.g. "retract-lrb-equivalence"
  ClauseStatus status;
  std::string note;  // "(positive)", "(negative)", or a failure witness
};

struct AuditReport {
  std::vector<AuditClause> clauses;

  bool all_ok() const;  // no clause failed

  //! One line per clause: "<id> <name>: <status>[ <note>]".
  std::string to_text() const;
};

//! Checks the structural facts that hold for every finite left legal
//! semigroup, as material implications on the given table:
//!   a  left legal and ab = aab  iff  a -> a^2 retracts onto the left
//!      regular band S^2 (biconditional)
//!   b  ab = ac  iff  a -> a^2 retracts onto the left zero band S^2
//!   c  left legal implies: the semilattice decomposition is trivial iff
//!      aab = aa holds iff S^2 is left zero
//!   d  left legal implies tau = eta as partitions
//!   e  left legal implies right separative iff weakly separative
//!   f  left legal and left separative imply commutative
//!   g  left legal implies the power condition of is_putcha
//!   h  left legal implies S^2 is a band, aaa = aa, and ab = abb
//! Implications with a false antecedent report vacuous-pass; biconditionals
//! report pass with a (positive) or (negative) instantiation note.
//! Pre: t associative.
AuditReport theorem_audit(const CayleyTable& t);

}  // namespace lls

#endif  // LLS_STRUCTURE_HPP_
