#ifndef LLS_REPORT_HPP_
#define LLS_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/identity.hpp"
#include "lls/partition.hpp"
#include "lls/structure.hpp"
#include "lls/varieties.hpp"

namespace lls {

struct AnalysisOptions {
  //! Largest order for which congruence-based fields (subdirect
  //! irreducibility, eta on tables that are not left legal) are computed.
  int congruence_bound = 8;
};

//! Everything analyze() finds out about one table. to_text() emits the
//! fields in a fixed order, one "key: value" line each, with the theorem
//! audit last.
struct AnalysisReport {
  int order = 0;
  std::vector<std::string> names;
  BasicPredicates predicates{};
  bool sat_ab_aab = false;  // ab = aab
  bool sat_ab_ac = false;   // ab = ac
  bool sat_aab_aa = false;  // aab = aa
  std::vector<int> square_elements;
  bool square_left_zero = false;
  bool square_left_regular_band = false;
  Partition tau, sigma;
  std::optional<Partition> eta;
  std::optional<bool> eta_congruence;
  std::optional<bool> eta_quotient_semilattice;
  std::string eta_note;  // reason when eta is absent
  RetractVerdict retract{};
  SeparativityFlags separativity{};
  bool putcha = false;
  std::vector<VarietyNode> varieties;
  std::optional<bool> subdirectly_irreducible;
  AuditReport audit;

  std::string to_text() const;
};

//! Full structural analysis of one finite semigroup. Throws
//! PreconditionError (naming a triple) when t is not associative.
AnalysisReport analyze(const CayleyTable& t, const AnalysisOptions& opt = {});

}  // namespace lls

#endif  // LLS_REPORT_HPP_
