#include "lls/report.hpp"

#include <string>

#include "lls/congruences.hpp"
#include "lls/constructions.hpp"

namespace lls {

namespace {

const char* yes_no(bool b) {
  return b ? "true" : "false";
}

}  // namespace

AnalysisReport analyze(const CayleyTable& t, const AnalysisOptions& opt) {
  t.require_associative();

  AnalysisReport r;
  r.order = t.order();
  r.names = t.names();
  r.predicates = basic_predicates(t);
  r.sat_ab_aab = satisfies_identity(t, Identity("ab", "aab"));
  r.sat_ab_ac = satisfies_identity(t, Identity("ab", "ac"));
  r.sat_aab_aa = satisfies_identity(t, Identity("aab", "aa"));

  SquareIdeal sq = square_ideal(t);
  r.square_elements = sq.elements;
  BasicPredicates sqp = basic_predicates(sq.sub);
  r.square_left_zero = sqp.is_left_zero;
  r.square_left_regular_band = sqp.is_left_regular_band;

  r.tau = tau_relation(t).relation;
  r.sigma = tau_relation(t, /*dual=*/true).relation;

  if (r.predicates.is_left_legal) {
    EquivalenceReport eta = eta_relation(t);
    r.eta = eta.relation;
    r.eta_congruence = eta.is_congruence;
    r.eta_quotient_semilattice = eta.quotient_is_semilattice;
  } else if (t.order() <= opt.congruence_bound) {
    r.eta = least_semilattice_congruence(t, opt.congruence_bound).partition();
    r.eta_congruence = true;
    r.eta_quotient_semilattice = true;
    r.eta_note = "(least semilattice congruence; the table is not left legal)";
  } else {
    r.eta_note =
        "skipped (not left legal and order exceeds the congruence bound)";
  }

  r.retract = square_retract_check(t);
  r.separativity = separativity(t);
  r.putcha = is_putcha(t);
  r.varieties = variety_membership(t);
  if (t.order() <= opt.congruence_bound) {
    r.subdirectly_irreducible =
        is_subdirectly_irreducible(t, opt.congruence_bound);
  }
  r.audit = theorem_audit(t);
  return r;
}

std::string AnalysisReport::to_text() const {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };

  line("order", std::to_string(order));
  std::string elems;
  for (const auto& n : names) {
    if (!elems.empty()) {
      elems += ' ';
    }
    elems += n;
  }
  line("elements", elems);
  line("associative", "true");
  line("left_legal", yes_no(predicates.is_left_legal));
  line("band", yes_no(predicates.is_band));
  line("left_zero", yes_no(predicates.is_left_zero));
  line("zero_semigroup", yes_no(predicates.is_zero_semigroup));
  line("semilattice", yes_no(predicates.is_semilattice));
  line("left_regular_band", yes_no(predicates.is_left_regular_band));
  line("left_normal_band", yes_no(predicates.is_left_normal_band));
  line("commutative", yes_no(predicates.is_commutative));
  line("ab=aab", yes_no(sat_ab_aab));
  line("ab=ac", yes_no(sat_ab_ac));
  line("aab=aa", yes_no(sat_aab_aa));

  std::string sq = "{";
  for (std::size_t i = 0; i < square_elements.size(); ++i) {
    if (i > 0) {
      sq += ' ';
    }
    sq += names[square_elements[i]];
  }
  sq += '}';
  line("square_ideal", sq);
  line("square_left_zero", yes_no(square_left_zero));
  line("square_left_regular_band", yes_no(square_left_regular_band));

  line("tau", tau.str(names));
  line("sigma", sigma.str(names));
  if (eta) {
    line("eta", eta->str(names) + (eta_note.empty() ? "" : " " + eta_note));
    line("eta_congruence", yes_no(*eta_congruence));
    if (eta_quotient_semilattice) {
      line("eta_quotient_semilattice", yes_no(*eta_quotient_semilattice));
    }
  } else {
    line("eta", eta_note);
  }

  line("retract_homomorphism", yes_no(retract.is_homomorphism));
  line("retract_fixes_ideal", yes_no(retract.fixes_ideal));
  line("retract", yes_no(retract.is_retract));
  line("right_separative", yes_no(separativity.right_separative));
  line("left_separative", yes_no(separativity.left_separative));
  line("weakly_separative", yes_no(separativity.weakly_separative));
  line("putcha", yes_no(putcha));

  std::string vs;
  for (VarietyNode v : varieties) {
    if (!vs.empty()) {
      vs += ' ';
    }
    vs += variety_name(v);
  }
  line("varieties", vs.empty() ? "none" : vs);
  line("subdirectly_irreducible",
       subdirectly_irreducible ? yes_no(*subdirectly_irreducible)
                               : "skipped (order exceeds bound)");
  out += "theorem_audit:\n";
  out += audit.to_text();
  return out;
}

}  // namespace lls
