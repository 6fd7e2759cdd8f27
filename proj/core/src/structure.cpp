#include "lls/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lls/constructions.hpp"
#include "lls/error.hpp"
#include "lls/identity.hpp"

namespace lls {

namespace {

//! First pair with (ab)a != ab, if any.
std::optional<std::pair<int, int>> left_legal_witness(const CayleyTable& t) {
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      int ab = t.product(a, b);
      if (t.product(ab, a) != ab) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

void require_left_legal(const CayleyTable& t, const char* who) {
  if (auto w = left_legal_witness(t)) {
    throw PreconditionError(std::string(who) +
                            " requires a left legal table, but (" +
                            t.name(w->first) + "*" + t.name(w->second) + ")*" +
                            t.name(w->first) + " != " + t.name(w->first) +
                            "*" + t.name(w->second));
  }
}

//! Partition from a reflexive symmetric matrix; rejects intransitivity.
Partition partition_from_matrix(const std::vector<std::vector<bool>>& rel) {
  int n = static_cast<int>(rel.size());
  std::vector<int> leader(n);
  for (int i = 0; i < n; ++i) {
    int l = i;
    for (int j = 0; j < i; ++j) {
      if (rel[i][j]) {
        l = std::min(l, j);
      }
    }
    leader[i] = (l == i) ? i : leader[l];
  }
  Partition p{std::vector<int>(leader)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rel[i][j] != p.same_block(i, j)) {
        throw std::logic_error("relation is not an equivalence");
      }
    }
  }
  return p;
}

EquivalenceReport make_report(const CayleyTable& t, Partition p) {
  EquivalenceReport report{std::move(p), false, std::nullopt, std::nullopt};
  report.witness = congruence_violation(t, report.relation);
  report.is_congruence = !report.witness.has_value();
  if (report.is_congruence) {
    CayleyTable q = quotient_table(t, report.relation);
    BasicPredicates bp = basic_predicates(q);
    report.quotient_is_semilattice = bp.is_semilattice;
  }
  return report;
}

//! powers[k] = a^k for k in 1..kmax (powers[0] unused).
std::vector<int> powers_of(const CayleyTable& t, int a, int kmax) {
  std::vector<int> pw(kmax + 1);
  pw[1] = a;
  for (int k = 2; k <= kmax; ++k) {
    pw[k] = t.product(pw[k - 1], a);
  }
  return pw;
}

}  // namespace

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass:
      return "pass";
    case ClauseStatus::vacuous_pass:
      return "vacuous-pass";
    case ClauseStatus::fail:
      return "fail";
  }
  return "?";
}

EquivalenceReport tau_relation(const CayleyTable& t, bool dual) {
  int n = t.order();
  int bound = n + 1;
  std::vector<std::vector<int>> pw(n);
  for (int a = 0; a < n; ++a) {
    pw[a] = powers_of(t, a, bound + 1);
  }
  auto related = [&](int a, int b) {
    for (int k = 1; k <= bound; ++k) {
      bool ok = dual ? t.product(b, pw[a][k]) == pw[a][k + 1] &&
                           t.product(a, pw[b][k]) == pw[b][k + 1]
                     : t.product(pw[a][k], b) == pw[a][k + 1] &&
                           t.product(pw[b][k], a) == pw[b][k + 1];
      if (ok) {
        return true;
      }
    }
    return false;
  };
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      rel[a][b] = rel[b][a] = related(a, b);
    }
  }
  return make_report(t, partition_from_matrix(rel));
}

EquivalenceReport eta_relation(const CayleyTable& t) {
  require_left_legal(t, "eta_relation");
  int n = t.order();
  int bound = n + 1;

  // sbs[b] = the set S b S
  std::vector<std::vector<bool>> sbs(n, std::vector<bool>(n, false));
  for (int b = 0; b < n; ++b) {
    for (int s = 0; s < n; ++s) {
      int sb = t.product(s, b);
      for (int u = 0; u < n; ++u) {
        sbs[b][t.product(sb, u)] = true;
      }
    }
  }

  std::vector<std::vector<int>> pw(n);
  for (int a = 0; a < n; ++a) {
    pw[a] = powers_of(t, a, bound);
  }
  // a^n in SbS is monotone in n, so one reachability flag per pair suffices
  auto power_reaches = [&](int a, int b) {
    for (int k = 1; k <= bound; ++k) {
      if (sbs[b][pw[a][k]]) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      rel[a][b] = rel[b][a] = power_reaches(a, b) && power_reaches(b, a);
    }
  }
  return make_report(t, partition_from_matrix(rel));
}

Partition semilattice_components(const CayleyTable& t) {
  require_left_legal(t, "semilattice_components");
  SquareIdeal sq = square_ideal(t);
  for (int e : sq.elements) {
    if (t.product(e, e) != e) {
      throw std::logic_error("S^2 of a left legal table must be a band");
    }
  }

  // left-zero classes of the band S^2: e ~ f iff ef = e and fe = f
  int k = static_cast<int>(sq.elements.size());
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int e = sq.elements[i], f = sq.elements[j];
      rel[i][j] = t.product(e, f) == e && t.product(f, e) == f;
    }
  }
  Partition classes = partition_from_matrix(rel);

  // lift through a -> a^2
  std::vector<int> pos(t.order(), -1);
  for (int i = 0; i < k; ++i) {
    pos[sq.elements[i]] = i;
  }
  std::vector<std::vector<int>> blocks(k);
  for (int a = 0; a < t.order(); ++a) {
    blocks[classes.leader(pos[t.product(a, a)])].push_back(a);
  }
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const auto& b) { return b.empty(); }),
               blocks.end());
  return Partition::from_blocks(t.order(), blocks);
}

RetractVerdict square_retract_check(const CayleyTable& t) {
  int n = t.order();
  SquareIdeal sq = square_ideal(t);

  RetractVerdict v{};
  v.is_homomorphism = true;
  for (int a = 0; a < n && v.is_homomorphism; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = t.product(a, b);
      if (t.product(ab, ab) !=
          t.product(t.product(a, a), t.product(b, b))) {
        v.is_homomorphism = false;
        break;
      }
    }
  }

  v.fixes_ideal = true;
  for (int e : sq.elements) {
    if (t.product(e, e) != e) {
      v.fixes_ideal = false;
      break;
    }
  }

  std::vector<bool> image(n, false);
  for (int a = 0; a < n; ++a) {
    image[t.product(a, a)] = true;
  }
  bool onto = std::all_of(sq.elements.begin(), sq.elements.end(),
                          [&](int e) { return image[e]; });

  v.is_retract = v.is_homomorphism && v.fixes_ideal && onto;
  return v;
}

bool is_putcha(const CayleyTable& t) {
  CayleyTable s1 = adjoin_identity(t);
  int n = t.order();
  int m = s1.order();
  int bound = m + 1;

  // membership sets computed in S^1; original elements keep their indices
  auto sandwich = [&](int b) {
    std::vector<bool> in(m, false);
    for (int u = 0; u < m; ++u) {
      int ub = s1.product(u, b);
      for (int v = 0; v < m; ++v) {
        in[s1.product(ub, v)] = true;
      }
    }
    return in;
  };

  for (int b = 0; b < n; ++b) {
    std::vector<bool> around_b = sandwich(b);
    std::vector<bool> around_b2 = sandwich(t.product(b, b));
    for (int a = 0; a < n; ++a) {
      if (!around_b[a]) {
        continue;
      }
      bool reached = false;
      int p = a;
      for (int k = 1; k <= bound && !reached; ++k) {
        reached = around_b2[p];
        p = t.product(p, a);
      }
      if (!reached) {
        return false;
      }
    }
  }
  return true;
}

SeparativityFlags separativity(const CayleyTable& t) {
  SeparativityFlags f{true, true, true};
  for (int a = 0; a < t.order(); ++a) {
    int aa = t.product(a, a);
    for (int b = 0; b < t.order(); ++b) {
      if (a == b) {
        continue;
      }
      int bb = t.product(b, b);
      int ab = t.product(a, b);
      int ba = t.product(b, a);
      if (ab == bb && ba == aa) {
        f.right_separative = false;
      }
      if (ab == aa && ba == bb) {
        f.left_separative = false;
      }
      if (aa == ab && ab == bb) {
        f.weakly_separative = false;
      }
    }
  }
  return f;
}

bool AuditReport::all_ok() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const AuditClause& c) {
    return c.status == ClauseStatus::fail;
  });
}

std::string AuditReport::to_text() const {
  std::string out;
  for (const auto& c : clauses) {
    out += c.id;
    out += ' ';
    out += c.name;
    out += ": ";
    out += to_string(c.status);
    if (!c.note.empty()) {
      out += ' ';
      out += c.note;
    }
    out += '\n';
  }
  return out;
}

AuditReport theorem_audit(const CayleyTable& t) {
  const BasicPredicates p = basic_predicates(t);
  const bool sat_ab_aab = satisfies_identity(t, Identity("ab", "aab"));
  const bool sat_ab_ac = satisfies_identity(t, Identity("ab", "ac"));
  const bool sat_aab_aa = satisfies_identity(t, Identity("aab", "aa"));
  const SquareIdeal sq = square_ideal(t);
  const BasicPredicates sqp = basic_predicates(sq.sub);
  const RetractVerdict retract = square_retract_check(t);
  const SeparativityFlags sep = separativity(t);

  AuditReport report;

  auto biconditional = [&](char id, std::string name, bool lhs, bool rhs) {
    AuditClause c{id, std::move(name), ClauseStatus::pass, ""};
    if (lhs != rhs) {
      c.status = ClauseStatus::fail;
      c.note = std::string("[lhs=") + (lhs ? "true" : "false") +
               " rhs=" + (rhs ? "true" : "false") + "]";
    } else {
      c.note = lhs ? "(positive)" : "(negative)";
    }
    report.clauses.push_back(std::move(c));
  };

  auto implication = [&](char id, std::string name, bool antecedent,
                         auto&& consequent) {
    AuditClause c{id, std::move(name), ClauseStatus::pass, ""};
    if (!antecedent) {
      c.status = ClauseStatus::vacuous_pass;
    } else if (!consequent()) {
      c.status = ClauseStatus::fail;
    }
    report.clauses.push_back(std::move(c));
  };

  biconditional('a', "retract-lrb-equivalence", p.is_left_legal && sat_ab_aab,
                retract.is_retract && sqp.is_left_regular_band);
  biconditional('b', "retract-leftzero-equivalence", sat_ab_ac,
                retract.is_retract && sqp.is_left_zero);
  implication('c', "indecomposable-equivalence", p.is_left_legal, [&] {
    bool eta_universal = eta_relation(t).relation.block_count() == 1;
    return eta_universal == sat_aab_aa && sat_aab_aa == sqp.is_left_zero;
  });
  implication('d', "tau-equals-eta", p.is_left_legal, [&] {
    return tau_relation(t).relation == eta_relation(t).relation;
  });
  implication('e', "right-iff-weak-separative", p.is_left_legal, [&] {
    return sep.right_separative == sep.weakly_separative;
  });
  implication('f', "left-separative-commutative",
              p.is_left_legal && sep.left_separative,
              [&] { return p.is_commutative; });
  implication('g', "putcha", p.is_left_legal, [&] { return is_putcha(t); });
  implication('h', "square-band-lemmas", p.is_left_legal, [&] {
    for (int e : sq.elements) {
      if (t.product(e, e) != e) {
        return false;
      }
    }
    for (int a = 0; a < t.order(); ++a) {
      if (t.power(a, 3) != t.power(a, 2)) {
        return false;
      }
      for (int b = 0; b < t.order(); ++b) {
        if (t.product(a, t.product(b, b)) != t.product(a, b)) {
          return false;
        }
      }
    }
    return true;
  });

  return report;
}

}  // namespace lls
