#include "lls/varieties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lls/error.hpp"

namespace lls {

namespace {

struct NamedIdentities {
  VarietyNode node;
  std::vector<Identity> identities;
};

const std::vector<NamedIdentities>& defining_identities() {
  static const std::vector<NamedIdentities> defs = {
      {VarietyNode::LZ, {Identity("ab", "a")}},
      {VarietyNode::SL, {Identity("aa", "a"), Identity("ab", "ba")}},
      {VarietyNode::LNB, {Identity("aa", "a"), Identity("abc", "acb")}},
      {VarietyNode::LRB, {Identity("aa", "a"), Identity("aba", "ab")}},
      {VarietyNode::B, {Identity("ab", "ac")}},
      {VarietyNode::D, {Identity("ab", "ba"), Identity("ab", "aab")}},
      {VarietyNode::C, {Identity("abc", "acb"), Identity("ab", "aab")}},
      {VarietyNode::A, {Identity("aba", "ab"), Identity("ab", "aab")}},
      {VarietyNode::LLS, {Identity("aba", "ab")}},
  };
  return defs;
}

}  // namespace

std::string_view variety_name(VarietyNode v) {
  switch (v) {
    case VarietyNode::T:
      return "T";
    case VarietyNode::ZM:
      return "ZM";
    case VarietyNode::LZ:
      return "LZ";
    case VarietyNode::SL:
      return "SL";
    case VarietyNode::LNB:
      return "LNB";
    case VarietyNode::LRB:
      return "LRB";
    case VarietyNode::B:
      return "B";
    case VarietyNode::D:
      return "D";
    case VarietyNode::C:
      return "C";
    case VarietyNode::A:
      return "A";
    case VarietyNode::LLS:
      return "LLS";
  }
  return "?";
}

std::optional<VarietyNode> variety_from_name(std::string_view name) {
  for (VarietyNode v : all_variety_nodes) {
    if (variety_name(v) == name) {
      return v;
    }
  }
  return std::nullopt;
}

const std::vector<std::pair<VarietyNode, VarietyNode>>& variety_edges() {
  using V = VarietyNode;
  static const std::vector<std::pair<V, V>> edges = {
      {V::T, V::LZ},   {V::T, V::ZM},   {V::T, V::SL},   {V::LZ, V::B},
      {V::LZ, V::LNB}, {V::ZM, V::B},   {V::ZM, V::D},   {V::SL, V::LNB},
      {V::SL, V::D},   {V::B, V::C},    {V::D, V::C},    {V::LNB, V::C},
      {V::LNB, V::LRB}, {V::C, V::A},   {V::LRB, V::A},  {V::A, V::LLS},
  };
  return edges;
}

bool in_variety(const CayleyTable& t, VarietyNode v) {
  if (v == VarietyNode::T) {
    return t.order() == 1;
  }
  if (v == VarietyNode::ZM) {
    return is_zero_semigroup(t);
  }
  for (const auto& def : defining_identities()) {
    if (def.node == v) {
      return std::all_of(
          def.identities.begin(), def.identities.end(),
          [&](const Identity& id) { return satisfies_identity(t, id); });
    }
  }
  throw std::logic_error("variety without defining identities");
}

std::vector<VarietyNode> variety_membership(const CayleyTable& t) {
  bool in[11];
  std::vector<VarietyNode> out;
  for (VarietyNode v : all_variety_nodes) {
    in[static_cast<int>(v)] = in_variety(t, v);
    if (in[static_cast<int>(v)]) {
      out.push_back(v);
    }
  }
  for (const auto& [lower, upper] : variety_edges()) {
    if (in[static_cast<int>(lower)] && !in[static_cast<int>(upper)]) {
      throw std::logic_error("variety memberships are not upward closed");
    }
  }
  return out;
}

namespace {

struct ElementSignature {
  bool idempotent;
  int power_index;  // first k with a^k = a^j for some j > k... see below
  int power_period;
  int occurrences;   // cells holding this value
  int row_distinct;  // |{ a x : x }|
  int col_distinct;  // |{ x a : x }|

  friend bool operator==(const ElementSignature&,
                         const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&,
                          const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const CayleyTable& t) {
  int n = t.order();
  std::vector<ElementSignature> sig(n);
  std::vector<int> occur(n, 0);
  for (int v : t.flat()) {
    ++occur[v];
  }
  for (int a = 0; a < n; ++a) {
    // walk a, a^2, ... until the first repeat: a^index starts the cycle
    std::vector<int> seen_at(n, -1);
    int p = a, step = 1;
    while (seen_at[p] < 0) {
      seen_at[p] = step;
      p = t.product(p, a);
      ++step;
    }
    sig[a].power_index = seen_at[p];
    sig[a].power_period = step - seen_at[p];
    sig[a].idempotent = t.product(a, a) == a;
    sig[a].occurrences = occur[a];
    std::vector<bool> row(n, false), col(n, false);
    for (int x = 0; x < n; ++x) {
      row[t.product(a, x)] = true;
      col[t.product(x, a)] = true;
    }
    sig[a].row_distinct = static_cast<int>(std::count(row.begin(), row.end(), true));
    sig[a].col_distinct = static_cast<int>(std::count(col.begin(), col.end(), true));
  }
  return sig;
}

bool extend_isomorphism(const CayleyTable& t1, const CayleyTable& t2,
                        const std::vector<ElementSignature>& s1,
                        const std::vector<ElementSignature>& s2,
                        std::vector<int>& m, std::vector<bool>& used, int a) {
  int n = t1.order();
  if (a == n) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (m[t1.product(x, y)] != t2.product(m[x], m[y])) {
          return false;
        }
      }
    }
    return true;
  }
  for (int b = 0; b < n; ++b) {
    if (used[b] || s1[a] != s2[b]) {
      continue;
    }
    m[a] = b;
    used[b] = true;
    // products among already-mapped elements must agree when their image
    // is already decided
    bool ok = true;
    for (int x = 0; x <= a && ok; ++x) {
      int p = t1.product(x, a), q = t1.product(a, x);
      if (m[p] >= 0 && m[p] != t2.product(m[x], b)) {
        ok = false;
      }
      if (m[q] >= 0 && m[q] != t2.product(b, m[x])) {
        ok = false;
      }
    }
    if (ok && extend_isomorphism(t1, t2, s1, s2, m, used, a + 1)) {
      return true;
    }
    m[a] = -1;
    used[b] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const CayleyTable& t1,
                                               const CayleyTable& t2) {
  if (t1.order() != t2.order()) {
    return std::nullopt;
  }
  std::vector<ElementSignature> s1 = signatures(t1), s2 = signatures(t2);
  std::vector<ElementSignature> m1 = s1, m2 = s2;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  if (m1 != m2) {
    return std::nullopt;
  }
  std::vector<int> m(t1.order(), -1);
  std::vector<bool> used(t1.order(), false);
  if (extend_isomorphism(t1, t2, s1, s2, m, used, 0)) {
    return m;
  }
  return std::nullopt;
}

namespace {

class TableSearch {
 public:
  TableSearch(int n, const EnumerationOptions& options)
      : n_(n), options_(options), val_(n * n, -1) {
    if (options_.up_to_iso) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        perms_.push_back(perm);  // identity excluded
      }
    }
  }

  std::vector<CayleyTable> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  int at(int a, int b) const {
    return val_[a * n_ + b];
  }

  //! Associativity instances (x y) z = x (y z) whose last lookup may be the
  //! just-filled cell (a, b) = v; each check fires only once all four
  //! lookups are defined.
  bool associativity_ok(int a, int b, int v) const {
    // the pair (x, y) = (a, b): triples (a, b, z)
    for (int z = 0; z < n_; ++z) {
      int lhs = at(v, z), q = at(b, z);
      if (lhs >= 0 && q >= 0 && at(a, q) >= 0 && lhs != at(a, q)) {
        return false;
      }
    }
    // the pair (y, z) = (a, b): triples (x, a, b)
    for (int x = 0; x < n_; ++x) {
      int rhs = at(x, v), p = at(x, a);
      if (rhs >= 0 && p >= 0 && at(p, b) >= 0 && at(p, b) != rhs) {
        return false;
      }
    }
    // (a, b) = (xy, z) or (x, yz): scan for pairs producing a or b
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        int p = at(x, y);
        if (p == a) {  // triple (x, y, b): (xy)b = v must match x(yb)
          int q = at(y, b);
          if (q >= 0 && at(x, q) >= 0 && at(x, q) != v) {
            return false;
          }
        }
        if (p == b) {  // triple (a, x, y): a(xy) = v must match (ax)y
          int r = at(a, x);
          if (r >= 0 && at(r, y) >= 0 && at(r, y) != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! aba = ab instances involving the just-filled cell (a, b) = v.
  bool left_legal_ok(int a, int b, int v) const {
    // as the inner product: (ab)a = ab requires val(v, a) = v
    if (at(v, a) >= 0 && at(v, a) != v) {
      return false;
    }
    // as the outer product: v = val(b, ?) forces nothing unless some
    // pair (b, q) already multiplies to a, making (a, b) the outer cell
    // of the instance (b, q): then val(a, b) must equal a
    if (v != a) {
      for (int q = 0; q < n_; ++q) {
        if (at(b, q) == a) {
          return false;
        }
      }
    }
    return true;
  }

  bool keep_leaf() {
    CayleyTable t(CayleyTable::default_names(n_), val_);
    for (const Identity& id : options_.identities) {
      if (!satisfies_identity(t, id)) {
        return false;
      }
    }
    if (options_.up_to_iso) {
      std::vector<int> relabeled(n_ * n_);
      for (const auto& perm : perms_) {
        for (int x = 0; x < n_; ++x) {
          for (int y = 0; y < n_; ++y) {
            relabeled[perm[x] * n_ + perm[y]] = perm[val_[x * n_ + y]];
          }
        }
        if (relabeled < val_) {
          return false;  // a smaller relabeling exists
        }
      }
    }
    found_.push_back(std::move(t));
    return true;
  }

  void fill(int cell) {
    if (cell == n_ * n_) {
      keep_leaf();
      return;
    }
    int a = cell / n_, b = cell % n_;
    for (int v = 0; v < n_; ++v) {
      val_[cell] = v;
      if (associativity_ok(a, b, v) &&
          (!options_.left_legal || left_legal_ok(a, b, v))) {
        fill(cell + 1);
      }
    }
    val_[cell] = -1;
  }

  int n_;
  const EnumerationOptions& options_;
  std::vector<int> val_;
  std::vector<std::vector<int>> perms_;
  std::vector<CayleyTable> found_;
};

}  // namespace

std::vector<CayleyTable> enumerate_semigroups(int order,
                                              const EnumerationOptions& options) {
  if (order < 1) {
    throw std::invalid_argument("order must be positive");
  }
  int bound = options.left_legal ? 5 : 4;
  if (order > bound) {
    throw SizeError("enumeration bound is order " + std::to_string(bound) +
                    (options.left_legal ? " with" : " without") +
                    " the left legal filter");
  }
  return TableSearch(order, options).run();
}

std::string census_text(const std::vector<CayleyTable>& tables) {
  std::string out = "# count: " + std::to_string(tables.size()) + "\n";
  for (const auto& t : tables) {
    out += '\n';
    out += t.to_text();
  }
  return out;
}

}  // namespace lls
