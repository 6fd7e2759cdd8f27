#include "lls/congruences.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "lls/error.hpp"
#include "lls/identity.hpp"

namespace lls {

std::optional<CongruenceWitness> congruence_violation(const CayleyTable& t,
                                                      const Partition& p) {
  if (p.size() != t.order()) {
    throw std::invalid_argument("partition size does not match the table");
  }
  // checking each element against its block leader covers all related pairs
  for (int a = 0; a < t.order(); ++a) {
    int b = p.leader(a);
    if (a == b) {
      continue;
    }
    for (int c = 0; c < t.order(); ++c) {
      if (!p.same_block(t.product(a, c), t.product(b, c))) {
        return CongruenceWitness{a, b, c, false};
      }
      if (!p.same_block(t.product(c, a), t.product(c, b))) {
        return CongruenceWitness{a, b, c, true};
      }
    }
  }
  return std::nullopt;
}

Congruence::Congruence(const CayleyTable& t, Partition p)
    : partition_(std::move(p)) {
  if (auto w = congruence_violation(t, partition_)) {
    throw PreconditionError(
        "not a congruence: " + t.name(w->a) + " ~ " + t.name(w->b) +
        " but multiplication by " + t.name(w->c) + " on the " +
        (w->left ? "left" : "right") + " separates the products");
  }
}

Partition principal_congruence(const CayleyTable& t, int a, int b) {
  int n = t.order();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) {
    parent[i] = i;
  }
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::deque<std::pair<int, int>> work;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
      work.emplace_back(x, y);
    }
  };

  unite(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (int c = 0; c < n; ++c) {
      unite(t.product(x, c), t.product(y, c));
      unite(t.product(c, x), t.product(c, y));
    }
  }

  std::vector<int> leader(n);
  for (int i = 0; i < n; ++i) {
    leader[i] = find(i);
  }
  return Partition(std::move(leader));
}

std::vector<Congruence> enumerate_congruences(const CayleyTable& t,
                                              int max_order) {
  int n = t.order();
  if (n > max_order) {
    throw SizeError("congruence enumeration is bounded at order " +
                    std::to_string(max_order) + ", table has order " +
                    std::to_string(n));
  }

  std::vector<Partition> principals;
  std::set<std::vector<int>> seen;
  std::vector<Partition> found;
  auto add = [&](const Partition& p) {
    if (seen.insert(p.encoding()).second) {
      found.push_back(p);
      return true;
    }
    return false;
  };

  add(Partition::singletons(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Partition p = principal_congruence(t, a, b);
      principals.push_back(p);
      add(p);
    }
  }

  // every congruence is a join of principal ones, so closing under joins
  // with principals reaches all of them
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : principals) {
      add(Partition::join(found[i], p));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Partition& a, const Partition& b) {
              if (a.block_count() != b.block_count()) {
                return a.block_count() > b.block_count();
              }
              return a.encoding() < b.encoding();
            });

  std::vector<Congruence> out;
  out.reserve(found.size());
  for (auto& p : found) {
    out.emplace_back(t, std::move(p));
  }
  return out;
}

bool is_subdirectly_irreducible(const CayleyTable& t, int max_order) {
  if (t.order() == 1) {
    return false;
  }
  Partition iota = Partition::singletons(t.order());
  std::optional<Partition> monolith;
  for (const auto& c : enumerate_congruences(t, max_order)) {
    if (c.partition() == iota) {
      continue;
    }
    monolith = monolith ? Partition::meet(*monolith, c.partition())
                        : c.partition();
  }
  return monolith != iota;
}

Congruence least_semilattice_congruence(const CayleyTable& t, int max_order) {
  int n = t.order();
  // a congruence has a semilattice quotient iff ab ~ ba and aa ~ a for all
  // a, b; no need to build the quotient
  auto is_semilattice_congruence = [&](const Partition& p) {
    for (int a = 0; a < n; ++a) {
      if (!p.same_block(t.product(a, a), a)) {
        return false;
      }
      for (int b = a + 1; b < n; ++b) {
        if (!p.same_block(t.product(a, b), t.product(b, a))) {
          return false;
        }
      }
    }
    return true;
  };

  std::optional<Partition> least;
  for (const auto& c : enumerate_congruences(t, max_order)) {
    if (is_semilattice_congruence(c.partition())) {
      least = least ? Partition::meet(*least, c.partition()) : c.partition();
    }
  }
  if (!least) {
    // the universal congruence always qualifies
    throw std::logic_error("no semilattice congruence found");
  }
  if (!is_semilattice_congruence(*least) ||
      congruence_violation(t, *least)) {
    throw std::logic_error(
        "the intersection of the semilattice congruences is not one");
  }
  return Congruence(t, std::move(*least));
}

}  // namespace lls
