#include "lls/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "lls/congruences.hpp"
#include "lls/error.hpp"

namespace lls {

CayleyTable subtable(const CayleyTable& t, const std::vector<int>& subset) {
  std::vector<int> to_new(t.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    to_new[subset[i]] = static_cast<int>(i);
  }
  std::vector<int> flat;
  flat.reserve(subset.size() * subset.size());
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (int a : subset) {
    names.push_back(t.name(a));
    for (int b : subset) {
      int p = t.product(a, b);
      if (to_new[p] < 0) {
        throw PreconditionError("subset is not closed: " + t.name(a) + "*" +
                                t.name(b) + " = " + t.name(p) +
                                " lies outside it");
      }
      flat.push_back(to_new[p]);
    }
  }
  return CayleyTable(std::move(names), std::move(flat));
}

SquareIdeal square_ideal(const CayleyTable& t) {
  std::vector<bool> in_square(t.order(), false);
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      in_square[t.product(a, b)] = true;
    }
  }
  std::vector<int> elements;
  for (int i = 0; i < t.order(); ++i) {
    if (in_square[i]) {
      elements.push_back(i);
    }
  }
  CayleyTable sub = subtable(t, elements);
  return SquareIdeal{std::move(elements), std::move(sub)};
}

CayleyTable rees_quotient(const CayleyTable& t, const std::vector<int>& ideal) {
  int n = t.order();
  std::vector<bool> in_ideal(n, false);
  for (int a : ideal) {
    if (a < 0 || a >= n) {
      throw std::invalid_argument("ideal element index out of range");
    }
    in_ideal[a] = true;
  }
  if (ideal.empty()) {
    throw PreconditionError("an ideal must be nonempty");
  }
  for (int a = 0; a < n; ++a) {
    if (!in_ideal[a]) {
      continue;
    }
    for (int s = 0; s < n; ++s) {
      if (!in_ideal[t.product(s, a)]) {
        throw PreconditionError("not an ideal: " + t.name(s) + "*" +
                                t.name(a) + " = " +
                                t.name(t.product(s, a)) + " escapes");
      }
      if (!in_ideal[t.product(a, s)]) {
        throw PreconditionError("not an ideal: " + t.name(a) + "*" +
                                t.name(s) + " = " +
                                t.name(t.product(a, s)) + " escapes");
      }
    }
  }

  // survivors keep their order and names; the collapsed ideal becomes a
  // final element named "0"
  std::vector<int> to_new(n, -1);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    if (!in_ideal[a]) {
      if (t.name(a) == "0") {
        throw std::invalid_argument(
            "an element outside the ideal is already named \"0\"");
      }
      to_new[a] = static_cast<int>(names.size());
      names.push_back(t.name(a));
    }
  }
  int zero = static_cast<int>(names.size());
  names.push_back("0");
  int m = zero + 1;

  auto image = [&](int a) { return in_ideal[a] ? zero : to_new[a]; };
  std::vector<int> flat(static_cast<std::size_t>(m) * m, zero);
  for (int a = 0; a < n; ++a) {
    if (in_ideal[a]) {
      continue;
    }
    for (int b = 0; b < n; ++b) {
      if (!in_ideal[b]) {
        flat[static_cast<std::size_t>(image(a)) * m + image(b)] =
            image(t.product(a, b));
      }
    }
  }
  // products involving the zero class are zero already (ideal absorbs)
  return CayleyTable(std::move(names), std::move(flat));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
    }
  }
  int m = na * nb;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      int x = i * nb + j;
      for (int k = 0; k < na; ++k) {
        for (int l = 0; l < nb; ++l) {
          int y = k * nb + l;
          flat[static_cast<std::size_t>(x) * m + y] =
              a.product(i, k) * nb + b.product(j, l);
        }
      }
    }
  }
  return CayleyTable(std::move(names), std::move(flat));
}

std::optional<int> identity_element(const CayleyTable& t) {
  for (int e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (int a = 0; a < t.order() && ok; ++a) {
      ok = t.product(e, a) == a && t.product(a, e) == a;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

CayleyTable adjoin_identity(const CayleyTable& t) {
  if (identity_element(t)) {
    return t;
  }
  int n = t.order();
  std::vector<std::string> names = t.names();
  if (t.index_of("1") >= 0) {
    throw std::invalid_argument(
        "cannot adjoin an identity: an element is already named \"1\"");
  }
  names.push_back("1");
  int m = n + 1;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int p = 0;
      if (a == n) {
        p = b;
      } else if (b == n) {
        p = a;
      } else {
        p = t.product(a, b);
      }
      flat[static_cast<std::size_t>(a) * m + b] = p;
    }
  }
  return CayleyTable(std::move(names), std::move(flat));
}

CayleyTable quotient_table(const CayleyTable& t, const Partition& p) {
  if (auto w = congruence_violation(t, p)) {
    throw PreconditionError(
        "partition is not a congruence: " + t.name(w->a) + " ~ " +
        t.name(w->b) + " but multiplying by " + t.name(w->c) + " on the " +
        (w->left ? "left" : "right") + " separates them");
  }
  std::vector<int> leaders;
  std::vector<int> to_block(t.order(), -1);
  for (int i = 0; i < t.order(); ++i) {
    if (p.leader(i) == i) {
      to_block[i] = static_cast<int>(leaders.size());
      leaders.push_back(i);
    }
  }
  int m = static_cast<int>(leaders.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (int l : leaders) {
    names.push_back(t.name(l));
  }
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      flat[static_cast<std::size_t>(i) * m + j] =
          to_block[p.leader(t.product(leaders[i], leaders[j]))];
    }
  }
  return CayleyTable(std::move(names), std::move(flat));
}

}  // namespace lls
