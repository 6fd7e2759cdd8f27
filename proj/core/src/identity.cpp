#include "lls/identity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lls/error.hpp"

namespace lls {

namespace {

void check_side(const std::string& side) {
  if (side.empty()) {
    throw std::invalid_argument("identity sides must be nonempty");
  }
  for (char c : side) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(
          std::string("identity variables must be a..z, got '") + c + "'");
    }
  }
}

}  // namespace

Identity::Identity(std::string lhs, std::string rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  check_side(lhs_);
  check_side(rhs_);
  std::string vars = lhs_ + rhs_;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  vars_ = std::move(vars);
}

Identity Identity::parse(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("an identity must look like \"aba=ab\"");
  }
  return Identity(std::string(text.substr(0, eq)),
                  std::string(text.substr(eq + 1)));
}

bool satisfies_identity(const CayleyTable& t, const Identity& id) {
  const int n = t.order();
  const int k = static_cast<int>(id.variables().size());
  if (k > 4 && n > 32) {
    throw SizeError("refusing an identity in " + std::to_string(k) +
                    " variables on a table of order " + std::to_string(n));
  }
  double total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
  }
  if (total > 134217728.0) {  // 2^27 assignments
    throw SizeError("identity check would need too many assignments");
  }

  std::array<int, 26> var_pos{};
  for (int i = 0; i < k; ++i) {
    var_pos[id.variables()[i] - 'a'] = i;
  }
  std::vector<int> assign(k, 0);
  auto eval_side = [&](const std::string& side) {
    int acc = assign[var_pos[side[0] - 'a']];
    for (std::size_t i = 1; i < side.size(); ++i) {
      acc = t.product(acc, assign[var_pos[side[i] - 'a']]);
    }
    return acc;
  };

  while (true) {
    if (eval_side(id.lhs()) != eval_side(id.rhs())) {
      return false;
    }
    int i = 0;
    while (i < k && ++assign[i] == n) {
      assign[i++] = 0;
    }
    if (i == k) {
      return true;
    }
  }
}

bool is_zero_semigroup(const CayleyTable& t) {
  int z = t.product(0, 0);
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (t.product(a, b) != z) {
        return false;
      }
    }
  }
  return true;
}

BasicPredicates basic_predicates(const CayleyTable& t) {
  static const Identity band("aa", "a");
  static const Identity left_zero("ab", "a");
  static const Identity commutative("ab", "ba");
  static const Identity left_legal("aba", "ab");
  static const Identity left_normal("abc", "acb");

  BasicPredicates p{};
  p.is_band = satisfies_identity(t, band);
  p.is_left_zero = satisfies_identity(t, left_zero);
  p.is_zero_semigroup = is_zero_semigroup(t);
  p.is_commutative = satisfies_identity(t, commutative);
  p.is_left_legal = satisfies_identity(t, left_legal);
  p.is_semilattice = p.is_band && p.is_commutative;
  p.is_left_regular_band = p.is_band && p.is_left_legal;
  p.is_left_normal_band = p.is_band && satisfies_identity(t, left_normal);
  return p;
}

}  // namespace lls
