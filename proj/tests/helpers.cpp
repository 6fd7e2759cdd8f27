#include "helpers.hpp"

#include <algorithm>

namespace testkit {

namespace {

lls::CayleyTable from_rule(int n, int (*rule)(int, int, int)) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<std::size_t>(a) * n + b] = rule(a, b, n);
    }
  }
  return lls::CayleyTable(lls::CayleyTable::default_names(n), std::move(flat));
}

}  // namespace

lls::CayleyTable left_zero(int n) {
  return from_rule(n, [](int a, int, int) { return a; });
}

lls::CayleyTable right_zero(int n) {
  return from_rule(n, [](int, int b, int) { return b; });
}

lls::CayleyTable zero_semigroup(int n) {
  return from_rule(n, [](int, int, int) { return 0; });
}

lls::CayleyTable chain_semilattice(int n) {
  return from_rule(n, [](int a, int b, int) { return std::min(a, b); });
}

lls::CayleyTable cyclic_group(int n) {
  return from_rule(n, [](int a, int b, int m) { return (a + b) % m; });
}

lls::CayleyTable brandt_b2() {
  // elements e11 e12 e21 e22 0; e_ij e_kl = e_il when j = k, else 0
  return lls::CayleyTable({"e11", "e12", "e21", "e22", "0"},
                          {{0, 1, 4, 4, 4},
                           {4, 4, 0, 1, 4},
                           {2, 3, 4, 4, 4},
                           {4, 4, 2, 3, 4},
                           {4, 4, 4, 4, 4}});
}

lls::CayleyTable load_fixture(const std::string& stem) {
  return lls::CayleyTable::load(std::string(LLS_TABLES_DIR) + "/" + stem +
                                ".cay");
}

lls::Partition blocks_by_names(
    const lls::CayleyTable& t,
    const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::vector<int>> index_blocks;
  for (const auto& block : blocks) {
    std::vector<int> ib;
    for (const auto& name : block) {
      int i = t.index_of(name);
      if (i < 0) {
        throw std::invalid_argument("no element named \"" + name + "\"");
      }
      ib.push_back(i);
    }
    index_blocks.push_back(std::move(ib));
  }
  return lls::Partition::from_blocks(t.order(), index_blocks);
}

std::vector<lls::Word> all_words(const std::vector<lls::Letter>& alphabet,
                                 int max_len) {
  std::vector<lls::Word> out;
  std::vector<std::vector<lls::Letter>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<lls::Letter>> next;
    for (const auto& prefix : layer) {
      for (const auto& l : alphabet) {
        auto word = prefix;
        word.push_back(l);
        out.emplace_back(word);
        next.push_back(std::move(word));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace testkit
