#include "lls/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lls {

Partition::Partition(std::vector<int> leader_of)
    : leader_of_(std::move(leader_of)) {
  int n = size();
  for (int i = 0; i < n; ++i) {
    int l = leader_of_[i];
    if (l < 0 || l > i || leader_of_[l] != l) {
      throw std::invalid_argument(
          "leaders must be the least elements of their blocks");
    }
  }
}

Partition Partition::singletons(int n) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) {
    l[i] = i;
  }
  return Partition(std::move(l));
}

Partition Partition::universal(int n) {
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<int> l(n, -1);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("blocks must be nonempty");
    }
    int leader = *std::min_element(block.begin(), block.end());
    for (int i : block) {
      if (i < 0 || i >= n || l[i] != -1) {
        throw std::invalid_argument("blocks must partition 0..n-1");
      }
      l[i] = leader;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (l[i] == -1) {
      throw std::invalid_argument("blocks must cover 0..n-1");
    }
  }
  return Partition(std::move(l));
}

int Partition::block_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    if (leader_of_[i] == i) {
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::map<int, std::vector<int>> by_leader;
  for (int i = 0; i < size(); ++i) {
    by_leader[leader_of_[i]].push_back(i);
  }
  std::vector<std::vector<int>> out;
  out.reserve(by_leader.size());
  for (auto& [leader, members] : by_leader) {
    out.push_back(std::move(members));
  }
  return out;
}

bool Partition::refines(const Partition& other) const {
  for (int i = 0; i < size(); ++i) {
    if (other.leader_of_[i] != other.leader_of_[leader_of_[i]]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(const Partition& a, const Partition& b) {
  int n = a.size();
  std::map<std::pair<int, int>, int> leader_of_pair;
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(a.leader_of_[i], b.leader_of_[i]);
    l[i] = leader_of_pair.emplace(key, i).first->second;
  }
  return Partition(std::move(l));
}

Partition Partition::join(const Partition& a, const Partition& b) {
  int n = a.size();
  // union-find over the union of both relations
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
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
    }
  };
  for (int i = 0; i < n; ++i) {
    unite(i, a.leader_of_[i]);
    unite(i, b.leader_of_[i]);
  }
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) {
    l[i] = find(i);
  }
  return Partition(std::move(l));
}

std::string Partition::str(const std::vector<std::string>& names) const {
  std::string out;
  for (const auto& block : blocks()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += names[block[i]];
    }
    out += '}';
  }
  return out;
}

}  // namespace lls
