#ifndef LLS_PARTITION_HPP_
#define LLS_PARTITION_HPP_

#include <string>
#include <vector>

namespace lls {

//! A partition of {0, ..., n-1}, stored as the map element -> least element
//! of its block. That vector is the canonical encoding used for ordering.
class Partition {
 public:
  Partition() = default;  // empty partition of the empty set

  //! leader_of[i] must be the least element of i's block.
  explicit Partition(std::vector<int> leader_of);

  static Partition singletons(int n);
  static Partition universal(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const noexcept {
    return static_cast<int>(leader_of_.size());
  }

  int leader(int i) const {
    return leader_of_[i];
  }

  bool same_block(int a, int b) const {
    return leader_of_[a] == leader_of_[b];
  }

  int block_count() const;

  //! Blocks sorted by leader; elements ascending within a block.
  std::vector<std::vector<int>> blocks() const;

  //! true when every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  //! Coarsest common refinement.
  static Partition meet(const Partition& a, const Partition& b);

  //! Finest common coarsening.
  static Partition join(const Partition& a, const Partition& b);

  const std::vector<int>& encoding() const noexcept {
    return leader_of_;
  }

  //! "{x e f} {g h}" with the given element names.
  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> leader_of_;
};

}  // namespace lls

#endif  // LLS_PARTITION_HPP_
