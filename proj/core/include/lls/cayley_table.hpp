#ifndef LLS_CAYLEY_TABLE_HPP_
#define LLS_CAYLEY_TABLE_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lls {

//! A finite magma given by its multiplication table. Order n >= 1, elements
//! are indices 0..n-1 with distinct whitespace-free names. Associativity is
//! not an invariant; it is a precondition of the analysis functions and can
//! be checked with associativity_witness().
class CayleyTable {
 public:
  CayleyTable(std::vector<std::string> names, std::vector<int> flat);
  CayleyTable(std::vector<std::string> names,
              const std::vector<std::vector<int>>& rows);

  //! "a", "b", ... for n <= 26, else "x0", "x1", ...
  static std::vector<std::string> default_names(int n);

  //! Reads one table in the text format:
  //!   elements: x e f g h      (optional)
  //!   5
  //!   1 1 1 3 4
  //!   ...
  //! Blank lines and lines starting with '#' are skipped. Throws ParseError
  //! with a line number on malformed input.
  static CayleyTable parse(std::istream& in);

  //! parse() on the file's contents; rejects trailing content.
  static CayleyTable load(const std::string& path);

  int order() const noexcept {
    return order_;
  }

  int product(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  //! a^k for k >= 1.
  int power(int a, int k) const;

  //! Left-to-right fold of a nonempty factor sequence.
  int eval(std::span<const int> factors) const;

  const std::string& name(int a) const {
    return names_[a];
  }

  const std::vector<std::string>& names() const noexcept {
    return names_;
  }

  //! Index of the named element, or -1.
  int index_of(std::string_view name) const;

  const std::vector<int>& flat() const noexcept {
    return table_;
  }

  struct Triple {
    int a, b, c;
  };

  //! First triple (in lexicographic index order) violating associativity.
  std::optional<Triple> associativity_witness() const;

  bool is_associative() const {
    return !associativity_witness().has_value();
  }

  //! Throws PreconditionError naming the violating triple.
  void require_associative() const;

  std::string to_text() const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  void init_index();

  int order_;
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major, table_[a * order_ + b] = a * b
  std::unordered_map<std::string, int> index_;
};

}  // namespace lls

#endif  // LLS_CAYLEY_TABLE_HPP_
