#ifndef LLS_VARIETIES_HPP_
#define LLS_VARIETIES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lls/cayley_table.hpp"
#include "lls/identity.hpp"

namespace lls {

//! The eleven varieties of the containment diagram, bottom to top:
//!   T    trivial (a = b)
//!   ZM   zero multiplication (constant product)
//!   LZ   left zero (ab = a)
//!   SL   semilattices (aa = a, ab = ba)
//!   LNB  left normal bands (aa = a, abc = acb)
//!   LRB  left regular bands (aa = a, aba = ab)
//!   B    ab = ac
//!   D    ab = ba, ab = aab
//!   C    abc = acb, ab = aab
//!   A    aba = ab, ab = aab
//!   LLS  aba = ab
enum class VarietyNode { T, ZM, LZ, SL, LNB, LRB, B, D, C, A, LLS };

inline constexpr std::array<VarietyNode, 11> all_variety_nodes = {
    VarietyNode::T,   VarietyNode::ZM, VarietyNode::LZ, VarietyNode::SL,
    VarietyNode::LNB, VarietyNode::LRB, VarietyNode::B,  VarietyNode::D,
    VarietyNode::C,   VarietyNode::A,  VarietyNode::LLS};

std::string_view variety_name(VarietyNode v);
std::optional<VarietyNode> variety_from_name(std::string_view name);

//! Covering edges (lower, upper) of the containment diagram.
const std::vector<std::pair<VarietyNode, VarietyNode>>& variety_edges();

//! Membership of t in one variety. Pre: t associative.
bool in_variety(const CayleyTable& t, VarietyNode v);

//! All varieties containing t, in all_variety_nodes order. The result is
//! verified to be upward closed along variety_edges().
std::vector<VarietyNode> variety_membership(const CayleyTable& t);

//! A bijection m with m[t1(a,b)] = t2(m[a], m[b]), or nullopt. Backtracking
//! with invariant pruning; intended for small orders.
std::optional<std::vector<int>> are_isomorphic(const CayleyTable& t1,
                                               const CayleyTable& t2);

struct EnumerationOptions {
  std::vector<Identity> identities{};  // extra filters, checked on completion
  bool left_legal = false;             // prune with aba = ab during search
  bool up_to_iso = false;              // keep only canonical representatives
};

//! All semigroups on {0..order-1} (with default names), found by row-major
//! backtracking over table cells with partial associativity pruning, in
//! lexicographic order of the flat table. With up_to_iso only tables equal
//! to their canonical form (lexicographically least relabeling) are kept.
//! Bounds: order <= 4, or 5 with the left legal filter.
std::vector<CayleyTable> enumerate_semigroups(
    int order, const EnumerationOptions& options = {});

//! "# count: K" followed by the tables in file format, blank-line separated.
std::string census_text(const std::vector<CayleyTable>& tables);

}  // namespace lls

#endif  // LLS_VARIETIES_HPP_
