#pragma once

#include <utility>
#include <vector>

namespace hopftwist {

/// Finite group as a validated Cayley table of 0-based indices; the identity
/// is pinned at index 0. Construction checks the group axioms and reports a
/// witness for the first violation.
class Group {
 public:
  static Group fromCayley(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int elementOrder(int a) const;
  long exponent() const;  // lcm of element orders
  bool isAbelian() const;

 private:
  explicit Group(std::vector<std::vector<int>> table, std::vector<int> inv)
      : table_(std::move(table)), inv_(std::move(inv)) {}
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

/// Verify that elems (which must contain 0) is closed under products and
/// inverses, and return the subgroup re-indexed from 0 together with the
/// embedding map (new index -> ambient index).
std::pair<Group, std::vector<int>> subgroupFromElements(const Group& g, std::vector<int> elems);

}  // namespace hopftwist
