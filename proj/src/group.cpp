#include "hopftwist/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopftwist/errors.hpp"

namespace hopftwist {

Group Group::fromCayley(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("group: empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[static_cast<size_t>(i)].size()) != n)
      throw Error("group: table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      int v = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v < 0 || v >= n)
        throw Error("group: entry out of range at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  for (int i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i)
      throw Error("group: identity is not at index 0 (fails on element " + std::to_string(i) +
                  ")");
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seenRow(static_cast<size_t>(n), false), seenCol(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      if (seenRow[static_cast<size_t>(at(i, j))])
        throw Error("group: row " + std::to_string(i) + " is not a permutation");
      seenRow[static_cast<size_t>(at(i, j))] = true;
      if (seenCol[static_cast<size_t>(at(j, i))])
        throw Error("group: column " + std::to_string(i) + " is not a permutation");
      seenCol[static_cast<size_t>(at(j, i))] = true;
    }
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (at(at(g, h), k) != at(g, at(h, k))) {
          std::ostringstream os;
          os << "group: associativity fails at (" << g << "," << h << "," << k << ")";
          throw Error(os.str());
        }
  std::vector<int> inv(static_cast<size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (at(g, h) == 0) inv[static_cast<size_t>(g)] = h;
  return Group(std::move(table), std::move(inv));
}

int Group::elementOrder(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long Group::exponent() const {
  long e = 1;
  for (int a = 0; a < order(); ++a) e = std::lcm(e, static_cast<long>(elementOrder(a)));
  return e;
}

bool Group::isAbelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::pair<Group, std::vector<int>> subgroupFromElements(const Group& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != 0)
    throw Error("subgroup: element set must contain the identity (index 0)");
  for (int e : elems)
    if (e < 0 || e >= g.order()) throw Error("subgroup: element index out of range");
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int p = g.mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(p)] < 0) {
        std::ostringstream os;
        os << "subgroup: not closed — product of " << elems[static_cast<size_t>(i)] << " and "
           << elems[static_cast<size_t>(j)] << " is " << p;
        throw Error(os.str());
      }
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos[static_cast<size_t>(p)];
    }
  }
  for (int i = 0; i < m; ++i) {
    int iv = g.inverse(elems[static_cast<size_t>(i)]);
    if (pos[static_cast<size_t>(iv)] < 0)
      throw Error("subgroup: inverse of element " + std::to_string(elems[static_cast<size_t>(i)]) +
                  " is outside the set");
  }
  return {Group::fromCayley(std::move(table)), std::move(elems)};
}

}  // namespace hopftwist
