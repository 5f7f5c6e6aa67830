#pragma once

#include <algorithm>
#include <set>
#include <vector>

namespace apx {

// Elements of problem instances (vertices, objects, sites, 1-based indices)
// are plain non-negative integers.  Sets of them are kept as ordered
// std::set, so iteration order is deterministic and a set of sets compares
// lexicographically on sorted element lists.
using Id = long long;
using IdSet = std::set<Id>;
using EdgeSet = std::set<IdSet>;

inline bool is_subset(const IdSet& a, const IdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const IdSet& a, const IdSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

inline IdSet set_union(const IdSet& a, const IdSet& b) {
  IdSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline IdSet set_minus(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline IdSet set_inter(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

template <class SetOfSets>
IdSet union_all(const SetOfSets& family) {
  IdSet out;
  for (const auto& part : family) out.insert(part.begin(), part.end());
  return out;
}

// Consecutive integers {lo, ..., hi}; empty when hi < lo.
inline IdSet id_range(Id lo, Id hi) {
  IdSet out;
  for (Id v = lo; v <= hi; ++v) out.insert(v);
  return out;
}

template <class SetOfSets>
bool pairwise_disjoint(const SetOfSets& family) {
  std::vector<Id> seen;
  for (const auto& part : family) {
    for (Id v : part) seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace apx
