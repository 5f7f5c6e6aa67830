#pragma once

// Shared helpers for the test suites: seeded draws, instance-generation
// shortcuts, and small-scale combinatorial enumeration (subsets, set
// partitions) used to verify bounds exhaustively at desk scale.

#include <cstdint>
#include <random>
#include <vector>

#include "apx/generate.hpp"
#include "apx/instance_io.hpp"
#include "apx/sets.hpp"

namespace apx::test {

// Uniform draw from {lo..hi} via the same rng()%n scheme the library uses,
// so test runs replay identically on every platform.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Generates and unwraps one instance kind.
template <class T>
T make_instance(GenParams params) {
  return std::get<T>(gen_instance(params));
}

// The elements of `elems` selected by the bits of `mask`.
inline IdSet mask_subset(const std::vector<Id>& elems, std::uint64_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (mask >> i & 1u) out.insert(elems[i]);
  }
  return out;
}

// A uniformly drawn subset (each element kept with probability 1/2).
inline IdSet random_subset(std::mt19937_64& rng, const IdSet& from) {
  IdSet out;
  for (Id v : from) {
    if (rng() % 2 == 0) out.insert(v);
  }
  return out;
}

namespace detail {
template <class Fn>
void partitions_rec(const std::vector<Id>& elems, std::vector<int>& block,
                    std::size_t i, int used, Fn& fn) {
  if (i == elems.size()) {
    std::vector<IdSet> blocks(static_cast<std::size_t>(used));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      blocks[static_cast<std::size_t>(block[j])].insert(elems[j]);
    }
    fn(blocks);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    block[i] = b;
    partitions_rec(elems, block, i + 1, used + (b == used ? 1 : 0), fn);
  }
}
}  // namespace detail

// Visits every partition of `elems` into non-empty unlabelled blocks
// (restricted-growth enumeration; Bell(8) = 4140 topmost).  `fn` receives
// the blocks as a vector of sets.
template <class Fn>
void for_each_partition(const std::vector<Id>& elems, Fn fn) {
  if (elems.empty()) return;
  std::vector<int> block(elems.size(), 0);
  detail::partitions_rec(elems, block, 0, 0, fn);
}

}  // namespace apx::test
