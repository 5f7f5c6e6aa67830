#pragma once

#include <cstdint>
#include <iterator>
#include <random>

#include "apx/error.hpp"

namespace apx {

// The greedy loops below are stated as "pick some element" — any choice
// preserves their guarantees.  PickPolicy makes that choice reproducible.  MinId always takes the
// smallest element of the (ordered) candidate set; Seeded draws uniformly
// using a fixed-seed mt19937_64, so the same seed replays the same run.
// Solvers take the policy by value: a fresh copy of Seeded(s) always yields
// the same choice sequence.
class PickPolicy {
 public:
  static PickPolicy min_id() { return PickPolicy(true, 0); }
  static PickPolicy seeded(std::uint64_t seed) { return PickPolicy(false, seed); }

  bool deterministic() const { return min_; }

  // Picks one element from a non-empty ordered set.
  // Throws Error("EmptySet") when the set is empty.
  template <class Set>
  typename Set::value_type pick(const Set& candidates) {
    if (candidates.empty()) {
      throw Error("EmptySet", "pick from an empty candidate set");
    }
    if (min_) return *candidates.begin();
    // rng_() % n is reproducible everywhere; mt19937_64 output is fully
    // specified by the standard, unlike uniform_int_distribution.
    std::uint64_t index = rng_() % candidates.size();
    auto it = candidates.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    return *it;
  }

 private:
  PickPolicy(bool min, std::uint64_t seed) : min_(min), rng_(seed) {}

  bool min_;
  std::mt19937_64 rng_;
};

// Free-function spelling of the same operation.
template <class Set>
typename Set::value_type some_pick(const Set& candidates, PickPolicy& policy) {
  return policy.pick(candidates);
}

}  // namespace apx
