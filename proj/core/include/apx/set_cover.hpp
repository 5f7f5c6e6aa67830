#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apx/rational.hpp"
#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// Weighted covering instance: m subsets of a finite universe, indexed
// 1..m, whose union is the whole universe; every subset carries a
// strictly positive weight.
struct SetCoverInstance {
  IdSet universe;
  std::vector<IdSet> subsets;   // subset i is subsets[i-1]
  std::vector<Rat> weights;     // weight of subset i is weights[i-1]

  int m() const { return static_cast<int>(subsets.size()); }
  const IdSet& subset(int i) const { return subsets[i - 1]; }
  const Rat& weight(int i) const { return weights[i - 1]; }
};

// Validates: at least one subset, one weight per subset, weights > 0,
// subsets ⊆ universe, and ⋃ subsets = universe.
// Throws Error("InvariantError") naming the failed assumption.
SetCoverInstance make_set_cover_instance(IdSet universe,
                                         std::vector<IdSet> subsets,
                                         std::vector<Rat> weights);

// C indexes a collection of subsets covering exactly `covered`:
// C ⊆ {1..m} and ⋃_{i∈C} subset(i) = covered.
bool is_set_cover_of(const SetCoverInstance& inst, const IdSet& c,
                     const IdSet& covered);

// Sum of the weights of the subsets indexed by C.
Rat total_weight(const SetCoverInstance& inst, const IdSet& c);

// Cost-effectiveness of subset i against the still-uncovered set R:
// weight(i) / |subset(i) ∩ R|.  Divides by the overlap, so an empty
// overlap yields the Infinite sentinel, which compares greater than every
// finite cost.
struct ScCost {
  bool infinite = false;
  Rat value;

  static ScCost inf() { return ScCost{true, Rat(0)}; }
  friend bool operator<(const ScCost& a, const ScCost& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator==(const ScCost& a, const ScCost& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

ScCost sc_cost(const SetCoverInstance& inst, const IdSet& r, int i);

// Index of a cheapest subset with non-empty overlap with R, lowest index
// winning ties; skips past overlap-free prefixes, so it degenerates to m
// when nothing overlaps.  1-based.
int min_arg_cover(const SetCoverInstance& inst, const IdSet& r);

// Snapshot of the greedy loop.  In invariant-label notation:
//   C = chosen, R = uncovered, c = charge, U = universe,
//   S k = subset(k), w k = weight(k), W = total_weight.
// `charge` is the proof witness: the amount each covered element was
// charged when its covering subset was picked (elements absent from the
// map are charged 0).
struct ScState {
  IdSet chosen;              // C: indices picked so far
  IdSet uncovered;           // R: elements not yet covered
  std::map<Id, Rat> charge;  // c: per-element cost attribution
};

struct ScResult {
  IdSet chosen;
  Rat weight;
  Trace<ScState> trace;
};

// Greedy weighted cover: repeatedly pick the subset with the best
// weight-per-newly-covered-element ratio.  Total weight is within
// H(d*) of every cover's weight, where d* is the largest subset size
// and H the harmonic number.
ScResult greedy_sc(const SetCoverInstance& inst);

// Loop invariant, conjuncts in order:
//   C ⊆ {1..m}                                        (sc, part 1)
//   ⋃ (S ` C) = U − R                                 (sc, part 2)
//   R ⊆ U
//   W C = ∑_{s ∈ U − R} c s
//   ∀i. 0 ≤ c i
//   ∀k ∈ {1..m}. ∑_{s ∈ S k ∩ (U − R)} c s ≤ (∑_{j=|S k ∩ R|+1..|S k|} 1/j) * w k
// The last family is checked for k = 1..m in order; a violation is
// labelled with the offending k.
std::optional<std::string> check_inv_sc(const SetCoverInstance& inst,
                                        const ScState& s);

// Largest subset cardinality d*; the ratio guarantee is H(d*).
long long max_subset_size(const SetCoverInstance& inst);

}  // namespace apx
