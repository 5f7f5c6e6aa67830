#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apx/metric.hpp"
#include "apx/pick.hpp"
#include "apx/rational.hpp"
#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// n sites {1..n} in a finite metric space, with exact rational pairwise
// distances, and a target number of centers 1 ≤ k ≤ n.
struct MetricInstance {
  int n = 0;
  std::vector<std::vector<Rat>> dist;  // 0-based storage; sites are 1-based
  int k = 1;

  const Rat& d(Id a, Id b) const { return dist[a - 1][b - 1]; }
  IdSet sites() const { return id_range(1, n); }
};

// Validates the distance matrix (metric axioms) and 1 ≤ k ≤ n ≥ 1.
// Throws Error("InvariantError") naming the violated assumption;
// Error("DimensionMismatch") if the matrix is not n x n.
MetricInstance make_metric_instance(std::vector<std::vector<Rat>> dist, int k);

// Min distance from s to a center in C.  Throws Error("EmptyCenters") on
// empty C.
Rat distance_to(const MetricInstance& inst, const IdSet& c, Id s);

// Max over all sites of distance_to: how far the worst site is from C.
Rat radius_of(const MetricInstance& inst, const IdSet& c);

// A site maximizing distance_to(inst, c, ·).  Several sites may tie; the
// policy picks among the maximizers outside C (when every site is at
// distance 0 the maximizers include C itself, and picking outside keeps
// the loop making progress without changing which values are maximal).
Id furthest_from(const MetricInstance& inst, const IdSet& c, PickPolicy& policy);

struct CsState {
  IdSet centers;  // C
};

struct CsResult {
  IdSet centers;
  Trace<CsState> trace;
};

// Greedy k-center: start from any site, then repeatedly add a site
// furthest from the chosen centers.  Final radius is within 2x of the
// radius of every non-empty center set of size ≤ k.
CsResult greedy_centers(const MetricInstance& inst, PickPolicy policy);

// Loop invariant.  Conjuncts in order:
//   C ≠ ∅
//   card C ≤ k
//   C ⊆ S
//   ∀C′. (∀c₁ ≠ c₂ ∈ C. 2 * radius C′ < dist c₁ c₂)
//        ∨ (∀s ∈ S. distance C s ≤ 2 * radius C′)
// The final conjunct quantifies over all center sets C′; the caller passes
// the set of radii those C′ can take (see all_subset_radii).  A violation
// of the disjunction is labelled with the offending radius.
std::optional<std::string> check_invar_cs(const MetricInstance& inst,
                                          const CsState& s,
                                          const std::set<Rat>& candidate_radii);

// Distinct values of radius_of over all non-empty subsets of sites:
// the exact radius domain the invariant's ∀C′ ranges over.  2^n subsets;
// refuses n > 20 with Error("TooLarge").
std::set<Rat> all_subset_radii(const MetricInstance& inst);

}  // namespace apx
