#pragma once

#include <vector>

#include "apx/bin_packing.hpp"
#include "apx/center_selection.hpp"
#include "apx/independent_set.hpp"
#include "apx/load_balancing.hpp"
#include "apx/rational.hpp"
#include "apx/set_cover.hpp"
#include "apx/sets.hpp"
#include "apx/vertex_cover.hpp"

namespace apx {

// Exact optimum computation at desk scale.  These oracles exist to certify
// the approximation guarantees of the greedy solvers on small instances;
// they refuse anything above their size caps with Error("TooLarge") rather
// than running unbounded.  All of them break ties towards the
// lexicographically smallest witness, so expected values can be pinned in
// tests byte for byte.
struct OracleLimits {
  long long vc_vertices = 16;
  long long mis_vertices = 16;
  long long lb_jobs = 12;
  int lb_machines = 4;
  long long cs_sites = 12;
  long long sc_subsets = 16;
  long long bp_objects = 12;
};

struct VcOptimum {
  long long size = 0;
  IdSet cover;
};

struct MisOptimum {
  long long size = 0;
  IdSet independent;
};

struct CsOptimum {
  Rat radius;
  IdSet centers;
};

struct ScOptimum {
  Rat weight;
  IdSet chosen;
};

struct BpOptimum {
  long long bins = 0;
  Packing packing;
};

// Minimum-cardinality vertex cover, by subset enumeration over ⋃E.
VcOptimum opt_vertex_cover(const Hypergraph& h, const OracleLimits& limits = {});

// Maximum-cardinality independent set, by subset enumeration over V.
MisOptimum opt_independent_set(const Graph& g, const OracleLimits& limits = {});

// Minimum makespans of every prefix: entry j is the optimum for jobs
// {1..j}; entry 0 is 0.  Exact dynamic program over canonical (sorted)
// machine-load vectors, one forward sweep for all prefixes.
std::vector<long long> opt_prefix_makespans(const LoadInstance& inst,
                                            const OracleLimits& limits = {});

// Minimum makespan for the first j jobs (0 ≤ j ≤ n).
long long opt_makespan(const LoadInstance& inst, int j,
                       const OracleLimits& limits = {});

// A machine assignment for jobs {1..j} achieving opt_makespan(inst, j):
// entry i is the 1-based machine of job i+1.  Lexicographically smallest
// such vector (depth-first search, machines tried in ascending order).
std::vector<int> opt_assignment(const LoadInstance& inst, int j,
                                const OracleLimits& limits = {});

// Minimum radius over all center sets C′ ⊆ sites with |C′| = k, by
// k-subset enumeration.  (Radius never grows when centers are added, so
// this is also the minimum over 0 < |C′| ≤ k.)
CsOptimum opt_radius(const MetricInstance& inst, const OracleLimits& limits = {});

// Minimum-weight set cover, by enumeration of index subsets of {1..m}.
ScOptimum opt_set_cover(const SetCoverInstance& inst,
                        const OracleLimits& limits = {});

// Same optimum by a different strategy: branch and bound over the
// include/exclude decision per subset, pruning branches that cannot cover
// the remaining elements or already weigh more than the best cover found.
// Independent implementation, used to cross-check opt_set_cover.
ScOptimum opt_set_cover_branch_bound(const SetCoverInstance& inst,
                                     const OracleLimits& limits = {});

// Minimum number of bins, by bitmask dynamic programming over feasible
// (weight ≤ c) object subsets.
BpOptimum opt_bins(const BinPackInstance& inst, const OracleLimits& limits = {});

}  // namespace apx
