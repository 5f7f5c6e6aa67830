#pragma once

// Randomized property suites over the six greedy solvers.  Each suite draws
// seeded random scenarios, keeps going until `cases` non-vacuous ones were
// checked (or an attempt budget runs out), and reports every failure as a
// human-readable string.  The unit tests run each suite; the acceptance
// gate runs them all again with at least 100 cases each.

#include <cstdint>
#include <string>
#include <vector>

namespace apx::props {

struct SuiteResult {
  std::string name;
  int cases = 0;  // non-vacuous scenarios actually checked
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  // "name: N cases, first failure: ..." — for test assertion messages.
  std::string summary() const;
};

using SuiteFn = SuiteResult (*)(int cases, std::uint64_t seed);

// -- vertex cover -----------------------------------------------------------
// Every matching is at most as large as every cover (checked exhaustively
// per instance: max matching vs. min cover over all subsets).
SuiteResult vc_matching_never_beats_cover(int cases, std::uint64_t seed);
// One greedy loop body applied to a random invariant-satisfying state
// lands in an invariant-satisfying state.
SuiteResult vc_loop_body_preserves_invariant(int cases, std::uint64_t seed);

// -- independent set --------------------------------------------------------
// Adding a free vertex and closing its neighborhood preserves the
// partition-witnessed invariant.
SuiteResult mis_loop_body_preserves_partition(int cases, std::uint64_t seed);
// The exhaustive maximum independent set is at most degree-bound times the
// greedy one.
SuiteResult mis_optimum_within_degree_bound(int cases, std::uint64_t seed);
// Each closed-neighborhood block admits at most max-degree independent
// vertices (checked by enumerating subsets of the block).
SuiteResult mis_block_admits_at_most_degree(int cases, std::uint64_t seed);
// The per-run growth cap r satisfies r ≤ Δ+1 and certifies the optimum.
SuiteResult mis_growth_cap_bounds(int cases, std::uint64_t seed);
// The loop never picks an already-excluded vertex, and S ⊆ X throughout.
SuiteResult mis_never_repicks(int cases, std::uint64_t seed);

// -- load balancing ---------------------------------------------------------
// Placing the next job on ANY machine keeps the schedule predicate.
SuiteResult lb_any_machine_placement_keeps_schedule(int cases, std::uint64_t seed);
// m · makespan is at least the total load of the scheduled jobs.
SuiteResult lb_average_lower_bound(int cases, std::uint64_t seed);
// The makespan is at least the largest scheduled job.
SuiteResult lb_max_job_lower_bound(int cases, std::uint64_t seed);
// Descending loads, more jobs than machines: twice the last job fits
// under the makespan.
SuiteResult lb_sorted_two_job_bound(int cases, std::uint64_t seed);
// If any machine is idle, min_arg returns an idle machine, the earliest.
SuiteResult lb_idle_machine_is_min_arg(int cases, std::uint64_t seed);
// Adding load y on machine x either sets the makespan to T x + y or
// leaves it unchanged.
SuiteResult lb_makespan_after_one_addition(int cases, std::uint64_t seed);
// Removing the last job keeps the schedule predicate and cannot raise
// the makespan.
SuiteResult lb_dropping_last_job_shrinks(int cases, std::uint64_t seed);
// m times the least-loaded machine is at most the total load.
SuiteResult lb_min_load_below_average(int cases, std::uint64_t seed);

// -- center selection -------------------------------------------------------
// Inserting a site farther than x from a pairwise->x center set keeps all
// pairs farther than x.
SuiteResult cs_separated_insertion_stays_separated(int cases, std::uint64_t seed);
// If |C| centers are pairwise more than 2r apart, no smaller center set
// achieves radius r (subsets enumerated exhaustively).
SuiteResult cs_fewer_centers_force_larger_radius(int cases, std::uint64_t seed);
// No site is within r of two centers more than 2r apart (triangle core).
SuiteResult cs_no_site_near_two_far_centers(int cases, std::uint64_t seed);

// -- set cover ---------------------------------------------------------------
// The best-pick selector returns an index in range, cascades to "all
// overlaps empty" correctly, and takes the lowest index of minimum cost.
SuiteResult sc_best_pick_contract(int cases, std::uint64_t seed);
// Each greedy step adds exactly one new index and its exact weight.
SuiteResult sc_pick_adds_weight_exactly_once(int cases, std::uint64_t seed);
// Each step covers at least one new element; the loop ends within |U| steps.
SuiteResult sc_every_step_covers_something(int cases, std::uint64_t seed);
// Harmonic tail identity: ∑_{j=a+1}^{a+b} 1/j equals the reversed
// partial sum and equals H(a+b) − H(a) — exact rationals.
SuiteResult sc_harmonic_tail_identity(int cases, std::uint64_t seed);
// Greedy weight is within H(d*) of the exhaustive optimum.
SuiteResult sc_greedy_within_harmonic_of_optimum(int cases, std::uint64_t seed);

// -- bin packing --------------------------------------------------------------
// In every valid packing, the large objects occupy pairwise distinct bins,
// so |L| ≤ |P| (checked over ALL packings of small instances).
SuiteResult bp_large_objects_need_distinct_bins(int cases, std::uint64_t seed);
// When every closed-or-open primary bin holds a large object, those bins
// plus the pending-large singletons never outnumber the optimum packing.
SuiteResult bp_large_marked_bins_fit_any_packing(int cases, std::uint64_t seed);
// Total weight is at most capacity times the optimal bin count.
SuiteResult bp_total_weight_bounds_bin_count(int cases, std::uint64_t seed);
// |P₁| + 1 never exceeds the optimal bin count, including the P₁ = ∅ case.
SuiteResult bp_closed_primary_undercounts_optimum(int cases, std::uint64_t seed);
// Twice the secondary bin count stays below |P₁| + 1.
SuiteResult bp_secondary_bins_pair_bound(int cases, std::uint64_t seed);
// The assembled greedy packing is within 3/2 of the optimum.
SuiteResult bp_assembled_within_three_halves(int cases, std::uint64_t seed);

// All suites above, in declaration order.
std::vector<SuiteFn> all_suites();

}  // namespace apx::props
