#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// n jobs with positive integer loads, to be spread over m machines.
// Job j ∈ {1..n} has load loads[j-1].
struct LoadInstance {
  int machines = 1;
  std::vector<long long> loads;

  int jobs() const { return static_cast<int>(loads.size()); }
  long long load_of(int job) const { return loads[job - 1]; }  // 1-based
};

// Validates machines >= 1 and loads > 0; throws Error("InvariantError").
LoadInstance make_load_instance(int machines, std::vector<long long> loads);

// Snapshot after placing the first `placed` jobs.  In invariant-label
// notation: T = load (per machine), A = jobs_on, j = placed.  Machine
// x ∈ {1..m} has total load load[x-1] and job set jobs_on[x-1].
struct LbState {
  std::vector<long long> load;
  std::vector<IdSet> jobs_on;
  int placed = 0;
};

LbState empty_schedule(const LoadInstance& inst);

// The machine with minimum load, lowest index winning ties (1-based).
int min_arg(const std::vector<long long>& load);

long long makespan(const std::vector<long long>& load);

// Puts job `job` (1-based, load taken from inst) on machine `machine`.
LbState place_job(const LoadInstance& inst, LbState s, int machine, int job);

// Removes the highest-numbered job from the schedule; the makespan cannot
// grow.  Used to relate optima for j+1 jobs to optima for j jobs.
LbState drop_last_job(const LoadInstance& inst, LbState s);

// The schedule predicate "T and A solve the first j jobs", checked in
// order; returns the first violated conjunct:
//   A pairwise disjoint
//   ⋃ A = {1..j}
//   ∀x. ∑_{y ∈ A x} t y = T x
std::optional<std::string> check_lb(const LoadInstance& inst, const LbState& s);
bool lb_holds(const LoadInstance& inst, const LbState& s);

// Descending prefix: every job among {1..j} is at most as large as all
// jobs before it.
bool sorted_prefix(const LoadInstance& inst, int j);

struct LbResult {
  LbState final;          // indices refer to the processed job order
  // order[p] = original 1-based job index processed as job p+1.  Identity
  // when presort is off; the descending rearrangement when it is on.
  std::vector<int> order;
  bool presorted = false;
  Trace<LbState> trace;

  // Assignment in terms of the caller's original job numbering.
  std::vector<IdSet> original_assignment() const;
};

// The instance seen by the greedy loop: job p (1-based) carries the load
// of original job order[p-1].  Identity when presort was off.  Invariant
// checks on a trace must use this instance, since trace states index jobs
// in processed order.
LoadInstance processed_instance(const LoadInstance& inst,
                                const std::vector<int>& order);

// List scheduling: place each job in turn on a least-loaded machine.
// With presort the jobs are first rearranged in descending load order
// (stable, so equal loads keep their input order); the trace and the lb
// predicate then live in the processed order, and original_assignment()
// maps the result back.  Guarantees: makespan within 2x of the optimum,
// within 3/2 when presorted.
LbResult greedy_balance(const LoadInstance& inst, bool presort);

// Loop invariant, unsorted case, conjuncts in order (lb conjuncts pass
// through from check_lb):
//   lb T A j
//   j ≤ n
//   makespan T ≤ 2 * makespan T′   for every lb-schedule T′ of jobs {1..j};
//                                  the caller supplies opt_makespan(j)
std::optional<std::string> check_inv1(const LoadInstance& inst, const LbState& s,
                                      long long opt_prefix_makespan);

// Loop invariant, descending-order case, conjuncts in order:
//   lb T A j
//   j ≤ n
//   makespan T ≤ 3/2 * makespan T′
//   ∀x > j. T x = 0                 (machines j+1..m still empty)
//   j ≤ m ⟶ makespan T = Max₀ (t ` {1..j})
std::optional<std::string> check_inv2(const LoadInstance& inst, const LbState& s,
                                      long long opt_prefix_makespan);

}  // namespace apx
