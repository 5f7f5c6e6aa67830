#include "apx/load_balancing.hpp"

#include <algorithm>
#include <numeric>

#include "apx/error.hpp"

namespace apx {

LoadInstance make_load_instance(int machines, std::vector<long long> loads) {
  if (machines < 1) {
    throw Error("InvariantError", "need at least one machine");
  }
  for (long long t : loads) {
    if (t <= 0) {
      throw Error("InvariantError", "job loads must be positive");
    }
  }
  return LoadInstance{machines, std::move(loads)};
}

LbState empty_schedule(const LoadInstance& inst) {
  LbState s;
  s.load.assign(inst.machines, 0);
  s.jobs_on.assign(inst.machines, {});
  s.placed = 0;
  return s;
}

int min_arg(const std::vector<long long>& load) {
  int best = 1;
  for (int x = 2; x <= static_cast<int>(load.size()); ++x) {
    if (load[x - 1] < load[best - 1]) best = x;
  }
  return best;
}

long long makespan(const std::vector<long long>& load) {
  long long mk = 0;
  for (long long v : load) mk = std::max(mk, v);
  return mk;
}

LbState place_job(const LoadInstance& inst, LbState s, int machine, int job) {
  s.jobs_on[machine - 1].insert(job);
  s.load[machine - 1] += inst.load_of(job);
  s.placed = std::max(s.placed, job);
  return s;
}

LbState drop_last_job(const LoadInstance& inst, LbState s) {
  int job = s.placed;
  for (int x = 1; x <= inst.machines; ++x) {
    if (s.jobs_on[x - 1].erase(job)) {
      s.load[x - 1] -= inst.load_of(job);
      break;
    }
  }
  s.placed = job - 1;
  return s;
}

std::optional<std::string> check_lb(const LoadInstance& inst, const LbState& s) {
  if (!pairwise_disjoint(s.jobs_on)) return "A pairwise disjoint";
  IdSet assigned;
  for (const IdSet& a : s.jobs_on) assigned.insert(a.begin(), a.end());
  if (assigned != id_range(1, s.placed)) return "⋃ A = {1..j}";
  for (int x = 1; x <= inst.machines; ++x) {
    long long sum = 0;
    for (Id y : s.jobs_on[x - 1]) sum += inst.load_of(static_cast<int>(y));
    if (sum != s.load[x - 1]) return "∀x. ∑_{y ∈ A x} t y = T x";
  }
  return std::nullopt;
}

bool lb_holds(const LoadInstance& inst, const LbState& s) {
  return !check_lb(inst, s);
}

bool sorted_prefix(const LoadInstance& inst, int j) {
  for (int x = 2; x <= j; ++x) {
    if (inst.load_of(x) > inst.load_of(x - 1)) return false;
  }
  return true;
}

std::vector<IdSet> LbResult::original_assignment() const {
  std::vector<IdSet> out(final.jobs_on.size());
  for (std::size_t x = 0; x < final.jobs_on.size(); ++x) {
    for (Id p : final.jobs_on[x]) {
      out[x].insert(order[static_cast<std::size_t>(p) - 1]);
    }
  }
  return out;
}

LoadInstance processed_instance(const LoadInstance& inst,
                                const std::vector<int>& order) {
  LoadInstance out = inst;
  for (std::size_t p = 0; p < order.size(); ++p) {
    out.loads[p] = inst.load_of(order[p]);
  }
  return out;
}

LbResult greedy_balance(const LoadInstance& inst, bool presort) {
  LbResult result;
  result.presorted = presort;
  result.order.resize(inst.loads.size());
  std::iota(result.order.begin(), result.order.end(), 1);

  LoadInstance work = inst;
  if (presort) {
    std::stable_sort(result.order.begin(), result.order.end(),
                     [&](int a, int b) { return inst.load_of(a) > inst.load_of(b); });
    for (std::size_t p = 0; p < result.order.size(); ++p) {
      work.loads[p] = inst.load_of(result.order[p]);
    }
  }

  LbState s = empty_schedule(work);
  result.trace.init = s;
  for (int j = 1; j <= work.jobs(); ++j) {
    int i = min_arg(s.load);
    s = place_job(work, std::move(s), i, j);
    result.trace.steps.push_back(s);
  }
  result.final = s;
  return result;
}

namespace {

// Shared prefix of both invariants: lb, j ≤ n, and the ratio conjunct.
std::optional<std::string> check_inv_common(const LoadInstance& inst,
                                            const LbState& s,
                                            long long opt_prefix_makespan,
                                            int ratio_num, int ratio_den,
                                            const char* ratio_label) {
  if (auto bad = check_lb(inst, s)) return bad;
  if (s.placed > inst.jobs()) return "j ≤ n";
  // makespan T ≤ (num/den) * opt, exactly, in integers.
  if (ratio_den * makespan(s.load) > ratio_num * opt_prefix_makespan) {
    return ratio_label;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_inv1(const LoadInstance& inst, const LbState& s,
                                      long long opt_prefix_makespan) {
  return check_inv_common(inst, s, opt_prefix_makespan, 2, 1,
                          "makespan T ≤ 2 * makespan T′");
}

std::optional<std::string> check_inv2(const LoadInstance& inst, const LbState& s,
                                      long long opt_prefix_makespan) {
  if (auto bad = check_inv_common(inst, s, opt_prefix_makespan, 3, 2,
                                  "makespan T ≤ 3/2 * makespan T′")) {
    return bad;
  }
  for (int x = s.placed + 1; x <= inst.machines; ++x) {
    if (s.load[x - 1] != 0) return "∀x > j. T x = 0";
  }
  if (s.placed <= inst.machines) {
    long long biggest = 0;
    for (int x = 1; x <= s.placed; ++x) {
      biggest = std::max(biggest, inst.load_of(x));
    }
    if (makespan(s.load) != biggest) {
      return "j ≤ m ⟶ makespan T = Max₀ (t ` {1..j})";
    }
  }
  return std::nullopt;
}

}  // namespace apx
