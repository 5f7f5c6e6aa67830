#include "apx/center_selection.hpp"

#include "apx/error.hpp"

namespace apx {

MetricInstance make_metric_instance(std::vector<std::vector<Rat>> dist, int k) {
  if (dist.empty()) {
    throw Error("InvariantError", "need at least one site");
  }
  if (auto bad = validate_metric(dist)) {
    throw Error("InvariantError", "distances violate " + bad->describe());
  }
  const int n = static_cast<int>(dist.size());
  if (k < 1 || k > n) {
    throw Error("InvariantError",
                "k must satisfy 1 ≤ k ≤ number of sites, got k = " + std::to_string(k));
  }
  return MetricInstance{n, std::move(dist), k};
}

Rat distance_to(const MetricInstance& inst, const IdSet& c, Id s) {
  if (c.empty()) throw Error("EmptyCenters", "distance to an empty center set");
  auto it = c.begin();
  Rat best = inst.d(s, *it);
  for (++it; it != c.end(); ++it) {
    best = std::min(best, inst.d(s, *it));
  }
  return best;
}

Rat radius_of(const MetricInstance& inst, const IdSet& c) {
  Rat worst(0);
  for (Id s = 1; s <= inst.n; ++s) {
    worst = std::max(worst, distance_to(inst, c, s));
  }
  return worst;
}

Id furthest_from(const MetricInstance& inst, const IdSet& c, PickPolicy& policy) {
  Rat target = radius_of(inst, c);
  IdSet candidates;
  for (Id s = 1; s <= inst.n; ++s) {
    if (!c.count(s) && distance_to(inst, c, s) == target) candidates.insert(s);
  }
  if (candidates.empty()) {
    // Every maximizer sits in C, which forces the maximum to be 0; all
    // remaining sites attain it too.
    candidates = set_minus(inst.sites(), c);
  }
  return policy.pick(candidates);
}

CsResult greedy_centers(const MetricInstance& inst, PickPolicy policy) {
  CsState s;
  s.centers.insert(policy.pick(inst.sites()));
  Trace<CsState> trace;
  trace.init = s;
  while (static_cast<int>(s.centers.size()) < inst.k) {
    s.centers.insert(furthest_from(inst, s.centers, policy));
    trace.steps.push_back(s);
  }
  return CsResult{s.centers, std::move(trace)};
}

std::optional<std::string> check_invar_cs(const MetricInstance& inst,
                                          const CsState& s,
                                          const std::set<Rat>& candidate_radii) {
  if (s.centers.empty()) return "C ≠ ∅";
  if (static_cast<int>(s.centers.size()) > inst.k) return "card C ≤ k";
  if (!is_subset(s.centers, inst.sites())) return "C ⊆ S";

  // Evaluate both disjuncts once; they are monotone in r, so comparing
  // against each candidate radius is two comparisons.
  bool has_pair = s.centers.size() >= 2;
  Rat min_pair(0);
  if (has_pair) {
    bool first = true;
    for (Id c1 : s.centers) {
      for (Id c2 : s.centers) {
        if (c1 < c2) {
          Rat d = inst.d(c1, c2);
          if (first || d < min_pair) {
            min_pair = d;
            first = false;
          }
        }
      }
    }
  }
  Rat coverage = radius_of(inst, s.centers);
  for (const Rat& r : candidate_radii) {
    Rat bound = Rat(2) * r;
    bool spread_apart = !has_pair || bound < min_pair;
    bool all_within = coverage <= bound;
    if (!spread_apart && !all_within) {
      return "(∀c₁ ≠ c₂ ∈ C. 2 * radius C′ < dist c₁ c₂) ∨ "
             "(∀s ∈ S. distance C s ≤ 2 * radius C′) at radius C′ = " +
             r.str();
    }
  }
  return std::nullopt;
}

std::set<Rat> all_subset_radii(const MetricInstance& inst) {
  if (inst.n > 20) {
    throw Error("TooLarge", "subset radius enumeration supports at most 20 sites");
  }
  std::set<Rat> radii;
  const unsigned long long total = 1ULL << inst.n;
  for (unsigned long long mask = 1; mask < total; ++mask) {
    IdSet c;
    for (int i = 0; i < inst.n; ++i) {
      if (mask & (1ULL << i)) c.insert(i + 1);
    }
    radii.insert(radius_of(inst, c));
  }
  return radii;
}

}  // namespace apx
