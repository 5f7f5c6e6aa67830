#include "apx/set_cover.hpp"

#include "apx/error.hpp"

namespace apx {

SetCoverInstance make_set_cover_instance(IdSet universe,
                                         std::vector<IdSet> subsets,
                                         std::vector<Rat> weights) {
  if (subsets.empty()) {
    throw Error("InvariantError", "need at least one subset");
  }
  if (subsets.size() != weights.size()) {
    throw Error("InvariantError", "need exactly one weight per subset");
  }
  for (const Rat& w : weights) {
    if (!(Rat(0) < w)) {
      throw Error("InvariantError", "subset weights must be strictly positive");
    }
  }
  for (const IdSet& s : subsets) {
    if (!is_subset(s, universe)) {
      throw Error("InvariantError", "subsets must be contained in the universe");
    }
  }
  IdSet covered;
  for (const IdSet& s : subsets) covered.insert(s.begin(), s.end());
  if (covered != universe) {
    throw Error("InvariantError", "subsets must cover the whole universe");
  }
  return SetCoverInstance{std::move(universe), std::move(subsets), std::move(weights)};
}

bool is_set_cover_of(const SetCoverInstance& inst, const IdSet& c,
                     const IdSet& covered) {
  for (Id i : c) {
    if (i < 1 || i > inst.m()) return false;
  }
  IdSet got;
  for (Id i : c) {
    const IdSet& s = inst.subset(static_cast<int>(i));
    got.insert(s.begin(), s.end());
  }
  return got == covered;
}

Rat total_weight(const SetCoverInstance& inst, const IdSet& c) {
  Rat w(0);
  for (Id i : c) w += inst.weight(static_cast<int>(i));
  return w;
}

ScCost sc_cost(const SetCoverInstance& inst, const IdSet& r, int i) {
  long long overlap = static_cast<long long>(set_inter(inst.subset(i), r).size());
  if (overlap == 0) return ScCost::inf();
  return ScCost{false, inst.weight(i) / Rat(overlap)};
}

int min_arg_cover(const SetCoverInstance& inst, const IdSet& r) {
  int j = 1;
  for (int x = 2; x <= inst.m(); ++x) {
    bool j_empty = !intersects(inst.subset(j), r);
    bool x_overlaps = intersects(inst.subset(x), r);
    if (j_empty || (x_overlaps && sc_cost(inst, r, x) < sc_cost(inst, r, j))) {
      j = x;
    }
  }
  return j;
}

ScResult greedy_sc(const SetCoverInstance& inst) {
  ScState s;
  s.uncovered = inst.universe;
  Trace<ScState> trace;
  trace.init = s;
  while (!s.uncovered.empty()) {
    int i = min_arg_cover(inst, s.uncovered);
    ScCost cost = sc_cost(inst, s.uncovered, i);
    for (Id covered_now : set_inter(inst.subset(i), s.uncovered)) {
      s.charge[covered_now] = cost.value;
    }
    s.uncovered = set_minus(s.uncovered, inst.subset(i));
    s.chosen.insert(i);
    trace.steps.push_back(s);
  }
  return ScResult{s.chosen, total_weight(inst, s.chosen), std::move(trace)};
}

std::optional<std::string> check_inv_sc(const SetCoverInstance& inst,
                                        const ScState& s) {
  for (Id i : s.chosen) {
    if (i < 1 || i > inst.m()) return "C ⊆ {1..m}";
  }
  const IdSet done = set_minus(inst.universe, s.uncovered);
  IdSet covered;
  for (Id i : s.chosen) {
    const IdSet& sub = inst.subset(static_cast<int>(i));
    covered.insert(sub.begin(), sub.end());
  }
  if (covered != done) return "⋃ (S ` C) = U − R";
  if (!is_subset(s.uncovered, inst.universe)) return "R ⊆ U";

  auto charge_of = [&](Id element) {
    auto it = s.charge.find(element);
    return it == s.charge.end() ? Rat(0) : it->second;
  };
  Rat charged(0);
  for (Id element : done) charged += charge_of(element);
  if (total_weight(inst, s.chosen) != charged) return "W C = ∑_{s ∈ U − R} c s";
  for (const auto& [element, value] : s.charge) {
    if (value < Rat(0)) return "∀i. 0 ≤ c i";
  }
  for (int k = 1; k <= inst.m(); ++k) {
    const IdSet& sub = inst.subset(k);
    Rat lhs(0);
    for (Id element : set_inter(sub, done)) lhs += charge_of(element);
    long long full = static_cast<long long>(sub.size());
    long long still = static_cast<long long>(set_inter(sub, s.uncovered).size());
    Rat budget = (harmonic(full) - harmonic(still)) * inst.weight(k);
    if (lhs > budget) {
      return "∑_{s ∈ S " + std::to_string(k) + " ∩ (U − R)} c s ≤ "
             "(∑_{j = |S " + std::to_string(k) + " ∩ R| + 1}^{|S " +
             std::to_string(k) + "|} 1/j) * w " + std::to_string(k);
    }
  }
  return std::nullopt;
}

long long max_subset_size(const SetCoverInstance& inst) {
  long long best = 0;
  for (const IdSet& s : inst.subsets) {
    best = std::max(best, static_cast<long long>(s.size()));
  }
  return best;
}

}  // namespace apx
