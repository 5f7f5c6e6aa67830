#include "apx/bin_packing.hpp"

#include "apx/error.hpp"

namespace apx {

BinPackInstance make_bin_pack_instance(const IdSet& objects,
                                       const std::map<Id, Rat>& weight,
                                       const Rat& capacity) {
  if (objects.empty()) {
    throw Error("EmptyInstance", "bin packing needs at least one object");
  }
  if (!(Rat(0) < capacity)) {
    throw Error("InvariantError", "c > 0");
  }
  BinPackInstance inst;
  inst.objects = objects;
  inst.capacity = capacity;
  const Rat half = capacity / Rat(2);
  for (Id u : objects) {
    auto it = weight.find(u);
    if (it == weight.end()) {
      throw Error("InvariantError", "w(u) defined for every object");
    }
    const Rat& w = it->second;
    if (!(Rat(0) < w)) {
      throw Error("InvariantError", "w(u) > 0");
    }
    if (!(w <= capacity)) {
      throw Error("InvariantError", "w(u) ≤ c");
    }
    inst.weight.emplace(u, w);
    (w <= half ? inst.small : inst.large).insert(u);
  }
  return inst;
}

Rat bin_weight(const BinPackInstance& inst, const Bin& b) {
  Rat total(0);
  for (Id u : b) total += inst.weight_of(u);
  return total;
}

Packing bracket(const Bin& b) {
  Packing out;
  if (!b.empty()) out.insert(b);
  return out;
}

bool is_bp(const BinPackInstance& inst, const Packing& p) {
  for (const Bin& b : p) {
    if (b.empty()) return false;
  }
  if (!pairwise_disjoint(p)) return false;
  if (union_all(p) != inst.objects) return false;
  for (const Bin& b : p) {
    if (!(bin_weight(inst, b) <= inst.capacity)) return false;
  }
  return true;
}

namespace {

Packing packing_union(std::initializer_list<const Packing*> parts) {
  Packing out;
  for (const Packing* p : parts) out.insert(p->begin(), p->end());
  return out;
}

// P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧ — the closed part of the split solution.
Packing closed_bins(const BpState& s) {
  Packing b1 = bracket(s.open_primary);
  Packing b2 = bracket(s.open_secondary);
  return packing_union({&s.closed_primary, &b1, &s.closed_secondary, &b2});
}

}  // namespace

Packing assembled(const BpState& s) {
  Packing out = closed_bins(s);
  for (Id v : s.pending) out.insert(Bin{v});
  return out;
}

BpResult greedy_bp(const BinPackInstance& inst, PickPolicy policy) {
  if (inst.objects.empty()) {
    throw Error("EmptyInstance", "bin packing needs at least one object");
  }
  BpState s;
  s.pending = inst.objects;

  Trace<BpState> trace;
  trace.init = s;

  for (;;) {
    IdSet pending_small = set_inter(s.pending, inst.small);
    if (pending_small.empty()) break;

    Id u;
    if (!s.open_primary.empty()) {
      u = some_pick(pending_small, policy);
    } else {
      IdSet pending_large = set_inter(s.pending, inst.large);
      u = pending_large.empty() ? some_pick(pending_small, policy)
                                : some_pick(pending_large, policy);
    }
    s.pending.erase(u);

    if (bin_weight(inst, s.open_primary) + inst.weight_of(u) <= inst.capacity) {
      s.open_primary.insert(u);
    } else {
      if (bin_weight(inst, s.open_secondary) + inst.weight_of(u) <= inst.capacity) {
        s.open_secondary.insert(u);
      } else {
        // A lone object always fits an empty bin (w ≤ c), so the flushed
        // secondary bin is never empty here; guard anyway to mirror ⟦·⟧.
        if (!s.open_secondary.empty()) s.closed_secondary.insert(s.open_secondary);
        s.open_secondary = Bin{u};
      }
      // Same reasoning: u only overflows a non-empty primary bin.  The
      // flushed bin is recorded in the overflow witness before closing.
      if (!s.open_primary.empty()) {
        s.overflow[s.open_primary] = u;
        s.closed_primary.insert(s.open_primary);
      }
      s.open_primary.clear();
    }
    trace.steps.push_back(s);
  }

  BpResult result;
  result.packing = assembled(s);
  result.trace = std::move(trace);
  return result;
}

std::optional<std::string> check_inv1(const BinPackInstance& inst,
                                      const BpState& s) {
  if (!is_bp(inst, assembled(s))) {
    return "bp (P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧ ∪ {{v} | v ∈ V})";
  }
  if (union_all(closed_bins(s)) != set_minus(inst.objects, s.pending)) {
    return "⋃ (P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧) = U − V";
  }
  {
    Packing b2 = bracket(s.open_secondary);
    Packing others = packing_union({&s.closed_primary, &s.closed_secondary, &b2});
    if (others.count(s.open_primary) != 0) {
      return "B₁ ∉ P₁ ∪ P₂ ∪ ⟦B₂⟧";
    }
  }
  {
    Packing b1 = bracket(s.open_primary);
    Packing others = packing_union({&s.closed_primary, &b1, &s.closed_secondary});
    if (others.count(s.open_secondary) != 0) {
      return "B₂ ∉ P₁ ∪ ⟦B₁⟧ ∪ P₂";
    }
  }
  {
    Packing b1 = bracket(s.open_primary);
    Packing b2 = bracket(s.open_secondary);
    Packing primary = packing_union({&s.closed_primary, &b1});
    Packing secondary = packing_union({&s.closed_secondary, &b2});
    for (const Bin& b : primary) {
      if (secondary.count(b) != 0) {
        return "(P₁ ∪ ⟦B₁⟧) ∩ (P₂ ∪ ⟦B₂⟧) = ∅";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_inv2(const BinPackInstance& inst,
                                      const BpState& s) {
  if (auto violated = check_inv1(inst, s)) return violated;

  if (intersects(s.pending, inst.large)) {
    Packing b1 = bracket(s.open_primary);
    Packing primary = packing_union({&s.closed_primary, &b1});
    for (const Bin& b : primary) {
      if (!intersects(b, inst.large)) {
        return "V ∩ L ≠ ∅ ⟶ (∀B ∈ P₁ ∪ ⟦B₁⟧. B ∩ L ≠ ∅)";
      }
    }
  }

  {
    const std::string label = "bij_exists P₁ (⋃ (P₂ ∪ ⟦B₂⟧))";
    Packing b2 = bracket(s.open_secondary);
    IdSet targets = union_all(packing_union({&s.closed_secondary, &b2}));
    // The witness must map exactly the bins of P₁ ...
    Packing domain;
    for (const auto& [bin, u] : s.overflow) domain.insert(bin);
    if (domain != s.closed_primary) return label;
    // ... injectively onto the secondary objects ...
    IdSet image;
    for (const auto& [bin, u] : s.overflow) {
      if (!image.insert(u).second) return label;
    }
    if (image != targets) return label;
    // ... such that each mapped object would have overflowed its bin.
    for (const auto& [bin, u] : s.overflow) {
      auto it = inst.weight.find(u);
      if (it == inst.weight.end()) return label;
      if (!(inst.capacity < bin_weight(inst, bin) + it->second)) return label;
    }
  }

  {
    long long pairs = 2 * static_cast<long long>(s.closed_secondary.size());
    long long objects = static_cast<long long>(union_all(s.closed_secondary).size());
    if (!(pairs <= objects)) {
      return "2 * card P₂ ≤ card (⋃ P₂)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_inv3(const BinPackInstance& inst,
                                      const BpState& s) {
  if (auto violated = check_inv2(inst, s)) return violated;
  if (!is_subset(s.open_secondary, inst.small)) {
    return "B₂ ⊆ S";
  }
  return std::nullopt;
}

}  // namespace apx
