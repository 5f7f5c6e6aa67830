#pragma once

#include <map>
#include <optional>
#include <string>

#include "apx/pick.hpp"
#include "apx/rational.hpp"
#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// Finite non-empty set of objects U, each with a positive rational weight
// no larger than the bin capacity c.  Objects split into small and large:
// small ⟺ w(u) ≤ c/2 (exact rational comparison), large otherwise.  At
// most one large object ever fits in a bin.  The split is derived from the
// weights, never stored externally.
struct BinPackInstance {
  IdSet objects;               // U
  std::map<Id, Rat> weight;    // w
  Rat capacity;                // c
  IdSet small;                 // S = {u | w u ≤ c/2}
  IdSet large;                 // L = {u | w u > c/2}

  const Rat& weight_of(Id u) const { return weight.at(u); }
};

// Validates: objects non-empty (EmptyInstance), capacity positive, and
// 0 < w(u) ≤ c for every object (InvariantError naming the assumption).
BinPackInstance make_bin_pack_instance(const IdSet& objects,
                                       const std::map<Id, Rat>& weight,
                                       const Rat& capacity);

using Bin = IdSet;
using Packing = std::set<Bin>;

// W B: total weight packed into one bin.
Rat bin_weight(const BinPackInstance& inst, const Bin& b);

// ⟦B⟧: the empty family for an empty bin, {B} otherwise.  Lets a possibly
// empty open bin be unioned into a packing without introducing ∅.
Packing bracket(const Bin& b);

// bp P: the bins partition the objects (no empty bin, pairwise disjoint,
// union = U) and every bin's weight sum stays within the capacity.
bool is_bp(const BinPackInstance& inst, const Packing& p);

// Snapshot of the two-open-bin greedy loop.  In invariant-label notation:
//   P₁ = closed_primary    bins flushed out of the primary open bin
//   P₂ = closed_secondary  bins flushed out of the secondary open bin
//   B₁ = open_primary      open bin, filled first
//   B₂ = open_secondary    open bin for objects that overflow B₁
//   V  = pending           objects not yet placed
//   f  = overflow          witness: each bin flushed into P₁ mapped to the
//                          object whose arrival overflowed it, so that
//                          c < W B + w (f B) holds for every B ∈ P₁.
struct BpState {
  Packing closed_primary;
  Packing closed_secondary;
  Bin open_primary;
  Bin open_secondary;
  IdSet pending;
  std::map<Bin, Id> overflow;
};

// The full packing an intermediate state stands for:
// P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧ ∪ {{v} | v ∈ V}.
Packing assembled(const BpState& s);

struct BpResult {
  Packing packing;
  Trace<BpState> trace;
};

// Two-open-bin greedy.  While a small pending object exists: pick from the
// pending small objects if B₁ is already open, otherwise prefer a pending
// large object to seed B₁ (falling back to a small one).  The object goes
// into B₁ if it fits; otherwise into B₂ if it fits there (flushing B₁ to
// P₁); otherwise B₂ is flushed to P₂ and restarted as {u} (again flushing
// B₁).  Leftover pending objects — all large — end as singleton bins.
// Uses at most 3/2 times the bins of any valid packing.
// Throws Error("EmptyInstance") if the instance has no objects.
BpResult greedy_bp(const BinPackInstance& inst, PickPolicy policy);

// Functional-correctness invariant, conjuncts in order:
//   bp (P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧ ∪ {{v} | v ∈ V})
//   ⋃ (P₁ ∪ ⟦B₁⟧ ∪ P₂ ∪ ⟦B₂⟧) = U − V
//   B₁ ∉ P₁ ∪ P₂ ∪ ⟦B₂⟧
//   B₂ ∉ P₁ ∪ ⟦B₁⟧ ∪ P₂
//   (P₁ ∪ ⟦B₁⟧) ∩ (P₂ ∪ ⟦B₂⟧) = ∅
// The last four conjuncts strengthen the bare bp condition: without them
// a state whose open bin already sits inside a closed partial solution
// (the two coinciding as sets) still assembles into a valid packing, yet
// the next insertion into the open bin silently corrupts the closed one.
std::optional<std::string> check_inv1(const BinPackInstance& inst,
                                      const BpState& s);

// Ratio invariant: the check_inv1 conjuncts, then
//   V ∩ L ≠ ∅ ⟶ (∀B ∈ P₁ ∪ ⟦B₁⟧. B ∩ L ≠ ∅)
//   bij_exists P₁ (⋃ (P₂ ∪ ⟦B₂⟧))
//   2 * card P₂ ≤ card (⋃ P₂)
// bij_exists is checked through the explicit witness carried by the state:
// overflow must map exactly the bins of P₁, injectively, onto the objects
// placed in P₂ ∪ ⟦B₂⟧, with c < W B + w (f B) for each bin.
std::optional<std::string> check_inv2(const BinPackInstance& inst,
                                      const BpState& s);

// Full loop invariant: the check_inv2 conjuncts, then B₂ ⊆ S.
std::optional<std::string> check_inv3(const BinPackInstance& inst,
                                      const BpState& s);

}  // namespace apx
