#pragma once

#include <optional>
#include <string>

#include "apx/pick.hpp"
#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// Covering instance: a finite family of non-empty hyperedges with at most
// k vertices each.  k = 2 is the classic graph case.
struct Hypergraph {
  EdgeSet edges;
  int k = 2;
};

// Validates the size bound and non-emptiness of every edge.
// Throws Error("InvariantError") on violation.
Hypergraph make_hypergraph(EdgeSet edges, int k);

IdSet vertices(const Hypergraph& h);

// Every edge of `edges` contains a vertex of `c`.
bool covers(const EdgeSet& edges, const IdSet& c);
bool is_vertex_cover(const Hypergraph& h, const IdSet& c);

// Pairwise disjoint edges.
bool is_matching(const EdgeSet& m);

// Snapshot of the greedy cover loop.  In invariant-label notation:
//   C = cover, F = uncovered, M = matching, E = instance edges.
struct VcState {
  IdSet cover;               // C: vertices chosen so far
  EdgeSet uncovered;         // F: edges not yet touched by C
  EdgeSet matching;          // M: the edges whose vertices were taken
  std::optional<IdSet> picked;  // edge chosen this step (absent at init)
};

struct VcResult {
  IdSet cover;
  Trace<VcState> trace;
};

// Greedy cover: repeatedly pick an uncovered edge, take all of its
// vertices, and drop every edge that now meets the cover.  The picked
// edges form a matching M witnessing |C| <= k*|M|.
VcResult greedy_vc(const Hypergraph& h, PickPolicy policy);

// Loop invariant for greedy_vc, checked conjunct by conjunct in order:
//   F ⊆ E
//   vc (E − F) C        (C covers every edge outside F)
//   card C ≤ k * card M
//   matching M
//   M ⊆ E
//   ∀e ∈ M. ∀f ∈ F. e ∩ f = ∅
// Returns the label of the first violated conjunct, or std::nullopt.
// The first conjunct is the strengthening that makes the invariant strong
// enough to survive the loop body; without it an aliasing F admits bogus
// states (see the regression tests).
std::optional<std::string> check_invar_vc(const Hypergraph& h, const VcState& s);

}  // namespace apx
