#pragma once

#include <optional>
#include <string>

#include "apx/pick.hpp"
#include "apx/sets.hpp"
#include "apx/trace.hpp"

namespace apx {

// An undirected graph given as a set of 2-element edges.  The vertex set is
// the union of the edges, so there are no isolated vertices.
struct Graph {
  EdgeSet edges;
};

// Validates that every edge has exactly two distinct vertices.
// Throws Error("InvariantError") on violation.
Graph make_graph(EdgeSet edges);

IdSet vertices(const Graph& g);
IdSet neighbors(const Graph& g, Id v);
long long max_degree(const Graph& g);  // 0 for the empty graph

// iv: s is a set of vertices with no edge inside it.
bool is_independent_set(const Graph& g, const IdSet& s);

// Snapshot of the greedy loop.  In invariant-label notation:
//   S = chosen, X = excluded, P = closures, r = growth_cap,
//   V = vertices(g), E = instance edges.
struct MisState {
  IdSet chosen;              // S: the independent set under construction
  IdSet excluded;            // X: vertices no longer pickable
  std::set<IdSet> closures;  // P: one {x} ∪ neighbors(x) block per pick
  long long growth_cap = 0;  // r: max |{x} ∪ neighbors(x) − X| over picks
};

struct MisResult {
  IdSet independent;
  long long growth_cap = 0;  // meaningful for the r-variant
  Trace<MisState> trace;
};

// Greedy independent set: pick a vertex not yet excluded, add it, exclude
// its closed neighborhood.  Every other independent set is at most
// max_degree(g) times larger.
MisResult greedy_mis(const Graph& g, PickPolicy policy);

// Same loop, additionally maintaining r = the largest number of vertices
// any single pick removed from play.  Every other independent set is at
// most r times larger — never worse than max_degree + 1, often better.
// Requires a non-empty vertex set; throws Error("EmptyGraph") otherwise.
MisResult greedy_mis_r(const Graph& g, PickPolicy policy);

// Basic invariant, conjuncts in order:
//   iv E S
//   X ⊆ V
//   ∀v₁ ∈ V − X. ∀v₂ ∈ S. {v₁, v₂} ∉ E
//   S ⊆ X
std::optional<std::string> check_inv_iv(const Graph& g, const MisState& s);

// Bookkeeping invariant on top of check_inv_iv, with the closure family P
// as explicit witness:
//   ⋃ P = X
//   ∀p ∈ P. ∃s ∈ V. p = {s} ∪ neighbors s
//   card P = card S
std::optional<std::string> check_inv_partition(const Graph& g, const MisState& s);

// r-variant invariant: check_inv_iv plus  card X ≤ card S * r.
std::optional<std::string> check_inv_r(const Graph& g, const MisState& s);

}  // namespace apx
