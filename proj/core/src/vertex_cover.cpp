#include "apx/vertex_cover.hpp"

#include "apx/error.hpp"

namespace apx {

Hypergraph make_hypergraph(EdgeSet edges, int k) {
  if (k < 1) {
    throw Error("InvariantError", "edge size bound k must be at least 1");
  }
  for (const IdSet& e : edges) {
    if (e.empty()) {
      throw Error("InvariantError", "edges must be non-empty");
    }
    if (static_cast<int>(e.size()) > k) {
      throw Error("InvariantError",
                  "|e| ≤ k: edge has " + std::to_string(e.size()) +
                      " vertices, k = " + std::to_string(k));
    }
  }
  return Hypergraph{std::move(edges), k};
}

IdSet vertices(const Hypergraph& h) { return union_all(h.edges); }

bool covers(const EdgeSet& edges, const IdSet& c) {
  for (const IdSet& e : edges) {
    if (!intersects(e, c)) return false;
  }
  return true;
}

bool is_vertex_cover(const Hypergraph& h, const IdSet& c) {
  return covers(h.edges, c);
}

bool is_matching(const EdgeSet& m) { return pairwise_disjoint(m); }

VcResult greedy_vc(const Hypergraph& h, PickPolicy policy) {
  VcState s;
  s.uncovered = h.edges;
  Trace<VcState> trace;
  trace.init = s;
  while (!s.uncovered.empty()) {
    IdSet e = policy.pick(s.uncovered);
    s.cover.insert(e.begin(), e.end());
    s.matching.insert(e);
    EdgeSet still;
    for (const IdSet& f : s.uncovered) {
      if (!intersects(f, e)) still.insert(f);
    }
    s.uncovered = std::move(still);
    s.picked = e;
    trace.steps.push_back(s);
  }
  return VcResult{s.cover, std::move(trace)};
}

std::optional<std::string> check_invar_vc(const Hypergraph& h, const VcState& s) {
  for (const IdSet& f : s.uncovered) {
    if (!h.edges.count(f)) return "F ⊆ E";
  }
  EdgeSet covered_part;
  for (const IdSet& e : h.edges) {
    if (!s.uncovered.count(e)) covered_part.insert(e);
  }
  if (!covers(covered_part, s.cover)) return "vc (E − F) C";
  if (s.cover.size() >
      static_cast<std::size_t>(h.k) * s.matching.size()) {
    return "card C ≤ k * card M";
  }
  if (!is_matching(s.matching)) return "matching M";
  for (const IdSet& e : s.matching) {
    if (!h.edges.count(e)) return "M ⊆ E";
  }
  for (const IdSet& e : s.matching) {
    for (const IdSet& f : s.uncovered) {
      if (intersects(e, f)) return "∀e ∈ M. ∀f ∈ F. e ∩ f = ∅";
    }
  }
  return std::nullopt;
}

}  // namespace apx
