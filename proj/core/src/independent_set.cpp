#include "apx/independent_set.hpp"

#include "apx/error.hpp"

namespace apx {

Graph make_graph(EdgeSet edges) {
  for (const IdSet& e : edges) {
    if (e.size() != 2) {
      throw Error("InvariantError", "graph edges must have exactly 2 distinct vertices");
    }
  }
  return Graph{std::move(edges)};
}

IdSet vertices(const Graph& g) { return union_all(g.edges); }

IdSet neighbors(const Graph& g, Id v) {
  IdSet out;
  for (const IdSet& e : g.edges) {
    if (e.count(v)) {
      for (Id u : e) {
        if (u != v) out.insert(u);
      }
    }
  }
  return out;
}

long long max_degree(const Graph& g) {
  long long deg = 0;
  for (Id v : vertices(g)) {
    deg = std::max(deg, static_cast<long long>(neighbors(g, v).size()));
  }
  return deg;
}

bool is_independent_set(const Graph& g, const IdSet& s) {
  if (!is_subset(s, vertices(g))) return false;
  for (Id v1 : s) {
    for (Id v2 : s) {
      if (g.edges.count(IdSet{v1, v2})) return false;
    }
  }
  return true;
}

namespace {

MisResult run_greedy(const Graph& g, PickPolicy policy, bool track_growth) {
  const IdSet all = vertices(g);
  MisState s;
  Trace<MisState> trace;
  trace.init = s;
  while (s.excluded != all) {
    Id x = policy.pick(set_minus(all, s.excluded));
    IdSet closure = set_union(neighbors(g, x), IdSet{x});
    if (track_growth) {
      long long added = static_cast<long long>(set_minus(closure, s.excluded).size());
      s.growth_cap = std::max(s.growth_cap, added);
    }
    s.chosen.insert(x);
    s.excluded.insert(closure.begin(), closure.end());
    s.closures.insert(closure);
    trace.steps.push_back(s);
  }
  return MisResult{s.chosen, s.growth_cap, std::move(trace)};
}

}  // namespace

MisResult greedy_mis(const Graph& g, PickPolicy policy) {
  return run_greedy(g, std::move(policy), false);
}

MisResult greedy_mis_r(const Graph& g, PickPolicy policy) {
  if (vertices(g).empty()) {
    throw Error("EmptyGraph", "the r-tracking variant needs at least one vertex");
  }
  return run_greedy(g, std::move(policy), true);
}

std::optional<std::string> check_inv_iv(const Graph& g, const MisState& s) {
  const IdSet all = vertices(g);
  if (!is_independent_set(g, s.chosen)) return "iv E S";
  if (!is_subset(s.excluded, all)) return "X ⊆ V";
  for (Id v1 : set_minus(all, s.excluded)) {
    for (Id v2 : s.chosen) {
      if (g.edges.count(IdSet{v1, v2})) {
        return "∀v₁ ∈ V − X. ∀v₂ ∈ S. {v₁, v₂} ∉ E";
      }
    }
  }
  if (!is_subset(s.chosen, s.excluded)) return "S ⊆ X";
  return std::nullopt;
}

std::optional<std::string> check_inv_partition(const Graph& g, const MisState& s) {
  if (auto base = check_inv_iv(g, s)) return base;
  if (union_all(s.closures) != s.excluded) return "⋃ P = X";
  const IdSet all = vertices(g);
  for (const IdSet& p : s.closures) {
    bool witnessed = false;
    for (Id v : all) {
      if (p == set_union(IdSet{v}, neighbors(g, v))) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return "∀p ∈ P. ∃s ∈ V. p = {s} ∪ neighbors s";
  }
  if (s.closures.size() != s.chosen.size()) return "card P = card S";
  return std::nullopt;
}

std::optional<std::string> check_inv_r(const Graph& g, const MisState& s) {
  if (auto base = check_inv_iv(g, s)) return base;
  if (static_cast<long long>(s.excluded.size()) >
      static_cast<long long>(s.chosen.size()) * s.growth_cap) {
    return "card X ≤ card S * r";
  }
  return std::nullopt;
}

}  // namespace apx
