#include "apx/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <utility>

#include "apx/error.hpp"

namespace apx {

namespace {

// All draws go through rng() % n: mt19937_64 output is fully specified by
// the standard, so instances are reproducible across platforms.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

int knob(int value, int fallback) { return value > 0 ? value : fallback; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("BadParams", what);
}

EdgeSet random_edges(std::mt19937_64& rng, int vertices, int edges, int min_size,
                     int max_size) {
  EdgeSet out;
  int attempts = edges * 30;
  while (static_cast<int>(out.size()) < edges && attempts-- > 0) {
    long long size = draw(rng, min_size, max_size);
    IdSet edge;
    while (static_cast<long long>(edge.size()) < size) {
      edge.insert(draw(rng, 1, vertices));
    }
    out.insert(std::move(edge));
  }
  return out;
}

Instance gen_vc(std::mt19937_64& rng, const GenParams& p) {
  int vertices = knob(p.vertices, 8);
  int edges = knob(p.edges, 10);
  require(vertices >= 2, "hypergraph generation needs at least 2 vertices");
  int k = p.k != 0 ? p.k : static_cast<int>(draw(rng, 2, 3));
  require(k >= 2, "hypergraph rank must be at least 2");
  EdgeSet e = random_edges(rng, vertices, edges, 2, std::min(k, vertices));
  return make_hypergraph(std::move(e), k);
}

Instance gen_mis(std::mt19937_64& rng, const GenParams& p) {
  int vertices = knob(p.vertices, 8);
  int edges = knob(p.edges, 10);
  require(vertices >= 2, "graph generation needs at least 2 vertices");
  EdgeSet e = random_edges(rng, vertices, edges, 2, 2);
  return make_graph(std::move(e));
}

Instance gen_lb(std::mt19937_64& rng, const GenParams& p) {
  int machines = p.machines != 0 ? p.machines : static_cast<int>(draw(rng, 2, 4));
  int jobs = knob(p.jobs, 8);
  require(machines >= 1, "load balancing needs at least one machine");
  require(jobs >= 1, "load balancing needs at least one job");
  std::vector<long long> loads;
  for (int i = 0; i < jobs; ++i) loads.push_back(draw(rng, 1, 20));
  return make_load_instance(machines, std::move(loads));
}

Instance gen_cs(std::mt19937_64& rng, const GenParams& p) {
  int sites = knob(p.sites, 6);
  require(sites >= 1, "center selection needs at least one site");
  // Distinct integer grid points; L1 distances form a metric by
  // construction (and duplicates are avoided so sites are genuinely
  // distinct, though the solver tolerates zero distances anyway).
  std::set<std::pair<long long, long long>> points;
  while (static_cast<int>(points.size()) < sites) {
    points.insert({draw(rng, 0, 50), draw(rng, 0, 50)});
  }
  std::vector<std::pair<long long, long long>> pts(points.begin(), points.end());
  std::vector<std::vector<Rat>> dist(static_cast<std::size_t>(sites));
  for (int a = 0; a < sites; ++a) {
    for (int b = 0; b < sites; ++b) {
      long long dx = pts[a].first - pts[b].first;
      long long dy = pts[a].second - pts[b].second;
      dist[static_cast<std::size_t>(a)].push_back(
          Rat(std::abs(dx) + std::abs(dy)));
    }
  }
  int k = p.k != 0 ? p.k : static_cast<int>(draw(rng, 1, std::min(3, sites)));
  require(1 <= k && k <= sites, "center count must satisfy 1 ≤ k ≤ n");
  return make_metric_instance(std::move(dist), k);
}

Instance gen_sc(std::mt19937_64& rng, const GenParams& p) {
  int universe_size = knob(p.universe, 8);
  int subsets = knob(p.subsets, 6);
  require(universe_size >= 1, "set cover needs a non-empty universe");
  require(subsets >= 1, "set cover needs at least one subset");
  IdSet universe = id_range(1, universe_size);
  std::vector<IdSet> family;
  for (int i = 0; i < subsets; ++i) {
    IdSet s;
    for (Id e : universe) {
      if (rng() % 3 == 0) s.insert(e);
    }
    if (s.empty()) s.insert(draw(rng, 1, universe_size));
    family.push_back(std::move(s));
  }
  IdSet covered = union_all(family);
  IdSet missing = set_minus(universe, covered);
  if (!missing.empty()) family.push_back(std::move(missing));  // patch coverage
  std::vector<Rat> weights;
  for (std::size_t i = 0; i < family.size(); ++i) {
    weights.emplace_back(draw(rng, 1, 8), draw(rng, 1, 3));
  }
  return make_set_cover_instance(std::move(universe), std::move(family),
                                 std::move(weights));
}

Instance gen_bp(std::mt19937_64& rng, const GenParams& p) {
  int objects = knob(p.objects, 8);
  require(objects >= 1, "bin packing needs at least one object");
  const Rat capacity(100);
  IdSet ids = id_range(1, objects);
  std::map<Id, Rat> weight;
  for (Id u : ids) {
    // Cluster around c/2 so small/large membership keeps flipping; the
    // occasional halves land exactly on the boundary w = c/2.
    long long num = draw(rng, 25, 75);
    long long den = rng() % 4 == 0 ? 2 : 1;
    weight.emplace(u, Rat(num, den));
  }
  return make_bin_pack_instance(ids, weight, capacity);
}

}  // namespace

Instance gen_instance(const GenParams& params) {
  require(!params.problem.empty(), "problem tag is required");
  std::mt19937_64 rng(params.seed);
  if (params.problem == "vc") return gen_vc(rng, params);
  if (params.problem == "mis") return gen_mis(rng, params);
  if (params.problem == "lb") return gen_lb(rng, params);
  if (params.problem == "cs") return gen_cs(rng, params);
  if (params.problem == "sc") return gen_sc(rng, params);
  if (params.problem == "bp") return gen_bp(rng, params);
  throw Error("BadParams", "unknown problem \"" + params.problem + "\"");
}

}  // namespace apx
