#include "apx/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

#include "apx/error.hpp"

namespace apx {

namespace {

void require_cap(long long have, long long cap, const std::string& what) {
  if (have > cap) {
    throw Error("TooLarge", what + " handles at most " + std::to_string(cap) +
                                ", got " + std::to_string(have));
  }
}

IdSet mask_to_set(const std::vector<Id>& ids, std::uint32_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mask & (1u << i)) out.insert(ids[i]);
  }
  return out;
}

}  // namespace

VcOptimum opt_vertex_cover(const Hypergraph& h, const OracleLimits& limits) {
  IdSet verts = vertices(h);
  require_cap(static_cast<long long>(verts.size()), limits.vc_vertices,
              "vertex cover oracle");
  std::vector<Id> ids(verts.begin(), verts.end());
  std::map<Id, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  std::vector<std::uint32_t> edge_masks;
  for (const IdSet& e : h.edges) {
    std::uint32_t m = 0;
    for (Id v : e) m |= 1u << index.at(v);
    edge_masks.push_back(m);
  }

  VcOptimum best;
  best.size = static_cast<long long>(ids.size()) + 1;  // beaten by any cover
  const std::uint32_t total = 1u << ids.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    long long size = std::popcount(mask);
    if (size > best.size) continue;
    bool covers_all = true;
    for (std::uint32_t em : edge_masks) {
      if ((em & mask) == 0) {
        covers_all = false;
        break;
      }
    }
    if (!covers_all) continue;
    IdSet candidate = mask_to_set(ids, mask);
    if (size < best.size || candidate < best.cover) {
      best.size = size;
      best.cover = std::move(candidate);
    }
  }
  return best;
}

MisOptimum opt_independent_set(const Graph& g, const OracleLimits& limits) {
  IdSet verts = vertices(g);
  require_cap(static_cast<long long>(verts.size()), limits.mis_vertices,
              "independent set oracle");
  std::vector<Id> ids(verts.begin(), verts.end());
  std::map<Id, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  std::vector<std::uint32_t> edge_masks;
  for (const IdSet& e : g.edges) {
    std::uint32_t m = 0;
    for (Id v : e) m |= 1u << index.at(v);
    edge_masks.push_back(m);
  }

  MisOptimum best;
  best.size = -1;
  const std::uint32_t total = 1u << ids.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    long long size = std::popcount(mask);
    if (size < best.size) continue;
    bool independent = true;
    for (std::uint32_t em : edge_masks) {
      if ((em & mask) == em) {  // whole edge inside the candidate
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    IdSet candidate = mask_to_set(ids, mask);
    if (size > best.size || candidate < best.independent) {
      best.size = size;
      best.independent = std::move(candidate);
    }
  }
  return best;
}

std::vector<long long> opt_prefix_makespans(const LoadInstance& inst,
                                            const OracleLimits& limits) {
  require_cap(inst.jobs(), limits.lb_jobs, "makespan oracle (jobs)");
  require_cap(inst.machines, limits.lb_machines, "makespan oracle (machines)");

  const int m = inst.machines;
  // All reachable machine-load multisets, canonicalized by sorting; exact
  // because no state is ever discarded.
  std::set<std::vector<long long>> states;
  states.insert(std::vector<long long>(m, 0));

  std::vector<long long> opt;
  opt.push_back(0);
  for (int j = 1; j <= inst.jobs(); ++j) {
    const long long t = inst.load_of(j);
    std::set<std::vector<long long>> next;
    for (const auto& st : states) {
      for (int x = 0; x < m; ++x) {
        if (x > 0 && st[x] == st[x - 1]) continue;  // symmetric placement
        std::vector<long long> ns = st;
        ns[x] += t;
        std::sort(ns.begin(), ns.end());
        next.insert(std::move(ns));
      }
    }
    states = std::move(next);
    long long best = std::numeric_limits<long long>::max();
    for (const auto& st : states) best = std::min(best, st.back());
    opt.push_back(best);
  }
  return opt;
}

long long opt_makespan(const LoadInstance& inst, int j,
                       const OracleLimits& limits) {
  if (j < 0 || j > inst.jobs()) {
    throw Error("InvariantError", "prefix length must satisfy 0 ≤ j ≤ n");
  }
  return opt_prefix_makespans(inst, limits)[static_cast<std::size_t>(j)];
}

namespace {

bool assign_up_to(const LoadInstance& inst, int j, long long target, int i,
                  std::vector<long long>& load, std::vector<int>& machine_of) {
  if (i == j) return true;
  const long long t = inst.load_of(i + 1);
  for (std::size_t x = 0; x < load.size(); ++x) {
    if (load[x] + t > target) continue;
    load[x] += t;
    machine_of[static_cast<std::size_t>(i)] = static_cast<int>(x) + 1;
    if (assign_up_to(inst, j, target, i + 1, load, machine_of)) return true;
    load[x] -= t;
  }
  return false;
}

}  // namespace

std::vector<int> opt_assignment(const LoadInstance& inst, int j,
                                const OracleLimits& limits) {
  const long long target = opt_makespan(inst, j, limits);
  std::vector<long long> load(static_cast<std::size_t>(inst.machines), 0);
  std::vector<int> machine_of(static_cast<std::size_t>(j), 0);
  assign_up_to(inst, j, target, 0, load, machine_of);  // target is reachable
  return machine_of;
}

CsOptimum opt_radius(const MetricInstance& inst, const OracleLimits& limits) {
  require_cap(inst.n, limits.cs_sites, "center selection oracle");

  // k-combinations of {1..n} in lexicographic order; the first subset
  // attaining the minimum is the lexicographically smallest witness.
  const int n = inst.n;
  const int k = inst.k;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;

  CsOptimum best;
  bool have = false;
  for (;;) {
    IdSet centers(pick.begin(), pick.end());
    Rat r = radius_of(inst, centers);
    if (!have || r < best.radius) {
      best.radius = r;
      best.centers = std::move(centers);
      have = true;
    }
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int a = i + 1; a < k; ++a) {
      pick[static_cast<std::size_t>(a)] = pick[static_cast<std::size_t>(a - 1)] + 1;
    }
  }
  return best;
}

namespace {

// Universe elements packed into 64-bit blocks for fast union tests.
struct ElementBits {
  std::size_t words = 0;
  std::map<Id, std::pair<std::size_t, std::uint64_t>> slot;

  explicit ElementBits(const IdSet& universe) {
    std::size_t i = 0;
    for (Id e : universe) {
      slot[e] = {i / 64, std::uint64_t{1} << (i % 64)};
      ++i;
    }
    words = (i + 63) / 64;
  }

  std::vector<std::uint64_t> none() const {
    return std::vector<std::uint64_t>(words, 0);
  }

  std::vector<std::uint64_t> of(const IdSet& s) const {
    auto out = none();
    for (Id e : s) {
      const auto& [word, bit] = slot.at(e);
      out[word] |= bit;
    }
    return out;
  }
};

bool bits_cover(const std::vector<std::uint64_t>& got,
                const std::vector<std::uint64_t>& want) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if ((got[i] & want[i]) != want[i]) return false;
  }
  return true;
}

}  // namespace

ScOptimum opt_set_cover(const SetCoverInstance& inst, const OracleLimits& limits) {
  require_cap(inst.m(), limits.sc_subsets, "set cover oracle");

  ElementBits bits(inst.universe);
  const auto full = bits.of(inst.universe);
  std::vector<std::vector<std::uint64_t>> subset_bits;
  for (int i = 1; i <= inst.m(); ++i) subset_bits.push_back(bits.of(inst.subset(i)));

  ScOptimum best;
  bool have = false;
  const std::uint32_t total = 1u << inst.m();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    auto covered = bits.none();
    Rat weight(0);
    for (int i = 0; i < inst.m(); ++i) {
      if (mask & (1u << i)) {
        for (std::size_t w = 0; w < covered.size(); ++w) {
          covered[w] |= subset_bits[static_cast<std::size_t>(i)][w];
        }
        weight += inst.weight(i + 1);
      }
    }
    if (!bits_cover(covered, full)) continue;
    IdSet chosen;
    for (int i = 0; i < inst.m(); ++i) {
      if (mask & (1u << i)) chosen.insert(i + 1);
    }
    if (!have || weight < best.weight ||
        (weight == best.weight && chosen < best.chosen)) {
      best.weight = weight;
      best.chosen = std::move(chosen);
      have = true;
    }
  }
  return best;  // always found: the full index set covers by construction
}

namespace {

struct ScSearch {
  const SetCoverInstance& inst;
  const ElementBits& bits;
  const std::vector<std::vector<std::uint64_t>>& subset_bits;
  const std::vector<std::vector<std::uint64_t>>& suffix_union;
  const std::vector<std::uint64_t>& full;
  ScOptimum best;
  bool have = false;

  void visit(int i, std::vector<std::uint64_t>& covered, Rat weight, IdSet& chosen) {
    if (have && best.weight < weight) return;  // bound
    if (bits_cover(covered, full)) {
      if (!have || weight < best.weight ||
          (weight == best.weight && chosen < best.chosen)) {
        best.weight = weight;
        best.chosen = chosen;
        have = true;
      }
      return;
    }
    if (i > inst.m()) return;
    // feasibility: the remaining subsets must be able to cover the gap
    for (std::size_t w = 0; w < full.size(); ++w) {
      std::uint64_t missing = full[w] & ~covered[w];
      if ((missing & suffix_union[static_cast<std::size_t>(i)][w]) != missing) return;
    }
    // include subset i
    auto with = covered;
    for (std::size_t w = 0; w < with.size(); ++w) {
      with[w] |= subset_bits[static_cast<std::size_t>(i - 1)][w];
    }
    chosen.insert(i);
    visit(i + 1, with, weight + inst.weight(i), chosen);
    chosen.erase(i);
    // exclude subset i
    visit(i + 1, covered, weight, chosen);
  }
};

}  // namespace

ScOptimum opt_set_cover_branch_bound(const SetCoverInstance& inst,
                                     const OracleLimits& limits) {
  require_cap(inst.m(), limits.sc_subsets, "set cover oracle");

  ElementBits bits(inst.universe);
  const auto full = bits.of(inst.universe);
  std::vector<std::vector<std::uint64_t>> subset_bits;
  for (int i = 1; i <= inst.m(); ++i) subset_bits.push_back(bits.of(inst.subset(i)));

  // suffix_union[i] = elements coverable by subsets i..m (1-based i)
  std::vector<std::vector<std::uint64_t>> suffix_union(
      static_cast<std::size_t>(inst.m()) + 2, bits.none());
  for (int i = inst.m(); i >= 1; --i) {
    auto u = suffix_union[static_cast<std::size_t>(i) + 1];
    for (std::size_t w = 0; w < u.size(); ++w) {
      u[w] |= subset_bits[static_cast<std::size_t>(i - 1)][w];
    }
    suffix_union[static_cast<std::size_t>(i)] = std::move(u);
  }

  ScSearch search{inst, bits, subset_bits, suffix_union, full, {}, false};
  auto covered = bits.none();
  IdSet chosen;
  search.visit(1, covered, Rat(0), chosen);
  return search.best;
}

BpOptimum opt_bins(const BinPackInstance& inst, const OracleLimits& limits) {
  require_cap(static_cast<long long>(inst.objects.size()), limits.bp_objects,
              "bin packing oracle");

  std::vector<Id> ids(inst.objects.begin(), inst.objects.end());
  const std::uint32_t total = 1u << ids.size();

  // mask weight via lowest-bit recurrence, then single-bin feasibility
  std::vector<Rat> mask_weight(total, Rat(0));
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    mask_weight[mask] =
        mask_weight[mask ^ low] +
        inst.weight_of(ids[static_cast<std::size_t>(std::countr_zero(low))]);
  }
  std::vector<char> feasible(total, 0);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    feasible[mask] = mask_weight[mask] <= inst.capacity ? 1 : 0;
  }

  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(total, inf);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (feasible[sub] && dp[mask ^ sub] + 1 < dp[mask]) {
        dp[mask] = dp[mask ^ sub] + 1;
      }
    }
  }

  // Witness: peel off the bin holding the smallest remaining object,
  // choosing the lexicographically smallest bin that still allows an
  // optimal completion.  The smallest-id bin sorts first in a Packing, so
  // this greedy choice is the lexicographically smallest optimal packing.
  BpOptimum best;
  best.bins = dp[total - 1];
  std::uint32_t mask = total - 1;
  while (mask != 0) {
    std::uint32_t low = mask & (~mask + 1);
    bool found = false;
    IdSet best_bin;
    std::uint32_t best_sub = 0;
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !feasible[sub]) continue;
      if (dp[mask ^ sub] + 1 != dp[mask]) continue;
      IdSet bin = mask_to_set(ids, sub);
      if (!found || bin < best_bin) {
        best_bin = std::move(bin);
        best_sub = sub;
        found = true;
      }
    }
    best.packing.insert(best_bin);
    mask ^= best_sub;
  }
  return best;
}

}  // namespace apx
