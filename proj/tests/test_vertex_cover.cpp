#include <doctest.h>

#include <string>

#include "apx/error.hpp"
#include "apx/oracles.hpp"
#include "apx/vertex_cover.hpp"
#include "properties.hpp"

using namespace apx;

TEST_CASE("construction rejects malformed hypergraphs") {
  CHECK_THROWS_AS(make_hypergraph({{1, 2}}, 0), Error);
  CHECK_THROWS_AS(make_hypergraph({{}}, 2), Error);
  // Rank is an upper bound: an oversize edge names the violated assumption.
  try {
    make_hypergraph({{1, 2, 3}}, 2);
    FAIL("oversize edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "InvariantError");
    CHECK(std::string(e.what()).find("|e| ≤ k") != std::string::npos);
  }
  // Edges smaller than k are fine.
  CHECK_NOTHROW(make_hypergraph({{1, 2}, {3}}, 3));
}

TEST_CASE("two disjoint edges: greedy takes both, the optimum needs two vertices") {
  Hypergraph h = make_hypergraph({{1, 2}, {3, 4}}, 2);
  VcResult res = greedy_vc(h, PickPolicy::min_id());
  CHECK(res.cover == IdSet{1, 2, 3, 4});
  CHECK(is_vertex_cover(h, res.cover));

  VcOptimum opt = opt_vertex_cover(h);
  CHECK(opt.size == 2);
  CHECK(opt.cover == IdSet{1, 3});  // lexicographically smallest optimum
  CHECK(is_vertex_cover(h, opt.cover));
  // Ratio exactly k = 2 on this instance.
  CHECK(static_cast<long long>(res.cover.size()) == 2 * opt.size);
}

TEST_CASE("no edges: nothing to cover") {
  Hypergraph h = make_hypergraph({}, 2);
  CHECK(greedy_vc(h, PickPolicy::min_id()).cover.empty());
  CHECK(opt_vertex_cover(h).size == 0);
}

TEST_CASE("one rank-3 edge: greedy takes all three vertices, optimum one") {
  Hypergraph h = make_hypergraph({{1, 2, 3}}, 3);
  VcResult res = greedy_vc(h, PickPolicy::min_id());
  CHECK(res.cover == IdSet{1, 2, 3});
  VcOptimum opt = opt_vertex_cover(h);
  CHECK(opt.size == 1);
  CHECK(opt.cover == IdSet{1});
}

TEST_CASE("every greedy trace satisfies the loop invariant at every checkpoint") {
  Hypergraph h = make_hypergraph({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, 2);
  for (PickPolicy policy : {PickPolicy::min_id(), PickPolicy::seeded(5)}) {
    VcResult res = greedy_vc(h, policy);
    ReplayReport report =
        replay_check(res.trace, [&](const VcState& s) { return check_invar_vc(h, s); });
    INFO(report.first_violation().value_or("ok"));
    CHECK(report.all_ok());
    CHECK(is_vertex_cover(h, res.cover));
    CHECK(is_matching(res.trace.final_state().matching));
  }
}

TEST_CASE("the checker rejects a state whose untouched edges leak outside E") {
  Hypergraph h = make_hypergraph({{1, 2}}, 2);
  VcState s;
  s.cover = {1, 2};
  s.uncovered = {{3, 4}};  // not an edge of h
  s.matching = {{1, 2}};
  auto violated = check_invar_vc(h, s);
  REQUIRE(violated.has_value());
  CHECK(*violated == "F ⊆ E");
}

TEST_CASE("the checker localizes a broken matching and a broken bound") {
  Hypergraph h = make_hypergraph({{1, 2}, {2, 3}}, 2);
  VcState overlap;
  overlap.cover = {1, 2, 3};
  overlap.uncovered = {};
  overlap.matching = {{1, 2}, {2, 3}};  // shares vertex 2
  auto violated = check_invar_vc(h, overlap);
  REQUIRE(violated.has_value());
  CHECK(*violated == "matching M");

  VcState oversized;
  oversized.cover = {1, 2, 3};  // 3 > k * |M| = 2
  oversized.uncovered = {{2, 3}};
  oversized.matching = {{1, 2}};
  violated = check_invar_vc(h, oversized);
  REQUIRE(violated.has_value());
  CHECK(*violated == "card C ≤ k * card M");
}

TEST_CASE("matching-versus-cover bound holds exhaustively on random instances") {
  auto result = props::vc_matching_never_beats_cover(100, 202);
  INFO(result.summary());
  CHECK(result.ok());
  CHECK(result.cases >= 100);
}

TEST_CASE("one loop body applied to a random valid state keeps the invariant") {
  auto result = props::vc_loop_body_preserves_invariant(100, 203);
  INFO(result.summary());
  CHECK(result.ok());
}
