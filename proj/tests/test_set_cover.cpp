#include <doctest.h>

#include "apx/error.hpp"
#include "apx/oracles.hpp"
#include "apx/set_cover.hpp"
#include "properties.hpp"

using namespace apx;

namespace {
// Universe {1,2,3}; subsets {1,2}, {3}, {1,2,3}; weights 1, 1, 5/2.
SetCoverInstance reference_instance() {
  return make_set_cover_instance({1, 2, 3}, {{1, 2}, {3}, {1, 2, 3}},
                                 {Rat(1), Rat(1), Rat(5, 2)});
}
}  // namespace

TEST_CASE("construction enforces weights, containment, and coverage") {
  CHECK_THROWS_AS(make_set_cover_instance({1}, {}, {}), Error);
  CHECK_THROWS_AS(make_set_cover_instance({1}, {{1}}, {}), Error);
  CHECK_THROWS_AS(make_set_cover_instance({1}, {{1}}, {Rat(0)}), Error);
  CHECK_THROWS_AS(make_set_cover_instance({1}, {{1}, {2}}, {Rat(1), Rat(1)}), Error);
  CHECK_THROWS_AS(make_set_cover_instance({1, 2}, {{1}}, {Rat(1)}), Error);
  CHECK_NOTHROW(reference_instance());
}

TEST_CASE("reference instance: greedy picks the two cheap subsets") {
  SetCoverInstance inst = reference_instance();
  ScResult res = greedy_sc(inst);
  CHECK(res.chosen == IdSet{1, 2});
  CHECK(res.weight == Rat(2));
  CHECK(is_set_cover_of(inst, res.chosen, inst.universe));

  ScOptimum opt = opt_set_cover(inst);
  CHECK(opt.weight == Rat(2));
  CHECK(opt.chosen == IdSet{1, 2});

  // Guarantee on this instance: within H(3) = 11/6 of the optimum.
  CHECK(max_subset_size(inst) == 3);
  CHECK(res.weight <= harmonic(3) * opt.weight);
}

TEST_CASE("cost of a pick is weight per newly covered element") {
  SetCoverInstance inst = reference_instance();
  IdSet everything = inst.universe;
  CHECK(sc_cost(inst, everything, 1) == ScCost{false, Rat(1, 2)});
  CHECK(sc_cost(inst, everything, 2) == ScCost{false, Rat(1)});
  CHECK(sc_cost(inst, everything, 3) == ScCost{false, Rat(5, 6)});
  CHECK(min_arg_cover(inst, everything) == 1);

  IdSet only_three{3};
  CHECK(sc_cost(inst, only_three, 1) == ScCost::inf());
  CHECK(sc_cost(inst, only_three, 2) == ScCost{false, Rat(1)});
  CHECK(min_arg_cover(inst, only_three) == 2);
}

TEST_CASE("greedy traces satisfy the cost-witnessed invariant at every checkpoint") {
  SetCoverInstance inst = make_set_cover_instance(
      {1, 2, 3, 4, 5, 6},
      {{1, 2, 3}, {3, 4}, {4, 5, 6}, {1, 6}, {2, 5}},
      {Rat(3), Rat(1), Rat(5, 2), Rat(2), Rat(3, 2)});
  ScResult res = greedy_sc(inst);
  auto report = replay_check(
      res.trace, [&](const ScState& s) { return check_inv_sc(inst, s); });
  INFO(report.first_violation().value_or("ok"));
  CHECK(report.all_ok());
  CHECK(is_set_cover_of(inst, res.chosen, inst.universe));
}

TEST_CASE("the checker localizes inconsistent books") {
  SetCoverInstance inst = reference_instance();

  ScState foreign;
  foreign.chosen = {7};
  foreign.uncovered = inst.universe;
  auto violated = check_inv_sc(inst, foreign);
  REQUIRE(violated.has_value());
  CHECK(*violated == "C ⊆ {1..m}");

  ScState drifted;
  drifted.chosen = {2};
  drifted.uncovered = {1};  // claims 2 covered, but subset 2 only covers 3
  violated = check_inv_sc(inst, drifted);
  REQUIRE(violated.has_value());
  CHECK(*violated == "⋃ (S ` C) = U − R");

  ScState uncharged;
  uncharged.chosen = {2};
  uncharged.uncovered = {1, 2};
  uncharged.charge = {};  // picked weight 1 but charged nothing
  violated = check_inv_sc(inst, uncharged);
  REQUIRE(violated.has_value());
  CHECK(*violated == "W C = ∑_{s ∈ U − R} c s");
}

TEST_CASE("both oracle strategies agree, including on the witness") {
  SetCoverInstance inst = make_set_cover_instance(
      {1, 2, 3, 4, 5},
      {{1, 2}, {2, 3, 4}, {4, 5}, {1, 5}, {3}},
      {Rat(2), Rat(5, 2), Rat(2), Rat(3, 2), Rat(1)});
  ScOptimum a = opt_set_cover(inst);
  ScOptimum b = opt_set_cover_branch_bound(inst);
  CHECK(a.weight == b.weight);
  CHECK(a.chosen == b.chosen);
  CHECK(is_set_cover_of(inst, a.chosen, inst.universe));
}

TEST_CASE("randomized selector and ratio properties hold") {
  for (auto suite :
       {props::sc_best_pick_contract, props::sc_pick_adds_weight_exactly_once,
        props::sc_every_step_covers_something, props::sc_harmonic_tail_identity,
        props::sc_greedy_within_harmonic_of_optimum}) {
    auto result = suite(100, 707);
    INFO(result.summary());
    CHECK(result.ok());
    CHECK(result.cases >= 100);
  }
}
