#include <doctest.h>

#include <vector>

#include "apx/error.hpp"
#include "apx/load_balancing.hpp"
#include "apx/oracles.hpp"
#include "properties.hpp"

using namespace apx;

TEST_CASE("construction rejects empty machine pools and non-positive loads") {
  CHECK_THROWS_AS(make_load_instance(0, {1}), Error);
  CHECK_THROWS_AS(make_load_instance(2, {3, 0}), Error);
  CHECK_THROWS_AS(make_load_instance(2, {-1}), Error);
  CHECK_NOTHROW(make_load_instance(1, {}));
}

TEST_CASE("two machines, loads 3,3,2: greedy and optimum meet at 5") {
  LoadInstance inst = make_load_instance(2, {3, 3, 2});
  LbResult res = greedy_balance(inst, false);
  CHECK(makespan(res.final.load) == 5);
  CHECK(res.final.jobs_on[0] == IdSet{1, 3});  // ties go to the first machine
  CHECK(res.final.jobs_on[1] == IdSet{2});

  std::vector<long long> opts = opt_prefix_makespans(inst);
  REQUIRE(opts.size() == 4);
  CHECK(opts[0] == 0);
  CHECK(opts[1] == 3);
  CHECK(opts[2] == 3);
  CHECK(opts[3] == 5);  // total 8 has no subset summing to 4
  CHECK(opt_makespan(inst, 3) == 5);
}

TEST_CASE("degenerate schedules: no jobs, or a single machine") {
  LoadInstance none = make_load_instance(3, {});
  CHECK(makespan(greedy_balance(none, false).final.load) == 0);
  CHECK(opt_makespan(none, 0) == 0);

  LoadInstance one = make_load_instance(1, {4, 5, 6});
  CHECK(makespan(greedy_balance(one, false).final.load) == 15);
  CHECK(opt_makespan(one, 3) == 15);
}

TEST_CASE("presorting recovers the optimum that plain greedy misses on 1,1,2") {
  LoadInstance inst = make_load_instance(2, {1, 1, 2});
  LbResult plain = greedy_balance(inst, false);
  CHECK(makespan(plain.final.load) == 3);
  LbResult sorted = greedy_balance(inst, true);
  CHECK(makespan(sorted.final.load) == 2);
  CHECK(opt_makespan(inst, 3) == 2);

  // The mapped-back assignment schedules every original job exactly once.
  std::vector<IdSet> assignment = sorted.original_assignment();
  IdSet all;
  for (const IdSet& a : assignment) all.insert(a.begin(), a.end());
  CHECK(all == id_range(1, 3));
}

TEST_CASE("traces satisfy the stage invariants against exact prefix optima") {
  LoadInstance inst = make_load_instance(3, {7, 3, 9, 2, 5, 4, 8});

  LbResult plain = greedy_balance(inst, false);
  LoadInstance plain_view = processed_instance(inst, plain.order);
  std::vector<long long> plain_opts = opt_prefix_makespans(plain_view);
  auto unsorted = replay_check(plain.trace, [&](const LbState& s) {
    return check_inv1(plain_view, s, plain_opts[static_cast<std::size_t>(s.placed)]);
  });
  INFO(unsorted.first_violation().value_or("ok"));
  CHECK(unsorted.all_ok());

  LbResult sorted = greedy_balance(inst, true);
  LoadInstance sorted_view = processed_instance(inst, sorted.order);
  REQUIRE(sorted_prefix(sorted_view, sorted_view.jobs()));
  std::vector<long long> sorted_opts = opt_prefix_makespans(sorted_view);
  auto descending = replay_check(sorted.trace, [&](const LbState& s) {
    return check_inv2(sorted_view, s, sorted_opts[static_cast<std::size_t>(s.placed)]);
  });
  INFO(descending.first_violation().value_or("ok"));
  CHECK(descending.all_ok());
}

TEST_CASE("the schedule checker localizes broken books") {
  LoadInstance inst = make_load_instance(2, {3, 4});
  LbState s = empty_schedule(inst);
  s = place_job(inst, s, 1, 1);
  s = place_job(inst, s, 2, 2);
  CHECK_FALSE(check_lb(inst, s).has_value());

  LbState duplicated = s;
  duplicated.jobs_on[1].insert(1);  // job 1 on both machines
  auto violated = check_lb(inst, duplicated);
  REQUIRE(violated.has_value());
  CHECK(*violated == "A pairwise disjoint");

  LbState wrong_sum = s;
  wrong_sum.load[0] = 99;
  violated = check_lb(inst, wrong_sum);
  REQUIRE(violated.has_value());
  CHECK(*violated == "∀x. ∑_{y ∈ A x} t y = T x");

  LbState gap = s;
  gap.placed = 3;  // claims a job that is nowhere
  violated = check_lb(inst, gap);
  REQUIRE(violated.has_value());
  CHECK(*violated == "⋃ A = {1..j}");
}

TEST_CASE("randomized schedule properties hold") {
  for (auto suite :
       {props::lb_any_machine_placement_keeps_schedule, props::lb_average_lower_bound,
        props::lb_max_job_lower_bound, props::lb_sorted_two_job_bound,
        props::lb_idle_machine_is_min_arg, props::lb_makespan_after_one_addition,
        props::lb_dropping_last_job_shrinks, props::lb_min_load_below_average}) {
    auto result = suite(100, 505);
    INFO(result.summary());
    CHECK(result.ok());
    CHECK(result.cases >= 100);
  }
}
