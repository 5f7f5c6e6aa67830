#pragma once

#include <optional>
#include <string>
#include <vector>

namespace apx {

// A solver run, reified: the state right before the loop's first iteration
// and a full snapshot after every iteration.  Snapshots are plain value
// copies, so a trace can be replayed against an invariant long after the
// run, or mutated by tests to build counterexample states.
template <class State>
struct Trace {
  State init;
  std::vector<State> steps;

  const State& final_state() const { return steps.empty() ? init : steps.back(); }
};

// One Hoare-style checkpoint: where in the run, and which invariant
// conjunct failed there (std::nullopt = all conjuncts held).
struct ReplayPoint {
  std::string where;  // "init", "step 1", "step 2", ...
  std::optional<std::string> violated;
};

struct ReplayReport {
  std::vector<ReplayPoint> points;

  bool all_ok() const {
    for (const auto& p : points) {
      if (p.violated) return false;
    }
    return true;
  }

  // First failing checkpoint, formatted "where: conjunct".
  std::optional<std::string> first_violation() const {
    for (const auto& p : points) {
      if (p.violated) return p.where + ": " + *p.violated;
    }
    return std::nullopt;
  }
};

// Replays an invariant over every checkpoint of a trace.  `inv` maps a
// state to the first violated conjunct label, or std::nullopt when the
// state satisfies the invariant.  Violations are data, not errors: the
// report lists one verdict per checkpoint.
template <class State, class Inv>
ReplayReport replay_check(const Trace<State>& trace, Inv&& inv) {
  ReplayReport report;
  report.points.push_back({"init", inv(trace.init)});
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    report.points.push_back({"step " + std::to_string(i + 1), inv(trace.steps[i])});
  }
  return report;
}

}  // namespace apx
