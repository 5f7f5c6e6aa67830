#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "apx/error.hpp"
#include "apx/generate.hpp"
#include "apx/instance_io.hpp"
#include "apx/oracles.hpp"

namespace apx::cli {

namespace {

using nlohmann::json;

PickPolicy parse_pick(const std::string& text) {
  if (text == "min") return PickPolicy::min_id();
  if (text.rfind("random:", 0) == 0) {
    const std::string seed = text.substr(7);
    if (!seed.empty() && seed.find_first_not_of("0123456789") == std::string::npos) {
      return PickPolicy::seeded(std::stoull(seed));
    }
  }
  throw Error("BadParams", "--pick expects min or random:SEED, got \"" + text + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("ParseError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ids_json(const IdSet& s) {
  json a = json::array();
  for (Id v : s) a.push_back(v);
  return a;
}

json family_json(const std::set<IdSet>& family) {
  json a = json::array();
  for (const IdSet& s : family) a.push_back(ids_json(s));
  return a;
}

template <class T>
const T& expect_kind(const Instance& inst, const std::string& problem) {
  const T* p = std::get_if<T>(&inst);
  if (!p) {
    throw Error("BadParams", "--problem " + problem + " cannot run on a \"" +
                                 kind_of(inst) + "\" instance");
  }
  return *p;
}

json replay_json(const ReplayReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    json e;
    e["where"] = p.where;
    e["violated"] = p.violated ? json(*p.violated) : json(nullptr);
    points.push_back(std::move(e));
  }
  return points;
}

// ---- per-problem trace serializers ----

json vc_state_json(const VcState& s) {
  json j;
  j["cover"] = ids_json(s.cover);
  j["uncovered"] = family_json(s.uncovered);
  j["matching"] = family_json(s.matching);
  if (s.picked) j["picked"] = ids_json(*s.picked);
  return j;
}

json mis_state_json(const MisState& s) {
  json j;
  j["chosen"] = ids_json(s.chosen);
  j["excluded"] = ids_json(s.excluded);
  j["closures"] = family_json(s.closures);
  j["growth_cap"] = s.growth_cap;
  return j;
}

json lb_state_json(const LbState& s) {
  json j;
  j["load"] = s.load;
  json on = json::array();
  for (const IdSet& a : s.jobs_on) on.push_back(ids_json(a));
  j["jobs_on"] = std::move(on);
  j["placed"] = s.placed;
  return j;
}

json cs_state_json(const CsState& s) {
  json j;
  j["centers"] = ids_json(s.centers);
  return j;
}

json sc_state_json(const ScState& s) {
  json j;
  j["chosen"] = ids_json(s.chosen);
  j["uncovered"] = ids_json(s.uncovered);
  json charge = json::object();
  for (const auto& [e, r] : s.charge) charge[std::to_string(e)] = rat_to_json(r);
  j["charge"] = std::move(charge);
  return j;
}

json bp_state_json(const BpState& s) {
  json j;
  j["closed_primary"] = family_json(s.closed_primary);
  j["closed_secondary"] = family_json(s.closed_secondary);
  j["open_primary"] = ids_json(s.open_primary);
  j["open_secondary"] = ids_json(s.open_secondary);
  j["pending"] = ids_json(s.pending);
  json overflow = json::array();
  for (const auto& [bin, u] : s.overflow) {
    json e;
    e["bin"] = ids_json(bin);
    e["object"] = u;
    overflow.push_back(std::move(e));
  }
  j["overflow"] = std::move(overflow);
  return j;
}

template <class State, class ToJson>
json trace_json(const Trace<State>& trace, ToJson&& to_json) {
  json a = json::array();
  a.push_back(to_json(trace.init));
  for (const State& s : trace.steps) a.push_back(to_json(s));
  return a;
}

// ---- subcommand payloads ----

struct SolveOptions {
  PickPolicy policy = PickPolicy::min_id();
  bool presort = false;
  bool variant_r = false;
  bool with_trace = false;
};

json solve_instance(const std::string& problem, const Instance& inst,
                    const SolveOptions& opt) {
  json out;
  out["problem"] = problem;
  if (problem == "vc") {
    const auto& h = expect_kind<Hypergraph>(inst, problem);
    auto res = greedy_vc(h, opt.policy);
    out["size"] = static_cast<long long>(res.cover.size());
    out["cover"] = ids_json(res.cover);
    out["matching"] = family_json(res.trace.final_state().matching);
    if (opt.with_trace) out["trace"] = trace_json(res.trace, vc_state_json);
  } else if (problem == "mis") {
    const auto& g = expect_kind<Graph>(inst, problem);
    auto res = opt.variant_r ? greedy_mis_r(g, opt.policy) : greedy_mis(g, opt.policy);
    out["size"] = static_cast<long long>(res.independent.size());
    out["independent"] = ids_json(res.independent);
    if (opt.variant_r) out["growth_cap"] = res.growth_cap;
    if (opt.with_trace) out["trace"] = trace_json(res.trace, mis_state_json);
  } else if (problem == "lb") {
    const auto& lb = expect_kind<LoadInstance>(inst, problem);
    auto res = greedy_balance(lb, opt.presort);
    out["makespan"] = makespan(res.final.load);
    json assignment = json::array();
    for (const IdSet& a : res.original_assignment()) assignment.push_back(ids_json(a));
    out["assignment"] = std::move(assignment);
    out["presort"] = opt.presort;
    if (opt.with_trace) out["trace"] = trace_json(res.trace, lb_state_json);
  } else if (problem == "cs") {
    const auto& m = expect_kind<MetricInstance>(inst, problem);
    auto res = greedy_centers(m, opt.policy);
    out["radius"] = rat_to_json(radius_of(m, res.centers));
    out["centers"] = ids_json(res.centers);
    if (opt.with_trace) out["trace"] = trace_json(res.trace, cs_state_json);
  } else if (problem == "sc") {
    const auto& sc = expect_kind<SetCoverInstance>(inst, problem);
    auto res = greedy_sc(sc);
    out["weight"] = rat_to_json(res.weight);
    out["chosen"] = ids_json(res.chosen);
    if (opt.with_trace) out["trace"] = trace_json(res.trace, sc_state_json);
  } else if (problem == "bp") {
    const auto& bp = expect_kind<BinPackInstance>(inst, problem);
    auto res = greedy_bp(bp, opt.policy);
    out["count"] = static_cast<long long>(res.packing.size());
    out["bins"] = family_json(res.packing);
    if (opt.with_trace) out["trace"] = trace_json(res.trace, bp_state_json);
  } else {
    throw Error("BadParams", "unknown problem \"" + problem + "\"");
  }
  return out;
}

json oracle_instance(const std::string& problem, const Instance& inst) {
  json out;
  out["problem"] = problem;
  json witness;
  if (problem == "vc") {
    const auto& h = expect_kind<Hypergraph>(inst, problem);
    auto o = opt_vertex_cover(h);
    out["optimum"] = o.size;
    witness["cover"] = ids_json(o.cover);
  } else if (problem == "mis") {
    const auto& g = expect_kind<Graph>(inst, problem);
    auto o = opt_independent_set(g);
    out["optimum"] = o.size;
    witness["independent"] = ids_json(o.independent);
  } else if (problem == "lb") {
    const auto& lb = expect_kind<LoadInstance>(inst, problem);
    out["optimum"] = opt_makespan(lb, lb.jobs());
    witness["machine_of_job"] = opt_assignment(lb, lb.jobs());
  } else if (problem == "cs") {
    const auto& m = expect_kind<MetricInstance>(inst, problem);
    auto o = opt_radius(m);
    out["optimum"] = rat_to_json(o.radius);
    witness["centers"] = ids_json(o.centers);
  } else if (problem == "sc") {
    const auto& sc = expect_kind<SetCoverInstance>(inst, problem);
    auto o = opt_set_cover(sc);
    out["optimum"] = rat_to_json(o.weight);
    witness["chosen"] = ids_json(o.chosen);
  } else if (problem == "bp") {
    const auto& bp = expect_kind<BinPackInstance>(inst, problem);
    auto o = opt_bins(bp);
    out["optimum"] = o.bins;
    witness["bins"] = family_json(o.packing);
  } else {
    throw Error("BadParams", "unknown problem \"" + problem + "\"");
  }
  out["witness"] = std::move(witness);
  return out;
}

json check_instance(const std::string& problem, const Instance& inst,
                    const SolveOptions& opt, bool& ok) {
  json out;
  out["problem"] = problem;
  ReplayReport report;
  if (problem == "vc") {
    const auto& h = expect_kind<Hypergraph>(inst, problem);
    auto res = greedy_vc(h, opt.policy);
    report = replay_check(res.trace,
                          [&](const VcState& s) { return check_invar_vc(h, s); });
  } else if (problem == "mis") {
    const auto& g = expect_kind<Graph>(inst, problem);
    auto res = opt.variant_r ? greedy_mis_r(g, opt.policy) : greedy_mis(g, opt.policy);
    report = replay_check(res.trace, [&](const MisState& s) {
      return opt.variant_r ? check_inv_r(g, s) : check_inv_partition(g, s);
    });
  } else if (problem == "lb") {
    const auto& lb = expect_kind<LoadInstance>(inst, problem);
    auto res = greedy_balance(lb, opt.presort);
    LoadInstance proc = processed_instance(lb, res.order);
    auto opts = opt_prefix_makespans(proc);
    report = replay_check(res.trace, [&](const LbState& s) {
      long long best = opts[static_cast<std::size_t>(s.placed)];
      return opt.presort ? check_inv2(proc, s, best) : check_inv1(proc, s, best);
    });
  } else if (problem == "cs") {
    const auto& m = expect_kind<MetricInstance>(inst, problem);
    auto res = greedy_centers(m, opt.policy);
    auto radii = all_subset_radii(m);
    report = replay_check(res.trace, [&](const CsState& s) {
      return check_invar_cs(m, s, radii);
    });
  } else if (problem == "sc") {
    const auto& sc = expect_kind<SetCoverInstance>(inst, problem);
    auto res = greedy_sc(sc);
    report = replay_check(res.trace,
                          [&](const ScState& s) { return check_inv_sc(sc, s); });
  } else if (problem == "bp") {
    const auto& bp = expect_kind<BinPackInstance>(inst, problem);
    auto res = greedy_bp(bp, opt.policy);
    report = replay_check(res.trace,
                          [&](const BpState& s) { return check_inv3(bp, s); });
  } else {
    throw Error("BadParams", "unknown problem \"" + problem + "\"");
  }
  ok = report.all_ok();
  out["ok"] = ok;
  out["points"] = replay_json(report);
  return out;
}

// Exact cross-multiplied bound check plus observed ratio for one trial.
struct RatioOutcome {
  bool ok = true;
  bool ratio_defined = false;
  Rat ratio;  // greedy/opt for minimization, opt/greedy for maximization
};

RatioOutcome ratio_trial(const std::string& problem, const Instance& inst,
                         const SolveOptions& opt) {
  RatioOutcome outcome;
  if (problem == "vc") {
    const auto& h = expect_kind<Hypergraph>(inst, problem);
    auto greedy = greedy_vc(h, opt.policy);
    auto best = opt_vertex_cover(h);
    long long g = static_cast<long long>(greedy.cover.size());
    outcome.ok = g <= h.k * best.size;
    if (best.size > 0) {
      outcome.ratio_defined = true;
      outcome.ratio = Rat(g, best.size);
    }
  } else if (problem == "mis") {
    const auto& gr = expect_kind<Graph>(inst, problem);
    auto greedy = opt.variant_r ? greedy_mis_r(gr, opt.policy) : greedy_mis(gr, opt.policy);
    auto best = opt_independent_set(gr);
    long long g = static_cast<long long>(greedy.independent.size());
    long long factor = opt.variant_r ? greedy.growth_cap : max_degree(gr);
    outcome.ok = best.size <= factor * g;
    if (g > 0) {
      outcome.ratio_defined = true;
      outcome.ratio = Rat(best.size, g);
    }
  } else if (problem == "lb") {
    const auto& lb = expect_kind<LoadInstance>(inst, problem);
    auto greedy = greedy_balance(lb, opt.presort);
    long long opt_val = opt_makespan(lb, lb.jobs());
    long long got = makespan(greedy.final.load);
    outcome.ok = opt.presort ? 2 * got <= 3 * opt_val : got <= 2 * opt_val;
    if (opt_val > 0) {
      outcome.ratio_defined = true;
      outcome.ratio = Rat(got, opt_val);
    }
  } else if (problem == "cs") {
    const auto& m = expect_kind<MetricInstance>(inst, problem);
    auto greedy = greedy_centers(m, opt.policy);
    Rat got = radius_of(m, greedy.centers);
    Rat best = opt_radius(m).radius;
    outcome.ok = got <= Rat(2) * best;
    if (Rat(0) < best) {
      outcome.ratio_defined = true;
      outcome.ratio = got / best;
    }
  } else if (problem == "sc") {
    const auto& sc = expect_kind<SetCoverInstance>(inst, problem);
    auto greedy = greedy_sc(sc);
    Rat best = opt_set_cover(sc).weight;
    outcome.ok = greedy.weight <= harmonic(max_subset_size(sc)) * best;
    if (Rat(0) < best) {
      outcome.ratio_defined = true;
      outcome.ratio = greedy.weight / best;
    }
  } else if (problem == "bp") {
    const auto& bp = expect_kind<BinPackInstance>(inst, problem);
    auto greedy = greedy_bp(bp, opt.policy);
    auto best = opt_bins(bp);
    long long g = static_cast<long long>(greedy.packing.size());
    outcome.ok = 2 * g <= 3 * best.bins;
    if (best.bins > 0) {
      outcome.ratio_defined = true;
      outcome.ratio = Rat(g, best.bins);
    }
  } else {
    throw Error("BadParams", "unknown problem \"" + problem + "\"");
  }
  return outcome;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"greedy approximation solvers with checkable run invariants"};
  app.require_subcommand(1);

  std::string problem;
  std::string input_path;
  std::string pick_text = "min";
  std::string output_path;
  bool presort = false;
  std::string variant;
  bool with_trace = false;
  GenParams gen_params;
  long long trials = 50;
  std::uint64_t seed0 = 0;

  const std::vector<std::string> problems = {"vc", "mis", "lb", "cs", "sc", "bp"};
  auto add_problem = [&](CLI::App* cmd) {
    cmd->add_option("--problem", problem, "one of vc|mis|lb|cs|sc|bp")
        ->required()
        ->check(CLI::IsMember(problems));
  };

  CLI::App* solve = app.add_subcommand("solve", "run a greedy solver");
  add_problem(solve);
  solve->add_option("--input", input_path, "instance JSON file")->required();
  solve->add_option("--pick", pick_text, "min or random:SEED");
  solve->add_flag("--presort", presort, "lb: sort jobs by descending load first");
  solve->add_option("--variant", variant, "mis: r for the growth-cap variant");
  solve->add_flag("--trace", with_trace, "include the loop trace in the output");

  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by brute force");
  add_problem(oracle);
  oracle->add_option("--input", input_path, "instance JSON file")->required();

  CLI::App* check = app.add_subcommand("check", "replay the loop invariant over a run");
  add_problem(check);
  check->add_option("--input", input_path, "instance JSON file")->required();
  check->add_option("--pick", pick_text, "min or random:SEED");
  check->add_flag("--presort", presort, "lb: sort jobs by descending load first");
  check->add_option("--variant", variant, "mis: r for the growth-cap variant");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  add_problem(gen);
  gen->add_option("--seed", gen_params.seed, "generator seed")->required();
  gen->add_option("--vertices", gen_params.vertices, "vc/mis: vertex count");
  gen->add_option("--edges", gen_params.edges, "vc/mis: edge count");
  gen->add_option("--k", gen_params.k, "vc: edge rank; cs: center count");
  gen->add_option("--machines", gen_params.machines, "lb: machine count");
  gen->add_option("--jobs", gen_params.jobs, "lb: job count");
  gen->add_option("--sites", gen_params.sites, "cs: site count");
  gen->add_option("--universe", gen_params.universe, "sc: universe size");
  gen->add_option("--subsets", gen_params.subsets, "sc: subset count");
  gen->add_option("--objects", gen_params.objects, "bp: object count");
  gen->add_option("-o,--output", output_path, "write to file instead of stdout");

  CLI::App* ratio = app.add_subcommand("ratio", "generate, solve, certify the bound");
  add_problem(ratio);
  ratio->add_option("--trials", trials, "number of seeded instances");
  ratio->add_option("--seed", seed0, "seed of the first trial");
  ratio->add_option("--pick", pick_text, "min or random:SEED");
  ratio->add_flag("--presort", presort, "lb: sort jobs by descending load first");
  ratio->add_option("--variant", variant, "mis: r for the growth-cap variant");

  std::vector<const char*> argv;
  argv.push_back("apx");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      CliResult r;
      r.out = app.help();
      return r;
    } catch (const CLI::ParseError& e) {
      std::cerr << e.what() << "\n";
      return {2, ""};
    }

    if (!variant.empty() && variant != "r") {
      throw Error("BadParams", "--variant only supports r");
    }

    SolveOptions opt;
    opt.policy = parse_pick(pick_text);
    opt.presort = presort;
    opt.variant_r = variant == "r";
    opt.with_trace = with_trace;

    CliResult result;
    if (solve->parsed()) {
      Instance inst = parse_instance(read_file(input_path));
      result.out = solve_instance(problem, inst, opt).dump() + "\n";
    } else if (oracle->parsed()) {
      Instance inst = parse_instance(read_file(input_path));
      result.out = oracle_instance(problem, inst).dump() + "\n";
    } else if (check->parsed()) {
      Instance inst = parse_instance(read_file(input_path));
      bool ok = false;
      result.out = check_instance(problem, inst, opt, ok).dump() + "\n";
      result.exit_code = ok ? 0 : 1;
    } else if (gen->parsed()) {
      gen_params.problem = problem;
      std::string text = serialize_instance(gen_instance(gen_params)) + "\n";
      if (output_path.empty()) {
        result.out = text;
      } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw Error("BadParams", "cannot write " + output_path);
        out << text;
      }
    } else if (ratio->parsed()) {
      if (trials < 1) throw Error("BadParams", "--trials must be positive");
      gen_params.problem = problem;
      long long violations = 0;
      bool have_worst = false;
      Rat worst(0);
      for (long long t = 0; t < trials; ++t) {
        gen_params.seed = seed0 + static_cast<std::uint64_t>(t);
        Instance inst = gen_instance(gen_params);
        RatioOutcome outcome = ratio_trial(problem, inst, opt);
        if (!outcome.ok) {
          ++violations;
          std::cerr << "bound violated on seed " << gen_params.seed << "\n";
        }
        if (outcome.ratio_defined && (!have_worst || worst < outcome.ratio)) {
          worst = outcome.ratio;
          have_worst = true;
        }
      }
      json out;
      out["problem"] = problem;
      out["trials"] = trials;
      out["violations"] = violations;
      out["worst_ratio"] = rat_to_json(worst);
      result.out = out.dump() + "\n";
      result.exit_code = violations == 0 ? 0 : 1;
    }
    return result;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return {2, ""};
  }
}

}  // namespace apx::cli
