#include "apx/instance_io.hpp"

#include <cstdlib>

#include "apx/error.hpp"

namespace apx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error("ParseError", "at " + path + ": " + what);
}

const json& want_key(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

long long want_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

const json& want_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

IdSet ids_from_json(const json& j, const std::string& path) {
  IdSet out;
  const json& arr = want_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.insert(want_int(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json ids_to_json(const IdSet& s) {
  json arr = json::array();
  for (Id v : s) arr.push_back(v);
  return arr;
}

}  // namespace

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

json rat_to_json(const Rat& r) { return r.str(); }

std::string kind_of(const Instance& inst) {
  switch (inst.index()) {
    case 0: return "hypergraph";
    case 1: return "graph";
    case 2: return "loadbalancing";
    case 3: return "metric";
    case 4: return "setcover";
    default: return "binpacking";
  }
}

Instance instance_from_json(const json& j) {
  const json& kind_json = want_key(j, "kind", "$");
  if (!kind_json.is_string()) fail("$.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "hypergraph") {
    long long k = want_int(want_key(j, "k", "$"), "$.k");
    EdgeSet edges;
    const json& arr = want_array(want_key(j, "edges", "$"), "$.edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      edges.insert(ids_from_json(arr[i], "$.edges[" + std::to_string(i) + "]"));
    }
    return make_hypergraph(std::move(edges), static_cast<int>(k));
  }

  if (kind == "graph") {
    EdgeSet edges;
    const json& arr = want_array(want_key(j, "edges", "$"), "$.edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      edges.insert(ids_from_json(arr[i], "$.edges[" + std::to_string(i) + "]"));
    }
    return make_graph(std::move(edges));
  }

  if (kind == "loadbalancing") {
    long long machines = want_int(want_key(j, "machines", "$"), "$.machines");
    std::vector<long long> loads;
    const json& arr = want_array(want_key(j, "loads", "$"), "$.loads");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      loads.push_back(want_int(arr[i], "$.loads[" + std::to_string(i) + "]"));
    }
    return make_load_instance(static_cast<int>(machines), std::move(loads));
  }

  if (kind == "metric") {
    long long n = want_int(want_key(j, "n", "$"), "$.n");
    long long k = want_int(want_key(j, "k", "$"), "$.k");
    const json& rows = want_array(want_key(j, "dist", "$"), "$.dist");
    if (static_cast<long long>(rows.size()) != n) {
      fail("$.dist", "expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<Rat>> dist;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string row_path = "$.dist[" + std::to_string(r) + "]";
      const json& row = want_array(rows[r], row_path);
      std::vector<Rat> out_row;
      for (std::size_t c = 0; c < row.size(); ++c) {
        out_row.push_back(
            rat_from_json(row[c], row_path + "[" + std::to_string(c) + "]"));
      }
      dist.push_back(std::move(out_row));
    }
    return make_metric_instance(std::move(dist), static_cast<int>(k));
  }

  if (kind == "setcover") {
    IdSet universe = ids_from_json(want_key(j, "universe", "$"), "$.universe");
    std::vector<IdSet> subsets;
    const json& subs = want_array(want_key(j, "subsets", "$"), "$.subsets");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      subsets.push_back(
          ids_from_json(subs[i], "$.subsets[" + std::to_string(i) + "]"));
    }
    std::vector<Rat> weights;
    const json& ws = want_array(want_key(j, "weights", "$"), "$.weights");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      weights.push_back(rat_from_json(ws[i], "$.weights[" + std::to_string(i) + "]"));
    }
    return make_set_cover_instance(std::move(universe), std::move(subsets),
                                   std::move(weights));
  }

  if (kind == "binpacking") {
    Rat capacity = rat_from_json(want_key(j, "capacity", "$"), "$.capacity");
    const json& ws = want_key(j, "weights", "$");
    if (!ws.is_object()) fail("$.weights", "expected an object");
    IdSet objects;
    std::map<Id, Rat> weight;
    for (auto it = ws.begin(); it != ws.end(); ++it) {
      const std::string& key = it.key();
      char* end = nullptr;
      long long id = std::strtoll(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0') {
        fail("$.weights", "object key \"" + key + "\" is not an integer id");
      }
      objects.insert(id);
      weight.emplace(id, rat_from_json(it.value(), "$.weights[\"" + key + "\"]"));
    }
    return make_bin_pack_instance(objects, weight, capacity);
  }

  fail("$.kind", "unknown instance kind \"" + kind + "\"");
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
  return instance_from_json(j);
}

json instance_to_json(const Instance& inst) {
  json j;
  if (const auto* h = std::get_if<Hypergraph>(&inst)) {
    j["kind"] = "hypergraph";
    j["k"] = h->k;
    json edges = json::array();
    for (const IdSet& e : h->edges) edges.push_back(ids_to_json(e));
    j["edges"] = std::move(edges);
  } else if (const auto* g = std::get_if<Graph>(&inst)) {
    j["kind"] = "graph";
    json edges = json::array();
    for (const IdSet& e : g->edges) edges.push_back(ids_to_json(e));
    j["edges"] = std::move(edges);
  } else if (const auto* lb = std::get_if<LoadInstance>(&inst)) {
    j["kind"] = "loadbalancing";
    j["machines"] = lb->machines;
    j["loads"] = lb->loads;
  } else if (const auto* m = std::get_if<MetricInstance>(&inst)) {
    j["kind"] = "metric";
    j["n"] = m->n;
    j["k"] = m->k;
    json rows = json::array();
    for (const auto& row : m->dist) {
      json out_row = json::array();
      for (const Rat& r : row) out_row.push_back(rat_to_json(r));
      rows.push_back(std::move(out_row));
    }
    j["dist"] = std::move(rows);
  } else if (const auto* sc = std::get_if<SetCoverInstance>(&inst)) {
    j["kind"] = "setcover";
    j["universe"] = ids_to_json(sc->universe);
    json subsets = json::array();
    for (const IdSet& s : sc->subsets) subsets.push_back(ids_to_json(s));
    j["subsets"] = std::move(subsets);
    json weights = json::array();
    for (const Rat& w : sc->weights) weights.push_back(rat_to_json(w));
    j["weights"] = std::move(weights);
  } else {
    const auto& bp = std::get<BinPackInstance>(inst);
    j["kind"] = "binpacking";
    j["capacity"] = rat_to_json(bp.capacity);
    json weights = json::object();
    for (const auto& [id, w] : bp.weight) {
      weights[std::to_string(id)] = rat_to_json(w);
    }
    j["weights"] = std::move(weights);
  }
  return j;
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump();
}

}  // namespace apx
