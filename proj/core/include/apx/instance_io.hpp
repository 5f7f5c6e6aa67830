#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "apx/bin_packing.hpp"
#include "apx/center_selection.hpp"
#include "apx/independent_set.hpp"
#include "apx/load_balancing.hpp"
#include "apx/rational.hpp"
#include "apx/set_cover.hpp"
#include "apx/vertex_cover.hpp"

namespace apx {

// One self-describing value for any of the six instance kinds.  The JSON
// envelope carries a "kind" tag ("hypergraph", "graph", "loadbalancing",
// "metric", "setcover", "binpacking"), so files are self-dispatching.
using Instance = std::variant<Hypergraph, Graph, LoadInstance, MetricInstance,
                              SetCoverInstance, BinPackInstance>;

// The "kind" tag of an instance.
std::string kind_of(const Instance& inst);

// Rationals in JSON are either a bare integer or a "p/q" string.
Rat rat_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json rat_to_json(const Rat& r);  // "p" or "p/q" string

// Parses a JSON document into a validated instance.  Shape problems throw
// Error("ParseError") naming the JSON path; domain problems propagate the
// Error("InvariantError") of the instance constructor, naming the violated
// assumption.
Instance parse_instance(const std::string& text);
Instance instance_from_json(const nlohmann::json& j);

// Canonical JSON: object keys sorted, sets emitted in ascending order,
// rationals in lowest terms.  parse(serialize(x)) reproduces x exactly.
nlohmann::json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

}  // namespace apx
