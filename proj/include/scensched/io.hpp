#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "scensched/balance.hpp"
#include "scensched/generators.hpp"
#include "scensched/model.hpp"

namespace scensched {

using Json = nlohmann::ordered_json;

/// Costs that fit 64 bits are numbers, larger ones decimal strings.
Json cost_to_json(Cost value);
Cost cost_from_json(const Json& value);

/// {"machines": m, "weights": [...], "scenarios": [[job ids], ...]} in input
/// job order.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);

/// {"assignment": [...]} in input job order.
Json schedule_to_json(const Instance& inst, const Schedule& sched);
Schedule schedule_from_json(const Instance& inst, const Json& doc);

Json matrix_to_json(const ScenarioMatrix& a);
ScenarioMatrix matrix_from_json(const Json& doc);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json disbalance_to_json(const DisbalanceReport& report);

/// FNV-1a over the compact input-order JSON of the instance.
std::uint64_t instance_hash(const Instance& inst);
std::string hex64(std::uint64_t value);

/// Reads a JSON file; ContractError on missing files or malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace scensched
