#include "scensched/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scensched/error.hpp"

namespace scensched {

Json cost_to_json(Cost value) {
  if (fits_int64(value)) return static_cast<std::int64_t>(value);
  return to_string(value);
}

Cost cost_from_json(const Json& value) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_string()) {
    if (auto parsed = parse_cost(value.get<std::string>())) return *parsed;
  }
  throw ContractError("expected an integer cost, got " + value.dump());
}

Json instance_to_json(const Instance& inst) {
  std::vector<Weight> weights(inst.job_count());
  for (int j = 0; j < inst.job_count(); ++j) weights[inst.original_order()[j]] = inst.weight(j);
  Json scenarios = Json::array();
  for (int k = 0; k < inst.scenario_count(); ++k) {
    std::vector<int> ids;
    for (int j : inst.scenario_jobs(k)) ids.push_back(inst.original_order()[j]);
    std::sort(ids.begin(), ids.end());
    scenarios.push_back(ids);
  }
  Json doc;
  doc["machines"] = inst.machines();
  doc["weights"] = weights;
  doc["scenarios"] = std::move(scenarios);
  return doc;
}

Instance instance_from_json(const Json& doc) {
  try {
    return Instance::create(doc.at("machines").get<int>(), doc.at("weights").get<std::vector<Weight>>(),
                            doc.at("scenarios").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed instance: ") + e.what());
  }
}

Json schedule_to_json(const Instance& inst, const Schedule& sched) {
  Json doc;
  doc["assignment"] = to_input_order(inst, sched);
  return doc;
}

Schedule schedule_from_json(const Instance& inst, const Json& doc) {
  try {
    const auto assignment = doc.at("assignment").get<std::vector<int>>();
    return from_input_order(inst, assignment);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed schedule: ") + e.what());
  }
}

Json matrix_to_json(const ScenarioMatrix& a) {
  Json doc;
  doc["rows"] = a.rows;
  doc["columns"] = a.columns;
  doc["column_sum"] = a.column_sum ? Json(*a.column_sum) : Json(nullptr);
  return doc;
}

ScenarioMatrix matrix_from_json(const Json& doc) {
  try {
    return make_matrix(doc.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed matrix: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  Json doc;
  doc["vertices"] = g.vertices;
  doc["edges"] = std::move(edges);
  return doc;
}

Graph graph_from_json(const Json& doc) {
  try {
    Graph g;
    g.vertices = doc.at("vertices").get<int>();
    for (const auto& e : doc.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    validate(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed graph: ") + e.what());
  }
}

Json disbalance_to_json(const DisbalanceReport& report) {
  Json doc;
  doc["final_dk"] = report.final_dk;
  doc["full_fk"] = report.full_fk;
  doc["final_d"] = report.final_d;
  doc["full_f"] = report.full_f;
  return doc;
}

std::uint64_t instance_hash(const Instance& inst) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : instance_to_json(inst).dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError("cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write " + path);
  out << text;
}

}  // namespace scensched
