#include "rscsim/serialize.hpp"

#include <nlohmann/json.hpp>

namespace rscsim {

using nlohmann::json;

std::string lattice_to_json(const RscLattice& lattice, const BusLayout& layout) {
  json j;
  j["distance"] = lattice.distance;
  j["data_qubits"] = json::array();
  for (int q = 0; q < lattice.num_data(); ++q) {
    j["data_qubits"].push_back(
        {{"id", q}, {"row", lattice.data_coords[q].row}, {"col", lattice.data_coords[q].col}});
  }
  j["stabilizers"] = json::array();
  for (const Stabilizer& s : lattice.stabilizers) {
    j["stabilizers"].push_back({{"id", s.id},
                                {"basis", to_string(s.basis)},
                                {"support", s.support},
                                {"ancilla", s.ancilla}});
  }
  j["logical_x"] = lattice.logical_x;
  j["logical_z"] = lattice.logical_z;
  j["boundaries"] = {{"x", {lattice.x_boundaries[0], lattice.x_boundaries[1]}},
                     {"z", {lattice.z_boundaries[0], lattice.z_boundaries[1]}}};
  j["buses"] = json::array();
  for (const Bus& bus : layout.buses) {
    j["buses"].push_back({{"id", bus.id},
                          {"data", bus.data},
                          {"ancillas", bus.ancillas},
                          {"interior", bus.interior}});
  }
  return j.dump(2) + "\n";
}

std::string schedule_to_json(const RoundSchedule& schedule) {
  json j;
  j["distance"] = schedule.distance;
  j["num_qubits"] = schedule.num_qubits;
  j["steps"] = json::array();
  for (const TimeStep& step : schedule.steps) {
    json ops = json::array();
    for (const GateOp& op : step.ops) {
      json o = {{"kind", to_string(op.kind)}, {"q0", op.q0}};
      if (op.q1 >= 0) o["q1"] = op.q1;
      if (op.stabilizer >= 0) o["stabilizer"] = op.stabilizer;
      ops.push_back(std::move(o));
    }
    j["steps"].push_back(std::move(ops));
  }
  json census = json::object();
  json locs = json::array();
  for (const FaultLocation& loc : fault_locations(schedule)) {
    json l = {{"index", loc.index},
              {"step", loc.time_step},
              {"kind", to_string(loc.gate)},
              {"faults", loc.domain_size()}};
    json qubits = json::array({loc.q0});
    if (loc.q1 >= 0) qubits.push_back(loc.q1);
    l["qubits"] = std::move(qubits);
    locs.push_back(std::move(l));
    const std::string key = to_string(loc.gate);
    census[key] = census.value(key, 0) + 1;
  }
  j["fault_locations"] = std::move(locs);
  j["fault_location_census"] = std::move(census);
  return j.dump(2) + "\n";
}

std::string graph_to_json(const MatchingGraph& graph) {
  json j;
  j["basis"] = to_string(graph.basis);
  j["rounds"] = graph.rounds;
  j["detector_rounds"] = graph.detector_rounds;
  j["stabilizers"] = graph.stab_of_slot;
  j["boundary"] = graph.boundary();
  j["edges"] = json::array();
  for (const MatchingEdge& e : graph.edges) {
    j["edges"].push_back({{"u", e.u},
                          {"v", e.v},
                          {"probability", e.probability},
                          {"weight", e.weight},
                          {"payload", e.payload}});
  }
  return j.dump(2) + "\n";
}

MatchingGraph graph_from_json(const std::string& text) {
  const json j = json::parse(text);
  MatchingGraph graph;
  const std::string basis = j.at("basis");
  graph.basis = basis == "Z" ? Basis::Z : Basis::X;
  graph.rounds = j.at("rounds");
  graph.detector_rounds = j.at("detector_rounds");
  graph.stab_of_slot = j.at("stabilizers").get<std::vector<int>>();
  int max_stab = -1;
  for (int s : graph.stab_of_slot) max_stab = std::max(max_stab, s);
  graph.slot_of_stab.assign(max_stab + 1, -1);
  for (std::size_t slot = 0; slot < graph.stab_of_slot.size(); ++slot) {
    graph.slot_of_stab[graph.stab_of_slot[slot]] = static_cast<int>(slot);
  }
  for (const json& e : j.at("edges")) {
    MatchingEdge edge;
    edge.u = e.at("u");
    edge.v = e.at("v");
    edge.probability = e.at("probability");
    edge.weight = e.at("weight");
    edge.payload = e.at("payload");
    edge.iweight =
        std::llround(edge.weight * static_cast<double>(MatchingGraph::kWeightScale));
    graph.edges.push_back(edge);
  }
  graph.finalize();
  return graph;
}

std::string events_to_json(const std::vector<DetectionEventSet>& shots) {
  json j;
  j["shots"] = json::array();
  for (std::size_t i = 0; i < shots.size(); ++i) {
    json defects = json::array();
    for (const DetectionEvent& ev : shots[i].defects) {
      defects.push_back({ev.stabilizer, ev.round});
    }
    j["shots"].push_back({{"shot", i},
                          {"basis", to_string(shots[i].basis)},
                          {"rounds", shots[i].rounds},
                          {"defects", std::move(defects)}});
  }
  return j.dump(2) + "\n";
}

std::vector<DetectionEventSet> events_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<DetectionEventSet> shots;
  for (const json& s : j.at("shots")) {
    DetectionEventSet set;
    const std::string basis = s.at("basis");
    set.basis = basis == "Z" ? Basis::Z : Basis::X;
    set.rounds = s.at("rounds");
    for (const json& d : s.at("defects")) {
      set.defects.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
    }
    shots.push_back(std::move(set));
  }
  return shots;
}

std::string freqplan_to_json(const RscLattice& lattice, const FrequencyPlan& plan) {
  json j;
  j["distance"] = plan.distance;
  j["base_ghz"] = plan.base_ghz;
  j["anharmonicity_ghz"] = plan.anharmonicity_ghz;
  j["classes"] = plan.qubit_class;
  json gates = json::array();
  for (const GatePair& g : plan.gate_pairs) {
    gates.push_back({{"control", g.control}, {"target", g.target}});
  }
  j["gate_pairs"] = std::move(gates);
  j["num_data"] = lattice.num_data();
  return j.dump(2) + "\n";
}

}  // namespace rscsim
