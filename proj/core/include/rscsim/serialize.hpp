#pragma once

#include <string>

#include "rscsim/freqplan.hpp"
#include "rscsim/matching_graph.hpp"

namespace rscsim {

/// JSON dumps of the core structures; schemas are documented in the README
/// and kept stable. All emitters produce deterministic, 2-space-indented
/// output.
std::string lattice_to_json(const RscLattice& lattice, const BusLayout& layout);
std::string schedule_to_json(const RoundSchedule& schedule);
std::string graph_to_json(const MatchingGraph& graph);
std::string events_to_json(const std::vector<DetectionEventSet>& shots);
std::string freqplan_to_json(const RscLattice& lattice, const FrequencyPlan& plan);

/// Parses a graph dumped by graph_to_json and finalizes it.
MatchingGraph graph_from_json(const std::string& text);
/// Parses one or many event sets dumped by events_to_json.
std::vector<DetectionEventSet> events_from_json(const std::string& text);

}  // namespace rscsim
