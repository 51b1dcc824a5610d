#pragma once

#include <span>

#include "rscsim/matching_graph.hpp"

namespace rscsim {

struct MatchedPair {
  int a = 0;
  int b = 0;  // equals graph.boundary() for a boundary assignment
};

/// Perfect matching of a defect set: disjoint defect pairs plus
/// defect-boundary pairs covering every defect, with the total shortest-path
/// weight and the XOR of the logical payloads along the matched paths.
struct Matching {
  std::vector<MatchedPair> pairs;
  std::int64_t total_weight_int = 0;
  double total_weight = 0.0;
  bool logical_parity = false;
};

/// Minimum-weight perfect matching of the defects over shortest-path
/// distances, with the boundary usable any number of times (modeled by one
/// zero-weight-interconnected clone per defect). Exact and deterministic.
Matching mwpm(const MatchingGraph& graph, std::span<const int> defects);

/// Exhaustive oracle over all pairings including boundary assignments.
/// Accepts at most 10 defects. Ties resolve to the lexicographically
/// smallest pairing in (node index) order.
Matching brute_force_mwpm(const MatchingGraph& graph, std::span<const int> defects);

/// Matches the detection events and returns the correction parity for the
/// graph's logical operator. Pure function of (graph, events).
bool decode(const MatchingGraph& graph, const DetectionEventSet& events);

/// The defect node ids of an event set on this graph.
std::vector<int> defect_nodes(const MatchingGraph& graph, const DetectionEventSet& events);

}  // namespace rscsim
