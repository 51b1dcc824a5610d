#pragma once

#include <cstdint>
#include <vector>

#include "rscsim/sim.hpp"

namespace rscsim {

enum class Weighting { LogLikelihood, Unit };

/// Edge of the decoding graph. Nodes are space-time detectors of one basis
/// plus a single virtual boundary node. The payload records whether the
/// underlying error chains cross the scored logical operator.
struct MatchingEdge {
  int u = 0;
  int v = 0;                 // may equal the boundary node id
  double probability = 0.0;  // merged firing probability of all mechanisms
  double weight = 0.0;
  std::int64_t iweight = 0;  // weight quantized to kWeightScale
  bool payload = false;
};

/// Weighted space-time graph over the detectors of one stabilizer basis.
/// Built from single-fault analysis: every elementary fault mechanism flips
/// at most two detectors of a basis and so maps onto one edge (or a boundary
/// edge when it flips one). After finalize(), shortest-path distances and
/// path payloads between all node pairs are memoized for shot decoding.
class MatchingGraph {
 public:
  static constexpr std::int64_t kWeightScale = std::int64_t{1} << 24;
  static constexpr std::int64_t kUnreachable = std::int64_t{1} << 53;

  Basis basis = Basis::Z;
  int rounds = 0;           // measured rounds
  int detector_rounds = 0;  // rounds + 1 detector layers (final ideal layer)
  std::vector<int> stab_of_slot;
  std::vector<int> slot_of_stab;
  std::vector<MatchingEdge> edges;
  int clamped_edges = 0;  // mechanisms with probability >= 1/2, weight forced to 0

  int num_slots() const { return static_cast<int>(stab_of_slot.size()); }
  int num_detectors() const { return num_slots() * detector_rounds; }
  int boundary() const { return num_detectors(); }

  int detector(int stabilizer, int round) const;

  /// Builds the memoized all-pairs shortest-path tables. Must be called once
  /// after the edge list is complete; the graph is immutable afterwards.
  void finalize();
  bool finalized() const { return finalized_; }

  std::int64_t dist_int(int a, int b) const { return idist_[a][b]; }
  double dist(int a, int b) const { return ddist_[a][b]; }
  bool path_payload(int a, int b) const { return payload_[a][b] != 0; }

 private:
  bool finalized_ = false;
  std::vector<std::vector<std::int64_t>> idist_;
  std::vector<std::vector<double>> ddist_;
  std::vector<std::vector<std::uint8_t>> payload_;
};

/// Derives the matching graph for one basis from the lattice, schedule and
/// noise model by exhaustive single-fault propagation, with edge
/// probabilities merged across fault mechanisms and weights
/// w = ln((1 - p) / p) (or unit weights on request).
MatchingGraph build_matching_graph(const RscLattice& lattice, const RoundSchedule& schedule,
                                   const NoiseModel& model, int rounds, Basis basis,
                                   Weighting weighting = Weighting::LogLikelihood);

}  // namespace rscsim
