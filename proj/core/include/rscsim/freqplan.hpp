#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rscsim/lattice.hpp"
#include "rscsim/rng.hpp"

namespace rscsim {

/// Directed two-qubit gate on a shared bus. The cross-resonance drive is
/// applied to the control at the target's frequency, so the planner's
/// selectivity constraints follow the control/target roles.
struct GatePair {
  int control = 0;
  int target = 0;
};

/// Five-class frequency assignment over data and ancilla qubits.
///
/// Pattern: Z-check ancillas alternate classes 1/2 by lattice row, data
/// qubits alternate 3/4 by row, X-check ancillas take class 5. Z checks are
/// driven with the data qubit as control and X checks with the ancilla as
/// control; controls always sit strictly above their targets.
struct FrequencyPlan {
  int distance = 0;
  std::vector<int> qubit_class;        // qubit id -> class in 1..5
  std::array<double, 5> base_ghz{5.0, 5.1, 5.2, 5.3, 5.4};
  double anharmonicity_ghz = -0.346;
  std::vector<GatePair> gate_pairs;
};

FrequencyPlan assign_classes(const RscLattice& lattice, const BusLayout& layout);

/// Checks the plan's constraint set and returns one message per violation:
/// (K1) qubits sharing a bus carry distinct classes, (K2) every gate's
/// control class is strictly above its target class, (K3) the two Z-check
/// ancillas gated by a common data qubit carry distinct classes.
std::vector<std::string> validate_plan(const RscLattice& lattice, const BusLayout& layout,
                                       const FrequencyPlan& plan);

/// Qubit frequencies in GHz: class base plus Gaussian(0, sigma) disorder.
std::vector<double> sample_frequencies(const FrequencyPlan& plan, double sigma_mhz,
                                       RngStream& rng);

struct CouplingMap {
  std::vector<std::pair<int, int>> coupled;       // share a bus
  std::vector<std::pair<int, int>> next_nearest;  // share a coupled neighbour only
};

CouplingMap build_coupling_map(const BusLayout& layout, int num_qubits);

struct CollisionWindows {
  double w1_mhz = 17.0;  // degenerate 0-1 transitions of coupled pairs
  double w2_mhz = 4.0;   // 0-1 against a neighbour's 1-2 transition
  double w3_mhz = 4.0;   // two-photon 0-2 degeneracy
};

struct Collision {
  int qubit_a = 0;
  int qubit_b = 0;
  int condition = 0;  // 1, 2 or 3
  double detuning_mhz = 0.0;
};

/// Evaluates the collision conditions on one frequency sample. Condition 1
/// applies to coupled pairs; conditions 2 and 3 to coupled and next-nearest
/// pairs, in both orientations.
std::vector<Collision> detect_collisions(const FrequencyPlan& plan,
                                         const CouplingMap& coupling,
                                         const std::vector<double>& freqs_ghz,
                                         const CollisionWindows& windows = {});

struct CollisionYield {
  long samples = 0;
  long samples_with_collision = 0;
  double probability = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Monte-Carlo estimate of the probability that a disorder sample exhibits at
/// least one collision. Deterministic per seed at any thread count.
CollisionYield collision_yield(const FrequencyPlan& plan, const CouplingMap& coupling,
                               double sigma_mhz, long samples, std::uint64_t seed,
                               const CollisionWindows& windows = {}, int threads = 1);

/// Exhaustive search for a k-class assignment satisfying the constraint set
/// on the periodic unit tile (a 4x4-data-qubit cell with wraparound).
bool tile_colorable(int num_classes);

/// True when no 4-class assignment exists on the unit tile: the constraint
/// set needs five frequencies.
inline bool four_class_tile_unsat() { return !tile_colorable(4); }

}  // namespace rscsim
