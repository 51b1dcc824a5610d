#pragma once

#include <cstdint>
#include <vector>

#include "rscsim/noise.hpp"

namespace rscsim {

/// Everything one memory shot produces. Syndrome rows hold the measured
/// values of all d^2-1 checks per round; the data readout and the true frame
/// are error bits relative to the noiseless reference state. The true frame
/// exists for scoring only and is never shown to the decoder.
struct SyndromeHistory {
  int distance = 0;
  int rounds = 0;
  Basis memory_basis = Basis::Z;
  std::vector<BitVec> round_syndromes;  // rounds x num_stabilizers
  BitVec final_data_readout;            // d^2 bits in the memory basis
  PauliFrame true_frame;                // over the data qubits
};

struct DetectionEvent {
  int stabilizer = 0;
  int round = 0;  // 0..rounds; round `rounds` is the ideal layer from the readout
  friend bool operator==(const DetectionEvent&, const DetectionEvent&) = default;
};

struct DetectionEventSet {
  Basis basis = Basis::Z;
  int rounds = 0;
  std::vector<DetectionEvent> defects;
};

/// A fault forced into a specific cycle of a circuit-level run.
struct InjectedCircuitFault {
  int round = 0;
  int location = 0;  // index into fault_locations(schedule)
  int pauli_code = 0;
};

/// Measured syndrome values of every check for a static data frame.
BitVec ideal_syndromes(const RscLattice& lattice, const PauliFrame& data_frame);

/// Runs `rounds` noisy extraction cycles followed by an ideal data readout.
/// The memory basis fixes which logical operator the shot is scored against
/// (Z stores logical |0>). Deterministic given (model, seed, shot).
///
/// Code-capacity noise is a single perfectly measured round regardless of
/// `rounds`. A distance-1 "code" under circuit noise idles its lone qubit
/// through the six-step cycle each round.
SyndromeHistory run_memory(const RscLattice& lattice, const RoundSchedule& schedule,
                           const NoiseModel& model, int rounds, std::uint64_t seed,
                           std::uint64_t shot, Basis memory_basis = Basis::Z);

/// Same, with the fault-location census precomputed by the caller. The hot
/// path for Monte-Carlo loops.
SyndromeHistory run_memory(const RscLattice& lattice, const RoundSchedule& schedule,
                           const std::vector<FaultLocation>& locations,
                           const NoiseModel& model, int rounds, std::uint64_t seed,
                           std::uint64_t shot, Basis memory_basis = Basis::Z);

/// Circuit-level run with an explicit fault list and no background noise.
SyndromeHistory run_circuit_shot(const RscLattice& lattice, const RoundSchedule& schedule,
                                 int rounds,
                                 const std::vector<InjectedCircuitFault>& faults,
                                 Basis memory_basis = Basis::Z);

/// Phenomenological run from explicit per-round fault data.
SyndromeHistory run_phenom_shot(const RscLattice& lattice,
                                const std::vector<PhenomRound>& rounds_data,
                                Basis memory_basis = Basis::Z);

/// Single perfectly measured round over a static data frame.
SyndromeHistory run_code_capacity_shot(const RscLattice& lattice, const PauliFrame& frame,
                                       Basis memory_basis = Basis::Z);

/// Space-time defects for the memory-basis detector set: a defect wherever a
/// syndrome bit changes between consecutive rounds, with round 0 compared
/// against the reference value and a final ideal round appended from the data
/// readout.
DetectionEventSet extract_detection_events(const RscLattice& lattice,
                                           const SyndromeHistory& history);

/// Logical failure: the true frame flips the memory logical operator XOR the
/// decoder said it does.
bool score_shot(const RscLattice& lattice, const SyndromeHistory& history,
                bool correction_parity);

}  // namespace rscsim
