#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rscsim/lattice.hpp"
#include "rscsim/rng.hpp"
#include "rscsim/schedule.hpp"

namespace rscsim {

enum class NoiseKind { CodeCapacity, Phenomenological, CircuitLevel };

const char* to_string(NoiseKind k);
std::optional<NoiseKind> noise_kind_from_string(std::string_view name);

/// Error model parameterized by a single physical rate p (plus syndrome flip
/// rate q for the phenomenological model). Circuit-level noise applies p at
/// every fault location: single-qubit depolarizing (X, Y, Z each p/3),
/// two-qubit depolarizing (each of the 15 with p/15), and measurement flips
/// with p.
struct NoiseModel {
  NoiseKind kind = NoiseKind::CircuitLevel;
  double p = 0.0;
  double q = 0.0;

  static NoiseModel code_capacity(double p);
  /// q < 0 selects the conventional default q = p.
  static NoiseModel phenomenological(double p, double q = -1.0);
  static NoiseModel circuit_level(double p);
};

struct Preset {
  std::string name;
  double p;
  std::string note;
};

/// Named presets taken from reported gate-error figures.
const std::vector<Preset>& preset_catalog();
std::optional<double> preset_rate(std::string_view name);

/// Pauli fault code packing. Single-qubit: bit0 = X, bit1 = Z (1 = X, 2 = Z,
/// 3 = Y). Two-qubit: low two bits act on the first qubit, high two bits on
/// the second; codes 1..15. Measurement: 1 = flip.
struct SampledFault {
  int location = 0;
  int pauli_code = 0;
};

/// I.i.d. data-qubit depolarizing channel: with probability p, a uniformly
/// random X/Y/Z on each data qubit.
PauliFrame sample_code_capacity(const RscLattice& lattice, double p, RngStream& rng);

/// Independent sampling at every fault location of one cycle, in location
/// order. Faulted locations only are returned.
std::vector<SampledFault> sample_circuit_level(const std::vector<FaultLocation>& locations,
                                               double p, RngStream& rng);

struct PhenomRound {
  PauliFrame data_faults;           // over the d^2 data qubits
  std::vector<bool> syndrome_flips; // one per stabilizer
};

/// One phenomenological round: data depolarizing at p plus an independent
/// syndrome-bit flip at q per stabilizer.
PhenomRound sample_phenomenological_round(const RscLattice& lattice, double p, double q,
                                          RngStream& rng);

/// Applies a coded fault to the frame (see SampledFault for the packing).
void apply_fault_code_1q(PauliFrame& frame, int qubit, int code);
void apply_fault_code_2q(PauliFrame& frame, int qubit0, int qubit1, int code);

}  // namespace rscsim
