#include "rscsim/noise.hpp"

#include <stdexcept>

namespace rscsim {

const char* to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::CodeCapacity: return "code-capacity";
    case NoiseKind::Phenomenological: return "phenom";
    case NoiseKind::CircuitLevel: return "circuit";
  }
  return "?";
}

std::optional<NoiseKind> noise_kind_from_string(std::string_view name) {
  if (name == "code-capacity") return NoiseKind::CodeCapacity;
  if (name == "phenom") return NoiseKind::Phenomenological;
  if (name == "circuit") return NoiseKind::CircuitLevel;
  return std::nullopt;
}

namespace {
void check_rate(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}
}  // namespace

NoiseModel NoiseModel::code_capacity(double p) {
  check_rate(p, "p");
  return {NoiseKind::CodeCapacity, p, 0.0};
}

NoiseModel NoiseModel::phenomenological(double p, double q) {
  check_rate(p, "p");
  if (q < 0) q = p;
  check_rate(q, "q");
  return {NoiseKind::Phenomenological, p, q};
}

NoiseModel NoiseModel::circuit_level(double p) {
  check_rate(p, "p");
  return {NoiseKind::CircuitLevel, p, p};
}

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> presets = {
      {"single-qubit", 5e-4, "benchmarked single-qubit gate error"},
      {"dp-gate", 6e-3, "dynamical c-Phase two-qubit gate error"},
      {"cr-gate", 1.4e-2, "cross-resonance two-qubit gate error"},
      {"rip-gate", 2.3e-2, "resonator-induced phase gate error"},
  };
  return presets;
}

std::optional<double> preset_rate(std::string_view name) {
  for (const Preset& preset : preset_catalog()) {
    if (preset.name == name) return preset.p;
  }
  return std::nullopt;
}

void apply_fault_code_1q(PauliFrame& frame, int qubit, int code) {
  if (code & 1) frame.flip_x(qubit);
  if (code & 2) frame.flip_z(qubit);
}

void apply_fault_code_2q(PauliFrame& frame, int qubit0, int qubit1, int code) {
  apply_fault_code_1q(frame, qubit0, code & 3);
  apply_fault_code_1q(frame, qubit1, (code >> 2) & 3);
}

PauliFrame sample_code_capacity(const RscLattice& lattice, double p, RngStream& rng) {
  check_rate(p, "p");
  PauliFrame frame(lattice.num_data());
  for (int q = 0; q < lattice.num_data(); ++q) {
    if (rng.next_unit() < p) {
      apply_fault_code_1q(frame, q, 1 + static_cast<int>(rng.uniform_below(3)));
    }
  }
  return frame;
}

std::vector<SampledFault> sample_circuit_level(const std::vector<FaultLocation>& locations,
                                               double p, RngStream& rng) {
  check_rate(p, "p");
  std::vector<SampledFault> faults;
  for (const FaultLocation& loc : locations) {
    if (rng.next_unit() >= p) continue;
    int code = 1;
    switch (loc.domain) {
      case FaultDomain::OneQubit:
        code = 1 + static_cast<int>(rng.uniform_below(3));
        break;
      case FaultDomain::TwoQubit:
        code = 1 + static_cast<int>(rng.uniform_below(15));
        break;
      case FaultDomain::MeasureFlip:
        code = 1;
        break;
    }
    faults.push_back({loc.index, code});
  }
  return faults;
}

PhenomRound sample_phenomenological_round(const RscLattice& lattice, double p, double q,
                                          RngStream& rng) {
  check_rate(p, "p");
  check_rate(q, "q");
  PhenomRound round{PauliFrame(lattice.num_data()), {}};
  for (int qubit = 0; qubit < lattice.num_data(); ++qubit) {
    if (rng.next_unit() < p) {
      apply_fault_code_1q(round.data_faults, qubit, 1 + static_cast<int>(rng.uniform_below(3)));
    }
  }
  round.syndrome_flips.resize(lattice.num_stabilizers());
  for (int s = 0; s < lattice.num_stabilizers(); ++s) {
    round.syndrome_flips[s] = rng.next_unit() < q;
  }
  return round;
}

}  // namespace rscsim
