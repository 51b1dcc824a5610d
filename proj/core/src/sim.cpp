#include "rscsim/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace rscsim {

BitVec ideal_syndromes(const RscLattice& lattice, const PauliFrame& data_frame) {
  BitVec syn(lattice.num_stabilizers());
  for (const Stabilizer& s : lattice.stabilizers) {
    int parity = 0;
    for (int q : s.support) {
      // Z checks flag X/Y content, X checks flag Z/Y content.
      parity ^= (s.basis == Basis::Z) ? data_frame.x(q) : data_frame.z(q);
    }
    if (parity) syn.set(s.id);
  }
  return syn;
}

namespace {

PauliFrame restrict_to_data(const PauliFrame& frame, int num_data) {
  PauliFrame out(num_data);
  for (int q = 0; q < num_data; ++q) {
    if (frame.x(q)) out.set_x(q);
    if (frame.z(q)) out.set_z(q);
  }
  return out;
}

BitVec readout_bits(const PauliFrame& data_frame, int num_data, Basis memory) {
  BitVec bits(num_data);
  for (int q = 0; q < num_data; ++q) {
    if (memory == Basis::Z ? data_frame.x(q) : data_frame.z(q)) bits.set(q);
  }
  return bits;
}

/// Walks the cycle once, applying faults by location index. Returns the
/// syndrome row measured in this cycle.
BitVec run_cycle(const RscLattice& lattice, const RoundSchedule& schedule,
                 PauliFrame& frame, const std::vector<SampledFault>& faults) {
  BitVec row(lattice.num_stabilizers());
  std::size_t cursor = 0;
  int location = 0;
  auto fault_code_here = [&]() -> int {
    int code = 0;
    if (cursor < faults.size() && faults[cursor].location == location) {
      code = faults[cursor].pauli_code;
      ++cursor;
    }
    ++location;
    return code;
  };
  for (const TimeStep& step : schedule.steps) {
    for (const GateOp& op : step.ops) {
      switch (op.kind) {
        case GateKind::PrepZ:
        case GateKind::PrepX: {
          frame.clear_qubit(op.q0);  // reset discards last cycle's residue
          if (int code = fault_code_here()) apply_fault_code_1q(frame, op.q0, code);
          break;
        }
        case GateKind::Cnot: {
          frame.apply_cnot(op.q0, op.q1);
          if (int code = fault_code_here()) {
            apply_fault_code_2q(frame, op.q0, op.q1, code);
          }
          break;
        }
        case GateKind::MeasureZ:
        case GateKind::MeasureX: {
          bool bit = op.kind == GateKind::MeasureZ ? frame.x(op.q0) : frame.z(op.q0);
          if (fault_code_here()) bit = !bit;  // classical readout flip
          if (bit) row.set(op.stabilizer);
          break;
        }
        case GateKind::Idle: {
          if (int code = fault_code_here()) apply_fault_code_1q(frame, op.q0, code);
          break;
        }
      }
    }
  }
  return row;
}

SyndromeHistory run_circuit_rounds(const RscLattice& lattice, const RoundSchedule& schedule,
                                   int rounds,
                                   const std::vector<std::vector<SampledFault>>& per_round,
                                   Basis memory) {
  SyndromeHistory hist;
  hist.distance = lattice.distance;
  hist.rounds = rounds;
  hist.memory_basis = memory;
  PauliFrame frame(lattice.num_qubits());
  for (int r = 0; r < rounds; ++r) {
    hist.round_syndromes.push_back(run_cycle(lattice, schedule, frame, per_round[r]));
  }
  hist.true_frame = restrict_to_data(frame, lattice.num_data());
  hist.final_data_readout = readout_bits(hist.true_frame, lattice.num_data(), memory);
  return hist;
}

}  // namespace

SyndromeHistory run_code_capacity_shot(const RscLattice& lattice, const PauliFrame& frame,
                                       Basis memory) {
  SyndromeHistory hist;
  hist.distance = lattice.distance;
  hist.rounds = 1;
  hist.memory_basis = memory;
  hist.round_syndromes.push_back(ideal_syndromes(lattice, frame));
  hist.true_frame = frame;
  hist.final_data_readout = readout_bits(frame, lattice.num_data(), memory);
  return hist;
}

SyndromeHistory run_phenom_shot(const RscLattice& lattice,
                                const std::vector<PhenomRound>& rounds_data,
                                Basis memory) {
  SyndromeHistory hist;
  hist.distance = lattice.distance;
  hist.rounds = static_cast<int>(rounds_data.size());
  hist.memory_basis = memory;
  PauliFrame frame(lattice.num_data());
  for (const PhenomRound& round : rounds_data) {
    frame *= round.data_faults;
    BitVec row = ideal_syndromes(lattice, frame);
    for (int s = 0; s < lattice.num_stabilizers(); ++s) {
      if (round.syndrome_flips[s]) row.flip(s);
    }
    hist.round_syndromes.push_back(std::move(row));
  }
  hist.true_frame = frame;
  hist.final_data_readout = readout_bits(frame, lattice.num_data(), memory);
  return hist;
}

SyndromeHistory run_circuit_shot(const RscLattice& lattice, const RoundSchedule& schedule,
                                 int rounds,
                                 const std::vector<InjectedCircuitFault>& faults,
                                 Basis memory) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  std::vector<std::vector<SampledFault>> per_round(rounds);
  for (const InjectedCircuitFault& f : faults) {
    if (f.round < 0 || f.round >= rounds) throw std::out_of_range("fault round out of range");
    per_round[f.round].push_back({f.location, f.pauli_code});
  }
  for (auto& list : per_round) {
    std::sort(list.begin(), list.end(),
              [](const SampledFault& a, const SampledFault& b) { return a.location < b.location; });
  }
  return run_circuit_rounds(lattice, schedule, rounds, per_round, memory);
}

SyndromeHistory run_memory(const RscLattice& lattice, const RoundSchedule& schedule,
                           const NoiseModel& model, int rounds, std::uint64_t seed,
                           std::uint64_t shot, Basis memory) {
  if (model.kind == NoiseKind::CircuitLevel && lattice.distance > 1) {
    return run_memory(lattice, schedule, fault_locations(schedule), model, rounds, seed,
                      shot, memory);
  }
  return run_memory(lattice, schedule, {}, model, rounds, seed, shot, memory);
}

SyndromeHistory run_memory(const RscLattice& lattice, const RoundSchedule& schedule,
                           const std::vector<FaultLocation>& locations,
                           const NoiseModel& model, int rounds, std::uint64_t seed,
                           std::uint64_t shot, Basis memory) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  RngStream rng{seed, shot, static_cast<std::uint64_t>(model.kind)};

  switch (model.kind) {
    case NoiseKind::CodeCapacity: {
      PauliFrame frame = sample_code_capacity(lattice, model.p, rng);
      return run_code_capacity_shot(lattice, frame, memory);
    }
    case NoiseKind::Phenomenological: {
      std::vector<PhenomRound> data;
      data.reserve(rounds);
      for (int r = 0; r < rounds; ++r) {
        data.push_back(sample_phenomenological_round(lattice, model.p, model.q, rng));
      }
      return run_phenom_shot(lattice, data, memory);
    }
    case NoiseKind::CircuitLevel: {
      if (lattice.distance == 1) {
        // Unencoded qubit idling through the six-step cycle each round.
        SyndromeHistory hist;
        hist.distance = 1;
        hist.rounds = rounds;
        hist.memory_basis = memory;
        PauliFrame frame(1);
        for (int r = 0; r < rounds; ++r) {
          for (int k = 0; k < 6; ++k) {
            if (rng.next_unit() < model.p) {
              apply_fault_code_1q(frame, 0, 1 + static_cast<int>(rng.uniform_below(3)));
            }
          }
          hist.round_syndromes.emplace_back(0);
        }
        hist.true_frame = frame;
        hist.final_data_readout = readout_bits(frame, 1, memory);
        return hist;
      }
      std::vector<std::vector<SampledFault>> per_round(rounds);
      for (int r = 0; r < rounds; ++r) {
        per_round[r] = sample_circuit_level(locations, model.p, rng);
      }
      return run_circuit_rounds(lattice, schedule, rounds, per_round, memory);
    }
  }
  throw std::logic_error("unknown noise kind");
}

DetectionEventSet extract_detection_events(const RscLattice& lattice,
                                           const SyndromeHistory& history) {
  DetectionEventSet events;
  events.basis = history.memory_basis;
  events.rounds = history.rounds;
  for (const Stabilizer& s : lattice.stabilizers) {
    if (s.basis != history.memory_basis) continue;
    bool prev = false;  // reference round: every syndrome starts at 0
    for (int t = 0; t < history.rounds; ++t) {
      const bool cur = history.round_syndromes[t].test(s.id);
      if (cur != prev) events.defects.push_back({s.id, t});
      prev = cur;
    }
    // Ideal closing round recomputed from the data readout.
    int final_parity = 0;
    for (int q : s.support) final_parity ^= history.final_data_readout.test(q);
    if (static_cast<bool>(final_parity) != prev) {
      events.defects.push_back({s.id, history.rounds});
    }
  }
  return events;
}

bool score_shot(const RscLattice& lattice, const SyndromeHistory& history,
                bool correction_parity) {
  const auto& chain =
      history.memory_basis == Basis::Z ? lattice.logical_z : lattice.logical_x;
  int flip = 0;
  for (int q : chain) {
    flip ^= history.memory_basis == Basis::Z ? history.true_frame.x(q)
                                             : history.true_frame.z(q);
  }
  return static_cast<bool>(flip) != correction_parity;
}

}  // namespace rscsim
