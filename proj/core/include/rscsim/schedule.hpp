#pragma once

#include <vector>

#include "rscsim/lattice.hpp"

namespace rscsim {

enum class GateKind { PrepZ, PrepX, Cnot, MeasureZ, MeasureX, Idle };

const char* to_string(GateKind k);

struct GateOp {
  GateKind kind = GateKind::Idle;
  int q0 = -1;          // prepared/measured/idling qubit, or CNOT control
  int q1 = -1;          // CNOT target
  int stabilizer = -1;  // owning check for prep/CNOT/measure
};

struct TimeStep {
  std::vector<GateOp> ops;  // qubit-disjoint within the step
};

/// One syndrome-extraction cycle: ancilla preparation, four CNOT steps, and
/// ancilla measurement. Z checks contact their support in NE, SE, NW, SW
/// order and X checks in NE, NW, SE, SW order; the two sweeps are transposes
/// of each other, which keeps ancilla (hook) faults aligned perpendicular to
/// the logical operator they could otherwise shorten. Data qubits idle
/// explicitly in every step that does not gate them.
struct RoundSchedule {
  int distance = 0;
  int num_qubits = 0;
  std::vector<TimeStep> steps;  // six steps, or none for d = 1
};

RoundSchedule build_round_schedule(const RscLattice& lattice);

/// Fault-basis domain at one circuit location.
enum class FaultDomain {
  OneQubit,   // X, Y, Z each with probability p/3
  TwoQubit,   // the 15 nontrivial two-qubit Paulis, each p/15
  MeasureFlip // classical readout flip with probability p
};

struct FaultLocation {
  int index = 0;  // stable position in the enumeration
  int time_step = 0;
  GateKind gate = GateKind::Idle;
  int q0 = -1;
  int q1 = -1;
  int stabilizer = -1;
  FaultDomain domain = FaultDomain::OneQubit;

  int domain_size() const {
    switch (domain) {
      case FaultDomain::OneQubit: return 3;
      case FaultDomain::TwoQubit: return 15;
      case FaultDomain::MeasureFlip: return 1;
    }
    return 0;
  }
};

/// Complete, duplicate-free enumeration of every gate and idle location in
/// one cycle, in (time step, op) order.
std::vector<FaultLocation> fault_locations(const RoundSchedule& schedule);

}  // namespace rscsim
