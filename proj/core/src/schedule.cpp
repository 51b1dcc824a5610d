#include "rscsim/schedule.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace rscsim {

const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::PrepZ: return "prep_z";
    case GateKind::PrepX: return "prep_x";
    case GateKind::Cnot: return "cnot";
    case GateKind::MeasureZ: return "measure_z";
    case GateKind::MeasureX: return "measure_x";
    case GateKind::Idle: return "idle";
  }
  return "?";
}

namespace {

// Corner sweep per CNOT step, as (row, col) offsets from the face centre in
// doubled coordinates. North is towards smaller rows.
constexpr std::array<std::pair<int, int>, 4> kZSweep = {
    {{-1, +1}, {+1, +1}, {-1, -1}, {+1, -1}}};  // NE, SE, NW, SW
constexpr std::array<std::pair<int, int>, 4> kXSweep = {
    {{-1, +1}, {-1, -1}, {+1, +1}, {+1, -1}}};  // NE, NW, SE, SW

void fill_idles(TimeStep& step, int num_qubits) {
  std::vector<bool> busy(num_qubits, false);
  for (const GateOp& op : step.ops) {
    busy[op.q0] = true;
    if (op.q1 >= 0) busy[op.q1] = true;
  }
  for (int q = 0; q < num_qubits; ++q) {
    if (!busy[q]) step.ops.push_back({GateKind::Idle, q, -1, -1});
  }
}

}  // namespace

RoundSchedule build_round_schedule(const RscLattice& lattice) {
  RoundSchedule sched;
  sched.distance = lattice.distance;
  sched.num_qubits = lattice.num_qubits();
  if (lattice.distance == 1) return sched;  // nothing to extract

  sched.steps.resize(6);

  for (const Stabilizer& s : lattice.stabilizers) {
    const bool is_z = s.basis == Basis::Z;
    sched.steps[0].ops.push_back(
        {is_z ? GateKind::PrepZ : GateKind::PrepX, s.ancilla, -1, s.id});
    const auto& sweep = is_z ? kZSweep : kXSweep;
    for (int k = 0; k < 4; ++k) {
      const int r = (s.center_row2 + sweep[k].first) / 2;
      const int c = (s.center_col2 + sweep[k].second) / 2;
      const int q = lattice.data_index(r, c);
      if (q < 0) continue;  // boundary checks skip their missing corners
      // Z checks copy data onto the ancilla; X checks drive the data.
      if (is_z) {
        sched.steps[1 + k].ops.push_back({GateKind::Cnot, q, s.ancilla, s.id});
      } else {
        sched.steps[1 + k].ops.push_back({GateKind::Cnot, s.ancilla, q, s.id});
      }
    }
    sched.steps[5].ops.push_back(
        {is_z ? GateKind::MeasureZ : GateKind::MeasureX, s.ancilla, -1, s.id});
  }

  for (TimeStep& step : sched.steps) fill_idles(step, sched.num_qubits);
  return sched;
}

std::vector<FaultLocation> fault_locations(const RoundSchedule& schedule) {
  std::vector<FaultLocation> locs;
  for (std::size_t t = 0; t < schedule.steps.size(); ++t) {
    for (const GateOp& op : schedule.steps[t].ops) {
      FaultLocation loc;
      loc.index = static_cast<int>(locs.size());
      loc.time_step = static_cast<int>(t);
      loc.gate = op.kind;
      loc.q0 = op.q0;
      loc.q1 = op.q1;
      loc.stabilizer = op.stabilizer;
      switch (op.kind) {
        case GateKind::Cnot:
          loc.domain = FaultDomain::TwoQubit;
          break;
        case GateKind::MeasureZ:
        case GateKind::MeasureX:
          loc.domain = FaultDomain::MeasureFlip;
          break;
        default:
          loc.domain = FaultDomain::OneQubit;
          break;
      }
      locs.push_back(loc);
    }
  }
  return locs;
}

}  // namespace rscsim
