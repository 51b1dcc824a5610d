#include "rscsim/sim.hpp"

#include <algorithm>

#include "doctest.h"

using namespace rscsim;

namespace {

int find_location(const std::vector<FaultLocation>& locs, GateKind kind, int q0,
                  int step = -1) {
  for (const FaultLocation& loc : locs) {
    if (loc.gate == kind && loc.q0 == q0 && (step < 0 || loc.time_step == step)) {
      return loc.index;
    }
  }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("noiseless runs are all-zero for every model") {
  for (int d : {1, 3, 5, 7}) {
    CAPTURE(d);
    const RscLattice lat = build_lattice(d);
    const RoundSchedule sched = build_round_schedule(lat);
    for (NoiseKind kind :
         {NoiseKind::CodeCapacity, NoiseKind::Phenomenological, NoiseKind::CircuitLevel}) {
      NoiseModel model{kind, 0.0, 0.0};
      for (int rounds : {1, 2, 5, 20}) {
        const SyndromeHistory hist = run_memory(lat, sched, model, rounds, 11, 22);
        for (const BitVec& row : hist.round_syndromes) CHECK(row.none());
        CHECK(hist.final_data_readout.none());
        CHECK(hist.true_frame.is_identity());
        CHECK(extract_detection_events(lat, hist).defects.empty());
      }
    }
  }
}

TEST_CASE("single bulk data X flips both adjacent Z checks from round 0 on") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const auto locs = fault_locations(sched);
  // Qubit 4 sits at (1,1); its Z faces are stabilizers 0 and 3.
  const int idle = find_location(locs, GateKind::Idle, 4, 0);
  const SyndromeHistory hist = run_circuit_shot(lat, sched, 3, {{0, idle, 1}});
  for (int t = 0; t < 3; ++t) {
    for (const Stabilizer& s : lat.stabilizers) {
      const bool expected = s.basis == Basis::Z && (s.id == 0 || s.id == 3);
      CHECK(hist.round_syndromes[t].test(s.id) == expected);
    }
  }
  // Two defects, both in the first round, on the two adjacent Z checks.
  const DetectionEventSet events = extract_detection_events(lat, hist);
  REQUIRE(events.defects.size() == 2);
  CHECK(events.defects[0] == DetectionEvent{0, 0});
  CHECK(events.defects[1] == DetectionEvent{3, 0});
}

TEST_CASE("boundary data X yields a single defect") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const auto locs = fault_locations(sched);
  // Corner qubit 0 touches only the Z face with id 0.
  const int idle = find_location(locs, GateKind::Idle, 0, 0);
  const SyndromeHistory hist = run_circuit_shot(lat, sched, 2, {{1, idle, 1}});
  const DetectionEventSet events = extract_detection_events(lat, hist);
  REQUIRE(events.defects.size() == 1);
  CHECK(events.defects[0] == DetectionEvent{0, 1});
}

TEST_CASE("single measurement flip disturbs exactly one round") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const auto locs = fault_locations(sched);
  const Stabilizer& s = lat.stabilizers[0];
  const int measure = find_location(
      locs, s.basis == Basis::Z ? GateKind::MeasureZ : GateKind::MeasureX, s.ancilla);
  const int t = 1;
  const SyndromeHistory hist = run_circuit_shot(lat, sched, 4, {{t, measure, 1}});
  for (int round = 0; round < 4; ++round) {
    for (int id = 0; id < lat.num_stabilizers(); ++id) {
      CHECK(hist.round_syndromes[round].test(id) == (round == t && id == s.id));
    }
  }
  CHECK(hist.true_frame.is_identity());

  const DetectionEventSet events = extract_detection_events(lat, hist);
  REQUIRE(events.defects.size() == 2);
  CHECK(events.defects[0] == DetectionEvent{s.id, t});
  CHECK(events.defects[1] == DetectionEvent{s.id, t + 1});
}

TEST_CASE("phenomenological q=1 gives time-like defect pairs and no data error") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const int rounds = 5;
  const SyndromeHistory hist =
      run_memory(lat, sched, NoiseModel::phenomenological(0.0, 1.0), rounds, 9, 1);
  for (const BitVec& row : hist.round_syndromes) {
    CHECK(row.count() == static_cast<std::size_t>(lat.num_stabilizers()));
  }
  CHECK(hist.true_frame.is_identity());
  const DetectionEventSet events = extract_detection_events(lat, hist);
  // Each memory-basis check fires at round 0 and closes at the ideal round.
  REQUIRE(events.defects.size() == static_cast<std::size_t>(lat.num_stabilizers()));
  for (const Stabilizer& s : lat.stabilizers) {
    if (s.basis != Basis::Z) continue;
    int count = 0;
    for (const DetectionEvent& ev : events.defects) {
      if (ev.stabilizer == s.id) {
        ++count;
        CHECK((ev.round == 0 || ev.round == rounds));
      }
    }
    CHECK(count == 2);
  }
}

TEST_CASE("scoring") {
  const RscLattice lat = build_lattice(3);

  SUBCASE("identity frame, zero correction") {
    const SyndromeHistory hist = run_code_capacity_shot(lat, PauliFrame(9));
    CHECK_FALSE(score_shot(lat, hist, false));
    CHECK(score_shot(lat, hist, true));  // a spurious correction is itself a failure
  }

  SUBCASE("a full logical X chain flips the Z memory") {
    PauliFrame frame(9);
    for (int q : lat.logical_x) frame.set_x(q);
    const SyndromeHistory hist = run_code_capacity_shot(lat, frame);
    CHECK(extract_detection_events(lat, hist).defects.empty());  // invisible to checks
    CHECK(score_shot(lat, hist, false));
  }

  SUBCASE("applied stabilizers never flip the memory") {
    for (const Stabilizer& s : lat.stabilizers) {
      PauliFrame frame(9);
      frame *= lat.stabilizer_operator(s.id);
      const SyndromeHistory hist = run_code_capacity_shot(lat, frame);
      CHECK(extract_detection_events(lat, hist).defects.empty());
      CHECK_FALSE(score_shot(lat, hist, false));
      CHECK_FALSE(score_shot(lat, run_code_capacity_shot(lat, frame, Basis::X), false));
    }
  }
}

TEST_CASE("syndrome linearity") {
  const RscLattice lat = build_lattice(5);
  RngStream rng{31337};
  for (int trial = 0; trial < 100; ++trial) {
    PauliFrame f1(lat.num_data()), f2(lat.num_data());
    for (int q = 0; q < lat.num_data(); ++q) {
      if (rng.next_u64() & 1) f1.flip_x(q);
      if (rng.next_u64() & 1) f1.flip_z(q);
      if (rng.next_u64() & 1) f2.flip_x(q);
      if (rng.next_u64() & 1) f2.flip_z(q);
    }
    BitVec lhs = ideal_syndromes(lat, f1 * f2);
    BitVec rhs = ideal_syndromes(lat, f1);
    rhs ^= ideal_syndromes(lat, f2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("memory basis selects the transposed experiment") {
  const RscLattice lat = build_lattice(3);
  PauliFrame frame(9);
  for (int q : lat.logical_z) frame.set_z(q);  // logical Z chain
  const SyndromeHistory z_mem = run_code_capacity_shot(lat, frame, Basis::Z);
  const SyndromeHistory x_mem = run_code_capacity_shot(lat, frame, Basis::X);
  CHECK_FALSE(score_shot(lat, z_mem, false));  // Z errors cannot flip the Z memory
  CHECK(score_shot(lat, x_mem, false));        // but they flip the X memory
}

TEST_CASE("shots are deterministic per (model, seed, shot)") {
  const RscLattice lat = build_lattice(5);
  const RoundSchedule sched = build_round_schedule(lat);
  const NoiseModel model = NoiseModel::circuit_level(0.01);
  const SyndromeHistory a = run_memory(lat, sched, model, 5, 123, 45);
  const SyndromeHistory b = run_memory(lat, sched, model, 5, 123, 45);
  CHECK(a.true_frame == b.true_frame);
  CHECK(a.final_data_readout == b.final_data_readout);
  for (int t = 0; t < 5; ++t) CHECK(a.round_syndromes[t] == b.round_syndromes[t]);

  const SyndromeHistory c = run_memory(lat, sched, model, 5, 123, 46);
  const bool same = a.true_frame == c.true_frame &&
                    a.final_data_readout == c.final_data_readout;
  CHECK_FALSE(same);
}
