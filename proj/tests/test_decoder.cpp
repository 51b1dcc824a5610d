#include "rscsim/decoder.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "rscsim/blossom.hpp"

using namespace rscsim;

namespace {

/// Exhaustive minimum over all perfect matchings of a small complete graph.
std::int64_t exhaustive_min_matching(const std::vector<std::vector<std::int64_t>>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> partner(n, -1);
  std::int64_t best = -1;
  auto rec = [&](auto&& self, std::int64_t acc) -> void {
    int i = 0;
    while (i < n && partner[i] != -1) ++i;
    if (i == n) {
      if (best < 0 || acc < best) best = acc;
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      self(self, acc + w[i][j]);
      partner[i] = partner[j] = -1;
    }
  };
  rec(rec, 0);
  return best;
}

MatchingGraph hand_graph() {
  // A seven-detector chain with boundary stubs at both ends:
  //   B -2- 0 -2- 1 -3- 2 -1- 3 -4- 4 -2- 5 -3- 6 -1- B
  // The 2-3 edge carries the logical payload.
  MatchingGraph g;
  g.basis = Basis::Z;
  g.rounds = 1;
  g.detector_rounds = 1;
  g.stab_of_slot = {0, 1, 2, 3, 4, 5, 6};
  g.slot_of_stab = {0, 1, 2, 3, 4, 5, 6};
  auto edge = [](int u, int v, double w, bool payload) {
    MatchingEdge e;
    e.u = u;
    e.v = v;
    e.probability = 0.01;
    e.weight = w;
    e.iweight = static_cast<std::int64_t>(w) * MatchingGraph::kWeightScale;
    e.payload = payload;
    return e;
  };
  const int boundary = 7;
  g.edges = {edge(0, 1, 2, false), edge(1, 2, 3, false), edge(2, 3, 1, true),
             edge(3, 4, 4, false), edge(4, 5, 2, false), edge(5, 6, 3, false),
             edge(0, boundary, 2, false), edge(6, boundary, 1, false)};
  g.finalize();
  return g;
}

std::vector<int> usable_nodes(const MatchingGraph& g) {
  std::set<int> nodes;
  for (const MatchingEdge& e : g.edges) {
    if (e.u != g.boundary()) nodes.insert(e.u);
    if (e.v != g.boundary()) nodes.insert(e.v);
  }
  return {nodes.begin(), nodes.end()};
}

}  // namespace

TEST_CASE("blossom matcher agrees with exhaustive search on random graphs") {
  RngStream rng{0xb7055u};
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng.uniform_below(5)));  // 2..10
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
    BlossomMatcher matcher(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // Small range on purpose: plenty of ties.
        w[i][j] = w[j][i] = static_cast<std::int64_t>(rng.uniform_below(8));
        matcher.set_weight(i, j, w[i][j]);
      }
    }
    const std::vector<int> mate = matcher.solve();
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      REQUIRE(mate[i] >= 0);
      REQUIRE(mate[i] < n);
      REQUIRE(mate[mate[i]] == i);
      REQUIRE(mate[i] != i);
      if (mate[i] > i) total += w[i][mate[i]];
    }
    CHECK(total == exhaustive_min_matching(w));
  }
}

TEST_CASE("blossom matcher handles structures that force odd-set contraction") {
  // A 5-cycle of cheap edges plus one cheap escape: the optimum must break
  // the odd cycle through a blossom.
  BlossomMatcher matcher(6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) matcher.set_weight(i, j, 100);
  }
  for (int i = 0; i < 5; ++i) matcher.set_weight(i, (i + 1) % 5, 1);
  matcher.set_weight(0, 5, 1);
  const std::vector<int> mate = matcher.solve();
  std::int64_t total = 0;
  std::vector<std::vector<std::int64_t>> w(6, std::vector<std::int64_t>(6, 100));
  for (int i = 0; i < 5; ++i) w[i][(i + 1) % 5] = w[(i + 1) % 5][i] = 1;
  w[0][5] = w[5][0] = 1;
  for (int i = 0; i < 6; ++i) {
    if (mate[i] > i) total += w[i][mate[i]];
  }
  CHECK(total == 3);
}

TEST_CASE("code-capacity graph at d=3 is a single detector layer") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const MatchingGraph g = build_matching_graph(lat, sched, NoiseModel::code_capacity(0.1),
                                               1, Basis::Z, Weighting::Unit);
  // The bulk qubit (1,1) links the two Z faces with a weight-1 edge.
  const int a = g.detector(0, 0);
  const int b = g.detector(3, 0);
  bool found = false;
  for (const MatchingEdge& e : g.edges) {
    CHECK(e.u < g.num_slots());  // nothing touches the final ideal layer
    CHECK((e.v < g.num_slots() || e.v == g.boundary()));
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
      found = true;
      CHECK(e.weight == 1.0);
      CHECK(e.probability == doctest::Approx(0.2 / 3.0));
    }
  }
  CHECK(found);
}

TEST_CASE("phenomenological graph has time-like edges of probability q") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const double q = 0.05;
  const MatchingGraph g = build_matching_graph(
      lat, sched, NoiseModel::phenomenological(0.01, q), 3, Basis::Z);
  for (const Stabilizer& s : lat.stabilizers) {
    if (s.basis != Basis::Z) continue;
    for (int t = 0; t + 1 <= 3; ++t) {
      const int u = g.detector(s.id, t);
      const int v = g.detector(s.id, t + 1);
      bool found = false;
      for (const MatchingEdge& e : g.edges) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
          found = true;
          CHECK(e.probability == doctest::Approx(q));
          CHECK_FALSE(e.payload);
        }
      }
      CAPTURE(s.id);
      CAPTURE(t);
      CHECK(found);
    }
  }
}

TEST_CASE("every circuit-level single fault maps onto a graph edge at d=3") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const int rounds = 3;
  // Construction itself throws if any fault flips more than two detectors.
  for (Basis basis : {Basis::Z, Basis::X}) {
    const MatchingGraph g = build_matching_graph(
        lat, sched, NoiseModel::circuit_level(1e-3), rounds, basis);
    std::set<std::pair<int, int>> edge_set;
    for (const MatchingEdge& e : g.edges) edge_set.insert({e.u, e.v});
    for (const FaultLocation& loc : fault_locations(sched)) {
      for (int code = 1; code <= loc.domain_size(); ++code) {
        for (int r : {0, 1, 2}) {
          const SyndromeHistory hist =
              run_circuit_shot(lat, sched, rounds, {{r, loc.index, code}}, basis);
          const auto events = extract_detection_events(lat, hist);
          REQUIRE(events.defects.size() <= 2);
          if (events.defects.empty()) continue;
          int u = g.detector(events.defects[0].stabilizer, events.defects[0].round);
          int v = events.defects.size() == 2
                      ? g.detector(events.defects[1].stabilizer, events.defects[1].round)
                      : g.boundary();
          if (u > v) std::swap(u, v);
          CAPTURE(loc.index);
          CAPTURE(code);
          CAPTURE(r);
          CHECK(edge_set.contains({u, v}));
        }
      }
    }
  }
}

TEST_CASE("mwpm basics") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const MatchingGraph g = build_matching_graph(lat, sched, NoiseModel::code_capacity(0.1),
                                               1, Basis::Z, Weighting::Unit);

  SUBCASE("zero defects") {
    const Matching m = mwpm(g, {});
    CHECK(m.pairs.empty());
    CHECK(m.total_weight_int == 0);
    CHECK_FALSE(m.logical_parity);
  }

  SUBCASE("two adjacent bulk defects pair up instead of using the boundary") {
    const std::vector<int> defects = {g.detector(0, 0), g.detector(3, 0)};
    const Matching m = mwpm(g, defects);
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.pairs[0].a == defects[0]);
    CHECK(m.pairs[0].b == defects[1]);
    CHECK(m.total_weight_int == MatchingGraph::kWeightScale);  // weight exactly 1
  }
}

TEST_CASE("brute force oracle on the hand-built chain") {
  const MatchingGraph g = hand_graph();

  SUBCASE("zero defects") {
    CHECK(brute_force_mwpm(g, {}).total_weight_int == 0);
  }

  SUBCASE("two defects take the cheaper of direct and double-boundary routes") {
    // Nodes 0 and 6: the interior path costs 15, the boundary routes 2 + 1.
    const std::vector<int> defects = {0, 6};
    const Matching m = brute_force_mwpm(g, defects);
    CHECK(m.total_weight_int == 3 * MatchingGraph::kWeightScale);
    CHECK(mwpm(g, defects).total_weight_int == 3 * MatchingGraph::kWeightScale);
  }

  SUBCASE("six defects reproduce the hand-computed optimum") {
    // Optimal pairing is (0,1) + (2,3) + (4,5) with weight 2 + 1 + 2 = 5 and
    // the payload picked up on the 2-3 edge.
    const std::vector<int> defects = {0, 1, 2, 3, 4, 5};
    const Matching m = brute_force_mwpm(g, defects);
    CHECK(m.total_weight_int == 5 * MatchingGraph::kWeightScale);
    CHECK(m.logical_parity);
    const Matching via_blossom = mwpm(g, defects);
    CHECK(via_blossom.total_weight_int == m.total_weight_int);
    CHECK(via_blossom.logical_parity == m.logical_parity);
  }

  SUBCASE("more than ten defects are rejected") {
    const std::vector<int> defects(11, 0);
    CHECK_THROWS_AS(brute_force_mwpm(g, defects), std::invalid_argument);
  }
}

TEST_CASE("mwpm equals the brute-force oracle on random defect sets") {
  RngStream rng{0x0c0ffee};
  for (int d : {3, 5}) {
    const RscLattice lat = build_lattice(d);
    const RoundSchedule sched = build_round_schedule(lat);
    const std::vector<MatchingGraph> graphs = {
        build_matching_graph(lat, sched, NoiseModel::code_capacity(0.08), 1, Basis::Z),
        build_matching_graph(lat, sched, NoiseModel::phenomenological(0.01), d, Basis::Z),
        build_matching_graph(lat, sched, NoiseModel::circuit_level(2e-3), d, Basis::Z),
    };
    for (const MatchingGraph& g : graphs) {
      const std::vector<int> nodes = usable_nodes(g);
      for (int trial = 0; trial < 120; ++trial) {
        int count = 2 * (1 + static_cast<int>(rng.uniform_below(4)));
        count = std::min(count, static_cast<int>(nodes.size()) & ~1);
        std::set<int> defects;
        while (static_cast<int>(defects.size()) < count) {
          defects.insert(nodes[rng.uniform_below(nodes.size())]);
        }
        const std::vector<int> list(defects.begin(), defects.end());
        const Matching fast = mwpm(g, list);
        const Matching slow = brute_force_mwpm(g, list);
        CHECK(fast.total_weight_int == slow.total_weight_int);
      }
    }
  }
}

TEST_CASE("decoding single data errors corrects them everywhere") {
  for (int d : {3, 5}) {
    CAPTURE(d);
    const RscLattice lat = build_lattice(d);
    const RoundSchedule sched = build_round_schedule(lat);
    const MatchingGraph gz =
        build_matching_graph(lat, sched, NoiseModel::code_capacity(0.05), 1, Basis::Z);
    const MatchingGraph gx =
        build_matching_graph(lat, sched, NoiseModel::code_capacity(0.05), 1, Basis::X);
    for (int q = 0; q < lat.num_data(); ++q) {
      for (char pauli : {'X', 'Y', 'Z'}) {
        PauliFrame frame = PauliOperator::single(lat.num_data(), q, pauli);
        const SyndromeHistory z_mem = run_code_capacity_shot(lat, frame, Basis::Z);
        const SyndromeHistory x_mem = run_code_capacity_shot(lat, frame, Basis::X);
        CAPTURE(q);
        CAPTURE(pauli);
        CHECK_FALSE(score_shot(lat, z_mem, decode(gz, extract_detection_events(lat, z_mem))));
        CHECK_FALSE(score_shot(lat, x_mem, decode(gx, extract_detection_events(lat, x_mem))));
      }
    }
  }
}

TEST_CASE("an injected logical chain is invisible and scored as failure") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const MatchingGraph g =
      build_matching_graph(lat, sched, NoiseModel::code_capacity(0.05), 1, Basis::Z);
  PauliFrame frame(lat.num_data());
  for (int q : lat.logical_x) frame.set_x(q);
  const SyndromeHistory hist = run_code_capacity_shot(lat, frame);
  const DetectionEventSet events = extract_detection_events(lat, hist);
  CHECK(events.defects.empty());
  const bool parity = decode(g, events);
  CHECK_FALSE(parity);
  CHECK(score_shot(lat, hist, parity));
}

TEST_CASE("pure measurement noise decodes to time-like pairs and no correction") {
  const RscLattice lat = build_lattice(3);
  const RoundSchedule sched = build_round_schedule(lat);
  const int rounds = 8;
  const NoiseModel model = NoiseModel::phenomenological(0.0, 0.05);
  const MatchingGraph g = build_matching_graph(lat, sched, model, rounds, Basis::Z);
  for (std::uint64_t shot = 0; shot < 200; ++shot) {
    const SyndromeHistory hist = run_memory(lat, sched, model, rounds, 5150, shot);
    const DetectionEventSet events = extract_detection_events(lat, hist);
    const Matching m = mwpm(g, defect_nodes(g, events));
    CHECK_FALSE(m.logical_parity);
    for (const MatchedPair& pair : m.pairs) {
      REQUIRE(pair.b != g.boundary());
      CHECK(pair.a % g.num_slots() == pair.b % g.num_slots());  // same check, time-like
    }
    CHECK_FALSE(score_shot(lat, hist, m.logical_parity));
  }
}

TEST_CASE("decoding is a pure function of graph and events") {
  const RscLattice lat = build_lattice(5);
  const RoundSchedule sched = build_round_schedule(lat);
  const NoiseModel model = NoiseModel::circuit_level(5e-3);
  const MatchingGraph g = build_matching_graph(lat, sched, model, 5, Basis::Z);
  for (std::uint64_t shot = 0; shot < 50; ++shot) {
    const SyndromeHistory hist = run_memory(lat, sched, model, 5, 777, shot);
    const DetectionEventSet events = extract_detection_events(lat, hist);
    const Matching a = mwpm(g, defect_nodes(g, events));
    const Matching b = mwpm(g, defect_nodes(g, events));
    CHECK(a.total_weight_int == b.total_weight_int);
    CHECK(a.logical_parity == b.logical_parity);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
      CHECK(a.pairs[i].a == b.pairs[i].a);
      CHECK(a.pairs[i].b == b.pairs[i].b);
    }
  }
}
