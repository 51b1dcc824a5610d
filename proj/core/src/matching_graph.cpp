#include "rscsim/matching_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace rscsim {

int MatchingGraph::detector(int stabilizer, int round) const {
  const int slot = slot_of_stab.at(stabilizer);
  if (slot < 0) throw std::invalid_argument("stabilizer is not in this detector basis");
  if (round < 0 || round >= detector_rounds) throw std::out_of_range("detector round");
  return round * num_slots() + slot;
}

void MatchingGraph::finalize() {
  const int n = num_detectors() + 1;  // detectors plus boundary
  std::vector<std::vector<std::tuple<int, std::int64_t, double, bool>>> adj(n);
  for (const MatchingEdge& e : edges) {
    adj[e.u].emplace_back(e.v, e.iweight, e.weight, e.payload);
    adj[e.v].emplace_back(e.u, e.iweight, e.weight, e.payload);
  }

  idist_.assign(n, std::vector<std::int64_t>(n, kUnreachable));
  ddist_.assign(n, std::vector<double>(n, 0.0));
  payload_.assign(n, std::vector<std::uint8_t>(n, 0));

  // Dijkstra from every node; graphs stay small (hundreds of detectors).
  using Item = std::pair<std::int64_t, int>;
  for (int src = 0; src < n; ++src) {
    auto& dist = idist_[src];
    auto& real = ddist_[src];
    auto& pay = payload_[src];
    dist[src] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, src});
    while (!pq.empty()) {
      const auto [du, u] = pq.top();
      pq.pop();
      if (du != dist[u]) continue;
      for (const auto& [v, iw, w, pl] : adj[u]) {
        const std::int64_t cand = du + iw;
        if (cand < dist[v]) {
          dist[v] = cand;
          real[v] = real[u] + w;
          pay[v] = pay[u] ^ static_cast<std::uint8_t>(pl);
          pq.push({cand, v});
        }
      }
    }
  }
  finalized_ = true;
}

namespace {

struct Mechanism {
  std::vector<int> detectors;  // flipped detector node ids, at most 2
  bool payload = false;
  double probability = 0.0;
};

/// Payload of a residual data-qubit error with respect to the scored
/// logical operator of `basis`.
bool chain_payload(const RscLattice& lattice, const PauliFrame& residual, Basis basis) {
  int parity = 0;
  for (int q : (basis == Basis::Z ? lattice.logical_z : lattice.logical_x)) {
    parity ^= basis == Basis::Z ? residual.x(q) : residual.z(q);
  }
  return parity != 0;
}

void append_edges(MatchingGraph& graph, const std::vector<Mechanism>& mechanisms,
                  Weighting weighting) {
  // Merge mechanisms with identical endpoints and payload: the edge fires
  // when an odd number of its mechanisms fire.
  std::map<std::tuple<int, int, bool>, double> merged;
  for (const Mechanism& m : mechanisms) {
    if (m.detectors.empty() || m.probability == 0.0) continue;
    if (m.detectors.size() > 2) {
      throw std::logic_error("fault mechanism flips more than two detectors of one basis");
    }
    int u = m.detectors[0];
    int v = m.detectors.size() == 2 ? m.detectors[1] : graph.boundary();
    if (u > v) std::swap(u, v);
    double& p = merged[{u, v, m.payload}];
    p = p * (1.0 - m.probability) + m.probability * (1.0 - p);
  }
  for (const auto& [key, p] : merged) {
    MatchingEdge e;
    e.u = std::get<0>(key);
    e.v = std::get<1>(key);
    e.payload = std::get<2>(key);
    e.probability = p;
    if (weighting == Weighting::Unit) {
      e.weight = 1.0;
    } else if (p >= 0.5) {
      e.weight = 0.0;  // -ln odds would go negative; clamp and count
      ++graph.clamped_edges;
    } else {
      e.weight = std::log((1.0 - p) / p);
    }
    e.iweight = std::llround(e.weight * static_cast<double>(MatchingGraph::kWeightScale));
    graph.edges.push_back(e);
  }
}

std::vector<int> basis_detectors_for_frame_flip(const MatchingGraph& graph,
                                                const RscLattice& lattice, int qubit,
                                                Basis basis, int round) {
  std::vector<int> detectors;
  for (int s : lattice.checks_on_qubit(qubit, basis)) {
    detectors.push_back(graph.detector(s, round));
  }
  return detectors;
}

std::vector<Mechanism> code_capacity_mechanisms(const MatchingGraph& graph,
                                                const RscLattice& lattice, double p,
                                                Basis basis) {
  // With probability p the qubit takes uniform X/Y/Z; two of the three flip
  // the bit this basis detects.
  std::vector<Mechanism> mechanisms;
  const auto& chain = basis == Basis::Z ? lattice.logical_z : lattice.logical_x;
  for (int q = 0; q < lattice.num_data(); ++q) {
    Mechanism m;
    m.detectors = basis_detectors_for_frame_flip(graph, lattice, q, basis, 0);
    m.payload = std::find(chain.begin(), chain.end(), q) != chain.end();
    m.probability = 2.0 * p / 3.0;
    mechanisms.push_back(std::move(m));
  }
  return mechanisms;
}

std::vector<Mechanism> phenomenological_mechanisms(const MatchingGraph& graph,
                                                   const RscLattice& lattice, double p,
                                                   double q, int rounds, Basis basis) {
  std::vector<Mechanism> mechanisms;
  const auto& chain = basis == Basis::Z ? lattice.logical_z : lattice.logical_x;
  for (int r = 0; r < rounds; ++r) {
    for (int qubit = 0; qubit < lattice.num_data(); ++qubit) {
      Mechanism m;
      m.detectors = basis_detectors_for_frame_flip(graph, lattice, qubit, basis, r);
      m.payload = std::find(chain.begin(), chain.end(), qubit) != chain.end();
      m.probability = 2.0 * p / 3.0;
      mechanisms.push_back(std::move(m));
    }
    for (const Stabilizer& s : lattice.stabilizers) {
      if (s.basis != basis) continue;
      Mechanism m;
      m.detectors = {graph.detector(s.id, r), graph.detector(s.id, r + 1)};
      m.payload = false;
      m.probability = q;
      mechanisms.push_back(std::move(m));
    }
  }
  return mechanisms;
}

std::vector<Mechanism> circuit_level_mechanisms(const MatchingGraph& graph,
                                                const RscLattice& lattice,
                                                const RoundSchedule& schedule, double p,
                                                int rounds, Basis basis) {
  std::vector<Mechanism> mechanisms;
  const std::vector<FaultLocation> locations = fault_locations(schedule);
  for (int r = 0; r < rounds; ++r) {
    for (const FaultLocation& loc : locations) {
      const int domain = loc.domain_size();
      const double prob = p / domain;
      for (int code = 1; code <= domain; ++code) {
        const SyndromeHistory hist = run_circuit_shot(
            lattice, schedule, rounds, {{r, loc.index, code}}, basis);
        Mechanism m;
        for (const DetectionEvent& ev : extract_detection_events(lattice, hist).defects) {
          m.detectors.push_back(graph.detector(ev.stabilizer, ev.round));
        }
        m.payload = chain_payload(lattice, hist.true_frame, basis);
        m.probability = prob;
        if (m.detectors.empty() && m.payload) {
          throw std::logic_error("undetectable single fault flips the logical operator");
        }
        mechanisms.push_back(std::move(m));
      }
    }
  }
  return mechanisms;
}

}  // namespace

MatchingGraph build_matching_graph(const RscLattice& lattice, const RoundSchedule& schedule,
                                   const NoiseModel& model, int rounds, Basis basis,
                                   Weighting weighting) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  if (model.kind == NoiseKind::CodeCapacity) rounds = 1;

  MatchingGraph graph;
  graph.basis = basis;
  graph.rounds = rounds;
  graph.detector_rounds = rounds + 1;
  graph.slot_of_stab.assign(lattice.num_stabilizers(), -1);
  for (const Stabilizer& s : lattice.stabilizers) {
    if (s.basis != basis) continue;
    graph.slot_of_stab[s.id] = static_cast<int>(graph.stab_of_slot.size());
    graph.stab_of_slot.push_back(s.id);
  }

  std::vector<Mechanism> mechanisms;
  switch (model.kind) {
    case NoiseKind::CodeCapacity:
      mechanisms = code_capacity_mechanisms(graph, lattice, model.p, basis);
      break;
    case NoiseKind::Phenomenological:
      mechanisms = phenomenological_mechanisms(graph, lattice, model.p, model.q, rounds, basis);
      break;
    case NoiseKind::CircuitLevel:
      if (lattice.distance > 1) {
        mechanisms = circuit_level_mechanisms(graph, lattice, schedule, model.p, rounds, basis);
      }
      break;
  }
  append_edges(graph, mechanisms, weighting);
  graph.finalize();
  return graph;
}

}  // namespace rscsim
