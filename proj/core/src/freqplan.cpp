#include "rscsim/freqplan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "rscsim/experiment.hpp"

namespace rscsim {

namespace {

int data_class(int row) { return 3 + row % 2; }

int ancilla_class(const Stabilizer& s) {
  if (s.basis == Basis::X) return 5;
  return 1 + ((s.center_row2 - 1) / 2) % 2;
}

}  // namespace

FrequencyPlan assign_classes(const RscLattice& lattice, const BusLayout& layout) {
  (void)layout;  // the pattern is constructive; the layout fixes what it must satisfy
  FrequencyPlan plan;
  plan.distance = lattice.distance;
  plan.qubit_class.assign(lattice.num_qubits(), 0);
  for (int q = 0; q < lattice.num_data(); ++q) {
    plan.qubit_class[q] = data_class(lattice.data_coords[q].row);
  }
  for (const Stabilizer& s : lattice.stabilizers) {
    plan.qubit_class[s.ancilla] = ancilla_class(s);
    for (int q : s.support) {
      if (s.basis == Basis::Z) {
        plan.gate_pairs.push_back({q, s.ancilla});
      } else {
        plan.gate_pairs.push_back({s.ancilla, q});
      }
    }
  }
  return plan;
}

std::vector<std::string> validate_plan(const RscLattice& lattice, const BusLayout& layout,
                                       const FrequencyPlan& plan) {
  std::vector<std::string> report;
  std::set<int> used(plan.qubit_class.begin(), plan.qubit_class.end());
  const std::size_t expected = lattice.distance >= 3 ? 5 : 1;
  if (used.size() != expected) {
    report.push_back("plan uses " + std::to_string(used.size()) + " classes, expected " +
                     std::to_string(expected));
  }
  for (const Bus& bus : layout.buses) {
    std::vector<int> members = bus.data;
    members.insert(members.end(), bus.ancillas.begin(), bus.ancillas.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (plan.qubit_class[members[i]] == plan.qubit_class[members[j]]) {
          report.push_back("bus " + std::to_string(bus.id) + " couples qubits " +
                           std::to_string(members[i]) + " and " + std::to_string(members[j]) +
                           " of equal class");
        }
      }
    }
  }
  for (const GatePair& gate : plan.gate_pairs) {
    if (plan.qubit_class[gate.control] <= plan.qubit_class[gate.target]) {
      report.push_back("gate control " + std::to_string(gate.control) +
                       " does not sit above target " + std::to_string(gate.target));
    }
  }
  for (int q = 0; q < lattice.num_data(); ++q) {
    const auto& zs = lattice.z_checks_on_qubit[q];
    for (std::size_t i = 0; i < zs.size(); ++i) {
      for (std::size_t j = i + 1; j < zs.size(); ++j) {
        const int a = lattice.stabilizers[zs[i]].ancilla;
        const int b = lattice.stabilizers[zs[j]].ancilla;
        if (plan.qubit_class[a] == plan.qubit_class[b]) {
          report.push_back("Z ancillas " + std::to_string(a) + " and " + std::to_string(b) +
                           " gated by qubit " + std::to_string(q) + " share a class");
        }
      }
    }
  }
  return report;
}

std::vector<double> sample_frequencies(const FrequencyPlan& plan, double sigma_mhz,
                                       RngStream& rng) {
  if (sigma_mhz < 0) throw std::invalid_argument("sigma must be nonnegative");
  std::vector<double> freqs(plan.qubit_class.size());
  const double sigma_ghz = sigma_mhz / 1000.0;
  for (std::size_t q = 0; q < freqs.size(); ++q) {
    freqs[q] = plan.base_ghz[plan.qubit_class[q] - 1] + sigma_ghz * rng.next_gaussian();
  }
  return freqs;
}

CouplingMap build_coupling_map(const BusLayout& layout, int num_qubits) {
  std::vector<std::set<int>> neighbours(num_qubits);
  for (const Bus& bus : layout.buses) {
    std::vector<int> members = bus.data;
    members.insert(members.end(), bus.ancillas.begin(), bus.ancillas.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        neighbours[members[i]].insert(members[j]);
        neighbours[members[j]].insert(members[i]);
      }
    }
  }
  CouplingMap map;
  for (int a = 0; a < num_qubits; ++a) {
    for (int b : neighbours[a]) {
      if (b > a) map.coupled.push_back({a, b});
    }
  }
  for (int a = 0; a < num_qubits; ++a) {
    std::set<int> second;
    for (int mid : neighbours[a]) {
      for (int b : neighbours[mid]) {
        if (b > a && !neighbours[a].count(b)) second.insert(b);
      }
    }
    for (int b : second) map.next_nearest.push_back({a, b});
  }
  return map;
}

std::vector<Collision> detect_collisions(const FrequencyPlan& plan,
                                         const CouplingMap& coupling,
                                         const std::vector<double>& freqs_ghz,
                                         const CollisionWindows& windows) {
  std::vector<Collision> collisions;
  const double alpha_mhz = plan.anharmonicity_ghz * 1000.0;
  auto detuning = [&](int a, int b) { return (freqs_ghz[a] - freqs_ghz[b]) * 1000.0; };

  auto check_asymmetric = [&](int a, int b) {
    for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
      const double delta = detuning(i, j);
      // 0-1 of i against the 1-2 transition of j.
      if (std::abs(delta - std::abs(alpha_mhz)) < windows.w2_mhz) {
        collisions.push_back({i, j, 2, delta});
      }
      // two-photon 0-2 degeneracy: 2 f_i + alpha ~ 2 f_j.
      const double two_photon = 2.0 * delta + alpha_mhz;
      if (std::abs(two_photon) < windows.w3_mhz) {
        collisions.push_back({i, j, 3, delta});
      }
    }
  };

  for (auto [a, b] : coupling.coupled) {
    const double delta = detuning(a, b);
    if (std::abs(delta) < windows.w1_mhz) collisions.push_back({a, b, 1, delta});
    check_asymmetric(a, b);
  }
  for (auto [a, b] : coupling.next_nearest) check_asymmetric(a, b);
  return collisions;
}

CollisionYield collision_yield(const FrequencyPlan& plan, const CouplingMap& coupling,
                               double sigma_mhz, long samples, std::uint64_t seed,
                               const CollisionWindows& windows, int threads) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  std::atomic<long> collided{0};
  auto worker = [&](int tid) {
    long local = 0;
    for (long s = tid; s < samples; s += threads) {
      RngStream rng{seed, static_cast<std::uint64_t>(s), 0x66726571ull};
      const auto freqs = sample_frequencies(plan, sigma_mhz, rng);
      if (!detect_collisions(plan, coupling, freqs, windows).empty()) ++local;
    }
    collided += local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  CollisionYield yield;
  yield.samples = samples;
  yield.samples_with_collision = collided.load();
  yield.probability = static_cast<double>(yield.samples_with_collision) /
                      static_cast<double>(yield.samples);
  wilson_interval(yield.samples_with_collision, yield.samples, yield.ci_low, yield.ci_high);
  return yield;
}

namespace {

/// Periodic unit tile: 4x4 data qubits in doubled coordinates mod 8, with the
/// same constraint relations the planner must satisfy on the open lattice.
struct Tile {
  static constexpr int kSpan = 8;
  std::vector<std::pair<int, int>> distinct;   // class[a] != class[b]
  std::vector<std::pair<int, int>> below;      // class[a] < class[b]
  int num_qubits = 32;

  static int wrap(int v) { return ((v % kSpan) + kSpan) % kSpan; }
  static int data_id(int x, int y) { return (wrap(x) / 2) * 4 + wrap(y) / 2; }
  static int anc_id(int u, int v) { return 16 + ((wrap(u) - 1) / 2) * 4 + (wrap(v) - 1) / 2; }
  static bool anc_is_z(int u, int v) { return (wrap(u) + wrap(v)) % 4 == 2; }

  Tile() {
    // K1: pairwise-distinct members of every bus at (odd row, even column).
    for (int a = 1; a < kSpan; a += 2) {
      for (int b = 0; b < kSpan; b += 2) {
        const int members[4] = {data_id(a - 1, b), data_id(a + 1, b), anc_id(a, b - 1),
                                anc_id(a, b + 1)};
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) distinct.push_back({members[i], members[j]});
        }
      }
    }
    for (int u = 1; u < kSpan; u += 2) {
      for (int v = 1; v < kSpan; v += 2) {
        const int anc = anc_id(u, v);
        for (int du : {-1, 1}) {
          for (int dv : {-1, 1}) {
            const int data = data_id(u + du, v + dv);
            // K2: Z checks drive data above ancilla, X checks the reverse.
            if (anc_is_z(u, v)) {
              below.push_back({anc, data});
            } else {
              below.push_back({data, anc});
            }
          }
        }
      }
    }
    // K3: the two Z ancillas gated by a common data qubit are distinct.
    for (int x = 0; x < kSpan; x += 2) {
      for (int y = 0; y < kSpan; y += 2) {
        std::vector<int> z_ancs;
        for (int du : {-1, 1}) {
          for (int dv : {-1, 1}) {
            if (anc_is_z(wrap(x + du), wrap(y + dv))) {
              z_ancs.push_back(anc_id(x + du, y + dv));
            }
          }
        }
        for (std::size_t i = 0; i < z_ancs.size(); ++i) {
          for (std::size_t j = i + 1; j < z_ancs.size(); ++j) {
            distinct.push_back({z_ancs[i], z_ancs[j]});
          }
        }
      }
    }
  }
};

bool tile_search(const Tile& tile, std::vector<int>& classes, int qubit, int num_classes,
                 const std::vector<std::vector<std::pair<int, int>>>& distinct_adj,
                 const std::vector<std::vector<std::pair<int, bool>>>& order_adj) {
  if (qubit == tile.num_qubits) return true;
  for (int c = 1; c <= num_classes; ++c) {
    classes[qubit] = c;
    bool ok = true;
    for (auto [other, _] : distinct_adj[qubit]) {
      if (classes[other] == c) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (auto [other, qubit_is_lower] : order_adj[qubit]) {
        if (classes[other] == 0) continue;
        if (qubit_is_lower ? c >= classes[other] : c <= classes[other]) {
          ok = false;
          break;
        }
      }
    }
    if (ok && tile_search(tile, classes, qubit + 1, num_classes, distinct_adj, order_adj)) {
      return true;
    }
  }
  classes[qubit] = 0;
  return false;
}

}  // namespace

bool tile_colorable(int num_classes) {
  static const Tile tile;
  std::vector<std::vector<std::pair<int, int>>> distinct_adj(tile.num_qubits);
  std::vector<std::vector<std::pair<int, bool>>> order_adj(tile.num_qubits);
  for (auto [a, b] : tile.distinct) {
    distinct_adj[a].push_back({b, 0});
    distinct_adj[b].push_back({a, 0});
  }
  for (auto [lo, hi] : tile.below) {
    order_adj[lo].push_back({hi, true});
    order_adj[hi].push_back({lo, false});
  }
  std::vector<int> classes(tile.num_qubits, 0);
  return tile_search(tile, classes, 0, num_classes, distinct_adj, order_adj);
}

}  // namespace rscsim
