#include "rscsim/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rscsim {

namespace {

void add_stabilizer(RscLattice& lat, Basis basis, std::vector<int> support, int row2,
                    int col2) {
  Stabilizer s;
  s.id = static_cast<int>(lat.stabilizers.size());
  s.basis = basis;
  std::sort(support.begin(), support.end());
  s.support = std::move(support);
  s.ancilla = lat.num_data() + s.id;
  s.center_row2 = row2;
  s.center_col2 = col2;
  lat.stabilizers.push_back(std::move(s));
}

}  // namespace

RscLattice build_lattice(int distance) {
  if (distance < 1) throw std::invalid_argument("distance must be positive");
  if (distance % 2 == 0) throw std::invalid_argument("distance must be odd");
  const int d = distance;

  RscLattice lat;
  lat.distance = d;
  lat.data_coords.reserve(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) lat.data_coords.push_back({r, c});
  }

  // Bulk faces, checkerboard coloured with a Z face at the top left.
  for (int r = 0; r + 1 < d; ++r) {
    for (int c = 0; c + 1 < d; ++c) {
      const Basis basis = ((r + c) % 2 == 0) ? Basis::Z : Basis::X;
      add_stabilizer(lat, basis,
                     {lat.data_index(r, c), lat.data_index(r, c + 1),
                      lat.data_index(r + 1, c), lat.data_index(r + 1, c + 1)},
                     2 * r + 1, 2 * c + 1);
    }
  }
  // Weight-2 X checks above the top row and below the bottom row. The offsets
  // alternate between the two rows so that every pair commutes with its bulk
  // neighbours.
  for (int c = 0; c + 1 < d; c += 2) {
    add_stabilizer(lat, Basis::X, {lat.data_index(0, c), lat.data_index(0, c + 1)}, -1,
                   2 * c + 1);
  }
  for (int c = 1; c + 1 < d; c += 2) {
    add_stabilizer(lat, Basis::X,
                   {lat.data_index(d - 1, c), lat.data_index(d - 1, c + 1)}, 2 * d - 1,
                   2 * c + 1);
  }
  // Weight-2 Z checks on the left and right edges.
  for (int r = 1; r + 1 < d; r += 2) {
    add_stabilizer(lat, Basis::Z, {lat.data_index(r, 0), lat.data_index(r + 1, 0)},
                   2 * r + 1, -1);
  }
  for (int r = 0; r + 1 < d; r += 2) {
    add_stabilizer(lat, Basis::Z,
                   {lat.data_index(r, d - 1), lat.data_index(r + 1, d - 1)}, 2 * r + 1,
                   2 * d - 1);
  }

  for (int c = 0; c < d; ++c) lat.logical_z.push_back(lat.data_index(0, c));
  for (int r = 0; r < d; ++r) lat.logical_x.push_back(lat.data_index(r, 0));

  for (int c = 0; c < d; ++c) {
    lat.x_boundaries[0].push_back(lat.data_index(0, c));
    lat.x_boundaries[1].push_back(lat.data_index(d - 1, c));
  }
  for (int r = 0; r < d; ++r) {
    lat.z_boundaries[0].push_back(lat.data_index(r, 0));
    lat.z_boundaries[1].push_back(lat.data_index(r, d - 1));
  }

  lat.z_checks_on_qubit.assign(lat.num_data(), {});
  lat.x_checks_on_qubit.assign(lat.num_data(), {});
  for (const Stabilizer& s : lat.stabilizers) {
    for (int q : s.support) {
      (s.basis == Basis::Z ? lat.z_checks_on_qubit : lat.x_checks_on_qubit)[q].push_back(
          s.id);
    }
  }
  return lat;
}

PauliOperator RscLattice::stabilizer_operator(int id) const {
  const Stabilizer& s = stabilizers.at(id);
  PauliOperator p(num_data());
  for (int q : s.support) {
    if (s.basis == Basis::Z) {
      p.set_z(q);
    } else {
      p.set_x(q);
    }
  }
  return p;
}

PauliOperator RscLattice::logical_pauli(Basis basis) const {
  PauliOperator p(num_data());
  for (int q : (basis == Basis::Z ? logical_z : logical_x)) {
    if (basis == Basis::Z) {
      p.set_z(q);
    } else {
      p.set_x(q);
    }
  }
  return p;
}

std::vector<int> logical_operator(const RscLattice& lattice, Basis basis) {
  return basis == Basis::Z ? lattice.logical_z : lattice.logical_x;
}

BusLayout build_bus_layout(const RscLattice& lattice) {
  const int d = lattice.distance;
  BusLayout layout;
  layout.qubit_buses.assign(lattice.num_qubits(), {});

  // Ancilla lookup by face centre.
  std::map<std::pair<int, int>, int> ancilla_at;
  for (const Stabilizer& s : lattice.stabilizers) {
    ancilla_at[{s.center_row2, s.center_col2}] = s.ancilla;
  }

  // Buses sit between vertically adjacent data qubits, at doubled coordinates
  // (odd row, even column), and pick up the face ancillas to their left and
  // right. Every gate pair of the extraction circuit shares one such bus.
  for (int a = -1; a <= 2 * d - 1; a += 2) {
    for (int b = 0; b <= 2 * d - 2; b += 2) {
      Bus bus;
      bus.center_row2 = a;
      bus.center_col2 = b;
      const int up = lattice.data_index((a - 1) / 2, b / 2);
      const int down = lattice.data_index((a + 1) / 2, b / 2);
      if (up >= 0) bus.data.push_back(up);
      if (down >= 0) bus.data.push_back(down);
      for (int bc : {b - 1, b + 1}) {
        auto it = ancilla_at.find({a, bc});
        if (it != ancilla_at.end()) bus.ancillas.push_back(it->second);
      }
      if (bus.data.empty() || bus.ancillas.empty()) continue;
      bus.interior = bus.data.size() == 2 && bus.ancillas.size() == 2;
      bus.id = static_cast<int>(layout.buses.size());
      for (int q : bus.data) layout.qubit_buses[q].push_back(bus.id);
      for (int q : bus.ancillas) layout.qubit_buses[q].push_back(bus.id);
      layout.buses.push_back(std::move(bus));
    }
  }
  return layout;
}

namespace {

std::size_t support_overlap(const Stabilizer& a, const Stabilizer& b) {
  std::size_t n = 0;
  for (int q : a.support) {
    if (std::find(b.support.begin(), b.support.end(), q) != b.support.end()) ++n;
  }
  return n;
}

}  // namespace

std::vector<std::string> validate_lattice(const RscLattice& lat) {
  std::vector<std::string> report;
  auto fail = [&report](const std::string& msg) { report.push_back(msg); };
  const int d = lat.distance;

  if (d < 1 || d % 2 == 0) {
    fail("distance must be a positive odd integer");
    return report;
  }
  if (static_cast<int>(lat.data_coords.size()) != d * d) {
    fail("expected " + std::to_string(d * d) + " data qubits, found " +
         std::to_string(lat.data_coords.size()));
  }
  if (lat.num_stabilizers() != d * d - 1) {
    fail("expected " + std::to_string(d * d - 1) + " stabilizers, found " +
         std::to_string(lat.num_stabilizers()));
  }
  int z_count = 0;
  for (const Stabilizer& s : lat.stabilizers) {
    if (s.basis == Basis::Z) ++z_count;
    if (s.support.size() != 2 && s.support.size() != 4) {
      fail("stabilizer " + std::to_string(s.id) + " has support of size " +
           std::to_string(s.support.size()));
    }
    // Face locality: every support qubit within one grid step of the centre.
    for (int q : s.support) {
      if (q < 0 || q >= static_cast<int>(lat.data_coords.size())) {
        fail("stabilizer " + std::to_string(s.id) + " references missing qubit " +
             std::to_string(q));
        continue;
      }
      const GridCoord gc = lat.data_coords[q];
      if (std::abs(2 * gc.row - s.center_row2) != 1 ||
          std::abs(2 * gc.col - s.center_col2) != 1) {
        fail("stabilizer " + std::to_string(s.id) + " support qubit " + std::to_string(q) +
             " does not sit on its face");
      }
    }
  }
  if (d > 1 && z_count != (d * d - 1) / 2) {
    fail("expected " + std::to_string((d * d - 1) / 2) + " Z checks, found " +
         std::to_string(z_count));
  }

  for (std::size_t i = 0; i < lat.stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.stabilizers.size(); ++j) {
      const Stabilizer& a = lat.stabilizers[i];
      const Stabilizer& b = lat.stabilizers[j];
      if (a.basis == b.basis) {
        if (support_overlap(a, b) > 1) {
          fail("same-basis stabilizers " + std::to_string(a.id) + " and " +
               std::to_string(b.id) + " share an edge");
        }
        continue;
      }
      if (support_overlap(a, b) % 2 != 0) {
        fail("stabilizers " + std::to_string(a.id) + " and " + std::to_string(b.id) +
             " anticommute (share an odd number of qubits)");
      }
    }
  }

  auto check_logical = [&](const std::vector<int>& chain, Basis basis,
                           const std::array<std::vector<int>, 2>& boundaries,
                           const std::string& name) {
    if (static_cast<int>(chain.size()) != d) {
      fail(name + " has weight " + std::to_string(chain.size()) + ", expected " +
           std::to_string(d));
    }
    PauliOperator op(lat.num_data());
    for (int q : chain) {
      if (q < 0 || q >= lat.num_data()) {
        fail(name + " references missing qubit " + std::to_string(q));
        return;
      }
      if (basis == Basis::Z) {
        op.set_z(q);
      } else {
        op.set_x(q);
      }
    }
    for (const Stabilizer& s : lat.stabilizers) {
      if (!op.commutes_with(lat.stabilizer_operator(s.id))) {
        fail(name + " anticommutes with stabilizer " + std::to_string(s.id));
      }
    }
    for (int side = 0; side < 2; ++side) {
      bool touches = false;
      for (int q : chain) {
        if (std::find(boundaries[side].begin(), boundaries[side].end(), q) !=
            boundaries[side].end()) {
          touches = true;
          break;
        }
      }
      if (!touches) {
        fail(name + " does not connect both of its boundaries (misses side " +
             std::to_string(side) + ")");
      }
    }
  };
  check_logical(lat.logical_z, Basis::Z, lat.z_boundaries, "logical_z");
  check_logical(lat.logical_x, Basis::X, lat.x_boundaries, "logical_x");

  if (!lat.logical_x.empty() && !lat.logical_z.empty()) {
    if (lat.logical_pauli(Basis::X).commutes_with(lat.logical_pauli(Basis::Z))) {
      fail("logical_x and logical_z do not anticommute");
    }
  }
  return report;
}

}  // namespace rscsim
