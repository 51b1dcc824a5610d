#pragma once

#include <array>
#include <string>
#include <vector>

#include "rscsim/pauli.hpp"

namespace rscsim {

struct GridCoord {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// One parity check of the rotated surface code. Weight-4 faces sit in the
/// bulk, weight-2 faces along the boundary. The face centre is kept in
/// doubled coordinates (data qubit (r, c) sits at (2r, 2c)) so that ancilla
/// positions and bus positions live on the same integer grid.
struct Stabilizer {
  int id = 0;
  Basis basis = Basis::Z;
  std::vector<int> support;  // data qubit indices, sorted
  int ancilla = 0;           // global qubit index (d^2 + id)
  int center_row2 = 0;
  int center_col2 = 0;
};

/// Resonator bus: couples the qubits that the extraction circuit gates
/// against one another. Interior buses attach two data qubits (a vertically
/// adjacent pair) and the two face ancillas either side of that pair.
struct Bus {
  int id = 0;
  std::vector<int> data;      // attached data qubit indices
  std::vector<int> ancillas;  // attached ancilla qubit indices
  int center_row2 = 0;
  int center_col2 = 0;
  bool interior = false;  // all four attachment points occupied
};

struct BusLayout {
  std::vector<Bus> buses;
  std::vector<std::vector<int>> qubit_buses;  // qubit index -> bus ids, data then ancilla
};

/// Distance-d rotated surface code on a d x d data-qubit grid.
///
/// Frozen conventions: data qubit (r, c) has index r*d + c; the top-left bulk
/// face is a Z face; weight-2 Z checks sit on the left/right edges and
/// weight-2 X checks on the top/bottom edges; logical Z is the top row
/// (connecting the two Z boundaries) and logical X the left column.
struct RscLattice {
  int distance = 0;
  std::vector<GridCoord> data_coords;      // index -> coordinate
  std::vector<Stabilizer> stabilizers;     // d^2 - 1 checks
  std::vector<int> logical_x;              // column 0, weight d
  std::vector<int> logical_z;              // row 0, weight d
  std::array<std::vector<int>, 2> x_boundaries;  // top row, bottom row
  std::array<std::vector<int>, 2> z_boundaries;  // left column, right column
  // stabilizer ids adjacent to each data qubit, split by basis
  std::vector<std::vector<int>> z_checks_on_qubit;
  std::vector<std::vector<int>> x_checks_on_qubit;

  int num_data() const { return distance * distance; }
  int num_stabilizers() const { return static_cast<int>(stabilizers.size()); }
  /// Data qubits plus one ancilla per stabilizer.
  int num_qubits() const { return num_data() + num_stabilizers(); }

  int data_index(int r, int c) const {
    if (r < 0 || c < 0 || r >= distance || c >= distance) return -1;
    return r * distance + c;
  }

  /// The check as a Pauli operator over the d^2 data qubits.
  PauliOperator stabilizer_operator(int id) const;
  /// Logical operator over the data qubits for the requested basis.
  PauliOperator logical_pauli(Basis basis) const;

  const std::vector<int>& checks_on_qubit(int data_qubit, Basis basis) const {
    return basis == Basis::Z ? z_checks_on_qubit[data_qubit] : x_checks_on_qubit[data_qubit];
  }
};

/// Builds the lattice. Rejects even or non-positive distances; d = 1 is
/// accepted as the degenerate single-qubit code.
RscLattice build_lattice(int distance);

/// Qubit index chain for the requested logical operator.
std::vector<int> logical_operator(const RscLattice& lattice, Basis basis);

/// Bus tiling covering every (ancilla, data) gate pair of the extraction
/// circuit. Interior buses couple four qubits; every interior data qubit and
/// every interior ancilla couples to exactly two buses.
BusLayout build_bus_layout(const RscLattice& lattice);

/// Checks every structural invariant and returns one message per violation.
/// An empty report means the lattice is valid.
std::vector<std::string> validate_lattice(const RscLattice& lattice);

}  // namespace rscsim
