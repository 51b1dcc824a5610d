#pragma once

#include <cstddef>
#include <string>

#include "rscsim/bitvec.hpp"

namespace rscsim {

enum class Basis { Z, X };

inline const char* to_string(Basis b) { return b == Basis::Z ? "Z" : "X"; }
inline Basis other(Basis b) { return b == Basis::Z ? Basis::X : Basis::Z; }

/// Phase-free n-qubit Pauli operator in symplectic form: qubit i carries an X
/// factor iff x(i), a Z factor iff z(i), and Y iff both. Global phases are
/// dropped throughout; syndrome and logical parities never depend on them.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n_qubits) : n_(n_qubits), x_(n_qubits), z_(n_qubits) {}

  static PauliOperator single(std::size_t n_qubits, std::size_t qubit, char kind);

  std::size_t num_qubits() const { return n_; }

  bool x(std::size_t q) const { return x_.test(q); }
  bool z(std::size_t q) const { return z_.test(q); }
  void set_x(std::size_t q, bool v = true) { x_.set(q, v); }
  void set_z(std::size_t q, bool v = true) { z_.set(q, v); }
  void flip_x(std::size_t q) { x_.flip(q); }
  void flip_z(std::size_t q) { z_.flip(q); }

  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }

  /// Group product with phases dropped: componentwise XOR of both bit planes.
  /// Associative, commutative in this representation, and self-inverse.
  PauliOperator& operator*=(const PauliOperator& other);
  friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) {
    a *= b;
    return a;
  }

  /// True iff the symplectic form sum_i (x_i z'_i + z_i x'_i) is even.
  bool commutes_with(const PauliOperator& other) const;

  /// Number of qubits carrying a non-identity factor.
  std::size_t weight() const;
  bool is_identity() const { return x_.none() && z_.none(); }

  /// Clifford conjugation by CNOT(control, target): X on the control copies
  /// onto the target, Z on the target copies onto the control. Involutive.
  void apply_cnot(std::size_t control, std::size_t target);

  void clear_qubit(std::size_t q) {
    x_.set(q, false);
    z_.set(q, false);
  }

  char pauli_at(std::size_t q) const;
  std::string to_label() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::size_t n_ = 0;
  BitVec x_;
  BitVec z_;
};

/// The Pauli frame is the classical record of accumulated physical errors and
/// decoder corrections. Same representation as an operator; corrections
/// compose by XOR and are never applied to the simulated hardware.
using PauliFrame = PauliOperator;

inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }
inline bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return a.commutes_with(b);
}
inline PauliFrame propagate_through_cnot(PauliFrame frame, std::size_t control,
                                         std::size_t target) {
  frame.apply_cnot(control, target);
  return frame;
}

}  // namespace rscsim
