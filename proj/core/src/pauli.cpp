#include "rscsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace rscsim {

PauliOperator PauliOperator::single(std::size_t n_qubits, std::size_t qubit, char kind) {
  PauliOperator p(n_qubits);
  if (qubit >= n_qubits) throw std::out_of_range("qubit index out of range");
  switch (kind) {
    case 'X':
      p.set_x(qubit);
      break;
    case 'Z':
      p.set_z(qubit);
      break;
    case 'Y':
      p.set_x(qubit);
      p.set_z(qubit);
      break;
    case 'I':
      break;
    default:
      throw std::invalid_argument("pauli kind must be one of I, X, Y, Z");
  }
  return p;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  if (n_ != other.n_) throw std::invalid_argument("PauliOperator size mismatch");
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  if (n_ != other.n_) throw std::invalid_argument("PauliOperator size mismatch");
  const std::size_t sym =
      BitVec::and_count(x_, other.z_) + BitVec::and_count(z_, other.x_);
  return (sym & 1u) == 0;
}

std::size_t PauliOperator::weight() const {
  std::size_t total = 0;
  auto xw = x_.words();
  auto zw = z_.words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(xw[i] | zw[i]));
  }
  return total;
}

void PauliOperator::apply_cnot(std::size_t control, std::size_t target) {
  if (control >= n_ || target >= n_) throw std::out_of_range("cnot qubit out of range");
  if (control == target) throw std::invalid_argument("cnot control equals target");
  if (x_.test(control)) x_.flip(target);
  if (z_.test(target)) z_.flip(control);
}

char PauliOperator::pauli_at(std::size_t q) const {
  const bool xb = x_.test(q);
  const bool zb = z_.test(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliOperator::to_label() const {
  std::string s;
  s.reserve(n_);
  for (std::size_t q = 0; q < n_; ++q) s.push_back(pauli_at(q));
  return s;
}

}  // namespace rscsim
