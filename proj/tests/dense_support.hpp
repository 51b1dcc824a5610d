#pragma once

// Test-only dense linear-algebra helpers used as independent oracles for the
// bit-packed Pauli algebra.

#include <complex>
#include <cstdint>
#include <vector>

#include "rscsim/pauli.hpp"

namespace rscsim::testing {

using Complex = std::complex<double>;
using Mat = std::vector<std::vector<Complex>>;

inline Mat identity(std::size_t n) {
  Mat m(n, std::vector<Complex>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Complex>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == Complex{0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline Mat adjoint(const Mat& a) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  }
  return c;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size(), nb = b.size();
  Mat c(na * nb, std::vector<Complex>(na * nb, 0.0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return c;
}

inline Mat pauli_matrix_1q(char kind) {
  switch (kind) {
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    default: return identity(2);
  }
}

/// Dense matrix of an n-qubit Pauli; qubit 0 is the least significant bit.
inline Mat dense_pauli(const rscsim::PauliOperator& p) {
  Mat m = identity(1);
  for (std::size_t q = p.num_qubits(); q-- > 0;) {
    m = kron(m, pauli_matrix_1q(p.pauli_at(q)));
  }
  return m;
}

/// Dense CNOT(control, target) on n qubits, qubit 0 least significant.
inline Mat dense_cnot(std::size_t n, std::size_t control, std::size_t target) {
  const std::size_t dim = std::size_t{1} << n;
  Mat m(dim, std::vector<Complex>(dim, 0.0));
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t out = b;
    if ((b >> control) & 1u) out ^= std::size_t{1} << target;
    m[out][b] = 1.0;
  }
  return m;
}

/// a == phase * b for a single unit-modulus phase across all entries.
inline bool equal_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9) {
  const std::size_t n = a.size();
  Complex phase{0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool za = std::abs(a[i][j]) < tol;
      const bool zb = std::abs(b[i][j]) < tol;
      if (za != zb) return false;
      if (za) continue;
      const Complex ratio = a[i][j] / b[i][j];
      if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
      if (phase == Complex{0.0}) {
        phase = ratio;
      } else if (std::abs(ratio - phase) > tol) {
        return false;
      }
    }
  }
  return true;
}

/// Phase-tracked symbolic Pauli i^s X^x Z^z acting on computational basis
/// states; an independent route to products on spaces too large for dense
/// matrices.
struct SymbolicPauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase_pow = 0;  // power of i, mod 4

  /// P |b> = i^phase * |b ^ x>, with the Z-part sign folded into phase.
  void apply(std::uint64_t b, std::uint64_t& out, int& phase) const {
    phase = (phase_pow + 2 * __builtin_popcountll(z & b)) % 4;
    out = b ^ x;
  }
};

inline SymbolicPauli symbolic(const rscsim::PauliOperator& p) {
  SymbolicPauli s;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.x(q)) s.x |= std::uint64_t{1} << q;
    if (p.z(q)) s.z |= std::uint64_t{1} << q;
  }
  return s;
}

}  // namespace rscsim::testing
