#include "rscsim/pauli.hpp"

#include "dense_support.hpp"
#include "doctest.h"
#include "rscsim/rng.hpp"

using namespace rscsim;
using namespace rscsim::testing;

namespace {

PauliOperator random_pauli(std::size_t n, RngStream& rng) {
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (rng.next_u64() & 1) p.flip_x(q);
    if (rng.next_u64() & 1) p.flip_z(q);
  }
  return p;
}

}  // namespace

TEST_CASE("product basics") {
  const auto x0 = PauliOperator::single(2, 0, 'X');
  const auto z0 = PauliOperator::single(2, 0, 'Z');

  CHECK((x0 * x0).is_identity());
  const auto y0 = x0 * z0;
  CHECK(y0.pauli_at(0) == 'Y');
  CHECK(y0.pauli_at(1) == 'I');

  CHECK_THROWS_AS(PauliOperator(2) * PauliOperator(3), std::invalid_argument);
}

TEST_CASE("product matches the full-space composition oracle on 9 qubits") {
  RngStream rng{20240811};
  const std::size_t n = 9;
  const std::uint64_t dim = 1ull << n;
  for (int trial = 0; trial < 4; ++trial) {
    const PauliOperator a = random_pauli(n, rng);
    const PauliOperator b = random_pauli(n, rng);
    const PauliOperator ab = a * b;

    const SymbolicPauli sa = symbolic(a);
    const SymbolicPauli sb = symbolic(b);
    const SymbolicPauli sab = symbolic(ab);

    // Compose b then a on every basis state of the 2^9 space and compare
    // against the claimed product's action, up to one global phase.
    int relative_phase = -1;
    for (std::uint64_t basis = 0; basis < dim; ++basis) {
      std::uint64_t mid, out_composed, out_claimed;
      int ph_b, ph_a, ph_claimed;
      sb.apply(basis, mid, ph_b);
      sa.apply(mid, out_composed, ph_a);
      sab.apply(basis, out_claimed, ph_claimed);
      REQUIRE(out_composed == out_claimed);
      const int diff = ((ph_a + ph_b - ph_claimed) % 4 + 4) % 4;
      if (relative_phase < 0) relative_phase = diff;
      REQUIRE(diff == relative_phase);
    }
  }
}

TEST_CASE("product matches dense matrices on small systems") {
  RngStream rng{7};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.uniform_below(3);
    const PauliOperator a = random_pauli(n, rng);
    const PauliOperator b = random_pauli(n, rng);
    CHECK(equal_up_to_phase(mul(dense_pauli(a), dense_pauli(b)), dense_pauli(a * b)));
  }
}

TEST_CASE("commutation") {
  const auto x0 = PauliOperator::single(3, 0, 'X');
  const auto z0 = PauliOperator::single(3, 0, 'Z');
  const auto z1 = PauliOperator::single(3, 1, 'Z');

  CHECK(x0.commutes_with(x0));
  CHECK_FALSE(x0.commutes_with(z0));
  CHECK(x0.commutes_with(z1));

  RngStream rng{99};
  for (int trial = 0; trial < 200; ++trial) {
    const PauliOperator a = random_pauli(5, rng);
    const PauliOperator b = random_pauli(5, rng);
    CHECK(a.commutes_with(b) == b.commutes_with(a));
    CHECK(a.commutes_with(a));
    // Dense cross-check: PQ = +/- QP, sign by the symplectic form.
    const Mat pq = mul(dense_pauli(a), dense_pauli(b));
    const Mat qp = mul(dense_pauli(b), dense_pauli(a));
    Mat neg_qp = qp;
    for (auto& row : neg_qp) {
      for (auto& v : row) v = -v;
    }
    if (a.commutes_with(b)) {
      CHECK(equal_up_to_phase(pq, qp));
    } else {
      CHECK(equal_up_to_phase(pq, neg_qp));
    }
  }
}

TEST_CASE("cnot propagation rules") {
  // X on the control copies onto the target.
  PauliFrame f = PauliOperator::single(2, 0, 'X');
  f.apply_cnot(0, 1);
  CHECK(f.pauli_at(0) == 'X');
  CHECK(f.pauli_at(1) == 'X');

  // Z on the target copies onto the control.
  f = PauliOperator::single(2, 1, 'Z');
  f.apply_cnot(0, 1);
  CHECK(f.pauli_at(0) == 'Z');
  CHECK(f.pauli_at(1) == 'Z');

  CHECK_THROWS_AS(f.apply_cnot(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(f.apply_cnot(0, 5), std::out_of_range);
}

TEST_CASE("cnot propagation matches dense conjugation on 4 qubits") {
  RngStream rng{4242};
  const std::size_t n = 4;
  const Mat u = dense_cnot(n, 1, 3);
  const Mat u_dag = adjoint(u);
  for (int trial = 0; trial < 25; ++trial) {
    const PauliOperator p = random_pauli(n, rng);
    PauliOperator q = p;
    q.apply_cnot(1, 3);
    CHECK(equal_up_to_phase(mul(mul(u, dense_pauli(p)), u_dag), dense_pauli(q)));
  }
}

TEST_CASE("cnot propagation is involutive and preserves commutation") {
  RngStream rng{55};
  for (int trial = 0; trial < 100; ++trial) {
    const PauliOperator f = random_pauli(6, rng);
    const PauliOperator g = random_pauli(6, rng);
    const std::size_t c = rng.uniform_below(6);
    std::size_t t = rng.uniform_below(6);
    if (t == c) t = (t + 1) % 6;

    PauliOperator twice = f;
    twice.apply_cnot(c, t);
    twice.apply_cnot(c, t);
    CHECK(twice == f);

    PauliOperator fp = f, gp = g;
    fp.apply_cnot(c, t);
    gp.apply_cnot(c, t);
    CHECK(f.commutes_with(g) == fp.commutes_with(gp));
  }
}

TEST_CASE("self product is the identity") {
  RngStream rng{123};
  for (int trial = 0; trial < 50; ++trial) {
    const PauliOperator a = random_pauli(17, rng);
    CHECK((a * a).is_identity());
  }
}
