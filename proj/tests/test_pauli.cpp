// Pauli-string algebra against an independent dense reference, plus the
// GF(2) helpers underneath it.
#include <gtest/gtest.h>

#include "qcsat/bitmat.hpp"
#include "qcsat/pauli.hpp"
#include "qcsat/rng.hpp"
#include "testutil.hpp"

using namespace qcsat;
using namespace qcsat::testing;

TEST(BitVec, BasicOps) {
  BitVec v(130);
  EXPECT_FALSE(v.any());
  v.set(0, true);
  v.set(129, true);
  EXPECT_TRUE(v.get(0));
  EXPECT_TRUE(v.get(129));
  EXPECT_EQ(v.popcount(), 2u);
  EXPECT_EQ(v.first_set(), 0);
  v.flip(0);
  EXPECT_EQ(v.first_set(), 129);

  BitVec a(70), b(70);
  a.set(3, true);
  a.set(65, true);
  b.set(3, true);
  b.set(64, true);
  EXPECT_TRUE(BitVec::and_parity(a, b));  // overlap only at bit 3
  b.set(65, true);
  EXPECT_FALSE(BitVec::and_parity(a, b));
  EXPECT_EQ((a ^ b).popcount(), 1u);  // only bit 64 differs now
}

TEST(BitVec, GatherConcat) {
  BitVec v(8);
  v.set(1, true);
  v.set(6, true);
  const BitVec g = v.gather({6, 0, 1});
  EXPECT_TRUE(g.get(0));
  EXPECT_FALSE(g.get(1));
  EXPECT_TRUE(g.get(2));
  const BitVec c = v.concat(g);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_TRUE(c.get(6));
  EXPECT_TRUE(c.get(8));
  EXPECT_TRUE(c.get(10));
}

TEST(GF2, RankAndRowReduce) {
  std::vector<BitVec> rows;
  BitVec r1(4), r2(4), r3(4);
  r1.set(0, true);
  r1.set(1, true);
  r2.set(1, true);
  r2.set(2, true);
  r3.set(0, true);
  r3.set(2, true);  // r3 = r1 ^ r2
  rows = {r1, r2, r3};
  EXPECT_EQ(gf2_rank(rows), 2u);
  const auto basis = gf2_row_reduce(rows);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0].first_set(), 0);
  EXPECT_EQ(basis[1].first_set(), 1);
}

TEST(GF2, SolveCombination) {
  BitVec r1(4), r2(4), r3(4);
  r1.set(0, true);
  r1.set(1, true);
  r2.set(1, true);
  r2.set(2, true);
  r3.set(3, true);
  const std::vector<BitVec> rows = {r1, r2, r3};

  BitVec target(4);
  target.set(0, true);
  target.set(2, true);
  target.set(3, true);  // r1 ^ r2 ^ r3
  const auto mask = gf2_solve_combination(rows, target);
  ASSERT_TRUE(mask.has_value());
  BitVec check(4);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (mask->get(i)) check ^= rows[i];
  EXPECT_EQ(check, target);

  BitVec outside(4);
  outside.set(0, true);  // e0 alone is not in the span
  EXPECT_FALSE(gf2_solve_combination(rows, outside).has_value());
}

TEST(GF2, AffineSolveAndKernel) {
  // x0 ^ x1 = 1; x1 ^ x2 = 0  (3 vars, kernel dim 1)
  std::vector<BitVec> lhs(2, BitVec(3));
  lhs[0].set(0, true);
  lhs[0].set(1, true);
  lhs[1].set(1, true);
  lhs[1].set(2, true);
  BitVec rhs(2);
  rhs.set(0, true);
  const auto sys = gf2_solve_affine(lhs, rhs, 3);
  ASSERT_TRUE(sys.has_value());
  EXPECT_NE(sys->particular.get(0), sys->particular.get(1));
  EXPECT_EQ(sys->particular.get(1), sys->particular.get(2));
  ASSERT_EQ(sys->kernel.size(), 1u);
  for (const auto& k : sys->kernel)
    for (const auto& row : lhs) EXPECT_FALSE(BitVec::and_parity(row, k));

  // Inconsistent: x0 = 0 and x0 = 1.
  std::vector<BitVec> bad(2, BitVec(1));
  bad[0].set(0, true);
  bad[1].set(0, true);
  BitVec brhs(2);
  brhs.set(1, true);
  EXPECT_FALSE(gf2_solve_affine(bad, brhs, 1).has_value());
}

TEST(GF2, RandomAffineSystems) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nvars = 1 + rng.below(12);
    const std::size_t neq = 1 + rng.below(12);
    std::vector<BitVec> lhs(neq, BitVec(nvars));
    for (auto& row : lhs)
      for (std::size_t j = 0; j < nvars; ++j) row.set(j, rng.coin());
    // Make a consistent system by picking a ground-truth solution.
    BitVec truth(nvars);
    for (std::size_t j = 0; j < nvars; ++j) truth.set(j, rng.coin());
    BitVec rhs(neq);
    for (std::size_t i = 0; i < neq; ++i)
      rhs.set(i, BitVec::and_parity(lhs[i], truth));
    const auto sys = gf2_solve_affine(lhs, rhs, nvars);
    ASSERT_TRUE(sys.has_value());
    for (std::size_t i = 0; i < neq; ++i)
      EXPECT_EQ(BitVec::and_parity(lhs[i], sys->particular), rhs.get(i));
    for (const auto& k : sys->kernel)
      for (std::size_t i = 0; i < neq; ++i)
        EXPECT_FALSE(BitVec::and_parity(lhs[i], k));
    EXPECT_EQ(sys->kernel.size(), nvars - gf2_rank(lhs));
  }
}

TEST(Pauli, FrozenProducts) {
  const auto X = PauliString::single(1, 0, 'X');
  const auto Y = PauliString::single(1, 0, 'Y');
  const auto Z = PauliString::single(1, 0, 'Z');
  // X * Z = -i Y.
  PauliString xz = X * Z;
  PauliString minus_i_y = Y;
  minus_i_y.mul_phase(3);
  EXPECT_EQ(xz, minus_i_y);
  // (X (x) Z) * (Z (x) Z) = -i (Y (x) I).
  PauliString a(2), b(2);
  a.x.set(0, true);
  a.z.set(1, true);
  b.z.set(0, true);
  b.z.set(1, true);
  const PauliString prod = a * b;
  PauliString expect = PauliString::single(2, 0, 'Y');
  expect.mul_phase(3);
  EXPECT_EQ(prod, expect);
}

TEST(Pauli, ExhaustiveTwoQubitProductsAgainstDense) {
  const auto paulis = all_two_qubit_paulis();
  for (const auto& p : paulis) {
    EXPECT_TRUE(p.is_hermitian());
    for (const auto& q : paulis) {
      const PauliString prod = p * q;
      EXPECT_LT(max_abs_diff(dense_pauli_ref(prod),
                             CMat(dense_pauli_ref(p) * dense_pauli_ref(q))),
                1e-12);
      const CMat pm = dense_pauli_ref(p), qm = dense_pauli_ref(q);
      const bool mat_commute = max_abs_diff(CMat(pm * qm), CMat(qm * pm)) < 1e-12;
      EXPECT_EQ(p.commutes(q), mat_commute);
    }
  }
}

TEST(Pauli, GateConjugationsAgainstDense) {
  struct OneQubit {
    const char* name;
    CMat g;
    void (PauliString::*apply)(std::size_t);
  };
  const OneQubit one_qubit[] = {
      {"h", mat_h(), &PauliString::conj_h},
      {"s", mat_s(), &PauliString::conj_s},
      {"sdg", mat_sdg(), &PauliString::conj_sdg},
      {"x", mat_x(), &PauliString::conj_x},
      {"y", mat_y(), &PauliString::conj_y},
      {"z", mat_z(), &PauliString::conj_z},
  };
  const auto paulis = all_two_qubit_paulis();
  for (const auto& gate : one_qubit) {
    for (std::size_t q = 0; q < 2; ++q) {
      const CMat g = embed(2, gate.g, {q});
      for (const auto& p : paulis) {
        PauliString conj = p;
        (conj.*gate.apply)(q);
        const CMat expect = g * dense_pauli_ref(p) * g.adjoint();
        EXPECT_LT(max_abs_diff(dense_pauli_ref(conj), expect), 1e-12)
            << gate.name << " on qubit " << q << " applied to " << p.str();
      }
    }
  }

  // Two-qubit gates, both orientations.
  for (const auto& p : paulis) {
    for (int flip = 0; flip < 2; ++flip) {
      const std::size_t a = flip, b = 1 - flip;
      PauliString pc = p;
      pc.conj_cx(a, b);
      EXPECT_LT(max_abs_diff(dense_pauli_ref(pc),
                             CMat(embed(2, mat_cx(), {a, b}) *
                                  dense_pauli_ref(p) *
                                  embed(2, mat_cx(), {a, b}).adjoint())),
                1e-12)
          << "cx " << a << "->" << b << " on " << p.str();
      PauliString pz = p;
      pz.conj_cz(a, b);
      EXPECT_LT(max_abs_diff(dense_pauli_ref(pz),
                             CMat(embed(2, mat_cz(), {a, b}) *
                                  dense_pauli_ref(p) *
                                  embed(2, mat_cz(), {a, b}).adjoint())),
                1e-12);
      PauliString ps = p;
      ps.conj_swap(a, b);
      EXPECT_LT(max_abs_diff(dense_pauli_ref(ps),
                             CMat(embed(2, mat_swap(), {a, b}) *
                                  dense_pauli_ref(p) *
                                  embed(2, mat_swap(), {a, b}).adjoint())),
                1e-12);
    }
  }
}

TEST(Pauli, RestrictZero) {
  // P = X (x) Z (x) Y on qubits 0,1,2; pin qubit 1 to |0>.
  PauliString p(3);
  p.x.set(0, true);
  p.z.set(1, true);
  p.phase_exp = 1;
  p.x.set(2, true);
  p.z.set(2, true);
  PauliString r;
  ASSERT_TRUE(p.restrict_zero({false, true, false}, &r));
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.str(), "+XY");
  // Pinning a qubit carrying X gives a zero matrix element.
  EXPECT_FALSE(p.restrict_zero({true, false, false}, &r));
}

TEST(Pauli, StrAndCanonical) {
  EXPECT_EQ(PauliString::single(3, 1, 'Y').str(), "+IYI");
  PauliString p = PauliString::single(2, 0, 'X') * PauliString::single(2, 0, 'Z');
  EXPECT_EQ(p.str(), "-iYI");
  BitVec x(2), z(2);
  x.set(0, true);
  z.set(0, true);
  z.set(1, true);
  const PauliString canon = PauliString::hermitian_canonical(x, z);
  EXPECT_EQ(canon.str(), "+YZ");
  EXPECT_TRUE(canon.is_hermitian());
}

TEST(Pauli, ExtractBitsAndSymplectic) {
  PauliString p(4);
  p.x.set(1, true);
  p.z.set(3, true);
  const PauliString sub = p.extract_bits({3, 1});
  EXPECT_TRUE(sub.z.get(0));
  EXPECT_TRUE(sub.x.get(1));
  const BitVec v = symplectic_vector(p);
  EXPECT_EQ(v.size(), 8u);
  EXPECT_TRUE(v.get(1));   // x part
  EXPECT_TRUE(v.get(7));   // z part offset by n
}
