// Heisenberg-propagation solver: basis width bound, dense reconstruction,
// ancilla projection, commutation-preserving compression, and the
// (1 - lambda_min)/2 value extraction, checked against the dense oracle and
// the stabilizer-reduction solver.
#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qcsat/config.hpp"
#include "qcsat/dense.hpp"
#include "qcsat/pauli_sum.hpp"
#include "qcsat/rng.hpp"
#include "qcsat/solver.hpp"
#include "qcsat/tableau.hpp"

namespace qcsat {
namespace {

using Complex = std::complex<double>;

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

Gate random_clifford_gate(Rng& rng, std::size_t n) {
  const std::size_t q = rng.below(n);
  if (n >= 2 && rng.below(3) == 0) {
    std::size_t r = rng.below(n - 1);
    if (r >= q) ++r;
    switch (rng.below(3)) {
      case 0: return Gate::cx(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r));
      case 1: return Gate::cz(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r));
      default: return Gate::swap(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r));
    }
  }
  switch (rng.below(6)) {
    case 0: return Gate::h(static_cast<std::uint32_t>(q));
    case 1: return Gate::s(static_cast<std::uint32_t>(q));
    case 2: return Gate::sdg(static_cast<std::uint32_t>(q));
    case 3: return Gate::x(static_cast<std::uint32_t>(q));
    case 4: return Gate::y(static_cast<std::uint32_t>(q));
    default: return Gate::z(static_cast<std::uint32_t>(q));
  }
}

Gate random_rotation_gate(Rng& rng, std::size_t n) {
  const auto q = static_cast<std::uint32_t>(rng.below(n));
  switch (rng.below(3)) {
    case 0: return Gate::t(q);
    case 1: return Gate::tdg(q);
    default: return Gate::rz(0.1 + 6.0 * rng.uniform(), q);
  }
}

Circuit random_circuit(Rng& rng, std::size_t n, std::size_t t,
                       std::size_t cliffords) {
  Circuit c;
  c.num_qubits = n;
  for (std::size_t i = 0; i < cliffords; ++i)
    c.gates.push_back(random_clifford_gate(rng, n));
  for (std::size_t i = 0; i < t; ++i)
    c.gates.push_back(random_rotation_gate(rng, n));
  shuffle_vec(c.gates, rng);
  return c;
}

// Random single-output instance; witness size ranges over [0, total] so m = 0
// and n = 0 corner registers both appear.
QcsatInstance random_single_output(Rng& rng, std::size_t max_total,
                                   std::size_t max_t, std::size_t max_gates) {
  const std::size_t total = 2 + rng.below(max_total - 1);
  const std::size_t t = rng.below(max_t + 1);
  const std::size_t cliffords = rng.below(max_gates - t + 1);
  QcsatInstance inst;
  inst.circuit = random_circuit(rng, total, t, cliffords);
  std::vector<std::size_t> ids(total);
  for (std::size_t q = 0; q < total; ++q) ids[q] = q;
  shuffle_vec(ids, rng);
  const std::size_t nw = rng.below(total + 1);
  inst.witness.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(nw));
  inst.ancilla.assign(ids.begin() + static_cast<std::ptrdiff_t>(nw), ids.end());
  std::sort(inst.witness.begin(), inst.witness.end());
  std::sort(inst.ancilla.begin(), inst.ancilla.end());
  inst.outputs = {rng.below(total)};
  validate_instance(inst);
  return inst;
}

// Independent oracle: U^dag Z_out U evaluated densely.
CMat dense_heisenberg(const Circuit& c, std::size_t out) {
  const CMat u = circuit_unitary(c);
  const CMat z = dense_pauli(PauliString::single(c.num_qubits, out, 'Z'));
  return u.adjoint() * z * u;
}

// Independent oracle: <0_A| O |0_A> by index slicing (kept qubits ascending).
CMat dense_restrict(const CMat& op, std::size_t n,
                    const std::vector<std::size_t>& ancilla) {
  std::vector<bool> drop(n, false);
  for (const std::size_t q : ancilla) drop[q] = true;
  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q < n; ++q)
    if (!drop[q]) kept.push_back(q);
  const std::size_t dim = std::size_t{1} << kept.size();
  const auto scatter = [&](std::size_t idx) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (idx >> i & 1u) full |= std::size_t{1} << kept[i];
    return full;
  };
  CMat out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t col = 0; col < dim; ++col)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
          op(static_cast<Eigen::Index>(scatter(r)),
             static_cast<Eigen::Index>(scatter(col)));
  return out;
}

// Every eigenvalue of each matrix appears among the other's (set equality,
// multiplicities may differ when the dimensions do).
void expect_same_eigenvalue_set(const CMat& a, const CMat& b, double tol) {
  Eigen::SelfAdjointEigenSolver<CMat> ea(a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<CMat> eb(b, Eigen::EigenvaluesOnly);
  const auto check = [&](const Eigen::VectorXd& from, const Eigen::VectorXd& to) {
    for (Eigen::Index i = 0; i < from.size(); ++i) {
      double best = 1e300;
      for (Eigen::Index j = 0; j < to.size(); ++j)
        best = std::min(best, std::abs(from[i] - to[j]));
      EXPECT_LE(best, tol);
    }
  };
  check(ea.eigenvalues(), eb.eigenvalues());
  check(eb.eigenvalues(), ea.eigenvalues());
}

bool symplectically_independent(const std::vector<PauliString>& basis) {
  std::vector<BitVec> rows;
  for (const auto& p : basis) {
    BitVec v = symplectic_vector(p);
    for (const auto& r : rows) {
      const int piv = r.first_set();
      if (piv >= 0 && v.get(static_cast<std::size_t>(piv))) v ^= r;
    }
    if (!v.any()) return false;
    rows.push_back(v);
  }
  return true;
}

QcsatInstance hth_instance() {
  QcsatInstance inst;
  inst.circuit.num_qubits = 2;
  inst.circuit.gates = {Gate::h(1), Gate::t(1), Gate::h(1)};
  inst.witness = {0};
  inst.ancilla = {1};
  inst.outputs = {1};
  return inst;
}

TEST(TermPauli, OrderedProductTracksExactPhases) {
  TermSum sum;
  sum.num_qubits = 1;
  sum.basis = {PauliString::single(1, 0, 'X'), PauliString::single(1, 0, 'Z')};
  const PauliString xz = term_pauli(sum, 3);
  EXPECT_EQ(xz.str(), "-iY");
  const CMat direct = dense_pauli(sum.basis[0]) * dense_pauli(sum.basis[1]);
  EXPECT_LT((dense_pauli(xz) - direct).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(term_pauli(sum, 0).str(), "+I");
  EXPECT_THROW((void)term_pauli(sum, 4), std::logic_error);
}

TEST(Propagate, CliffordOnlyGivesOneConjugatedPauliTerm) {
  Rng rng(0xA11CE5u);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    QcsatInstance inst;
    inst.circuit = random_circuit(rng, n, 0, rng.below(31));
    for (std::size_t q = 0; q < n; ++q) inst.witness.push_back(q);
    inst.outputs = {rng.below(n)};
    const TermSum sum = propagate(inst);
    ASSERT_EQ(sum.basis.size(), 1u);
    ASSERT_EQ(sum.terms.size(), 1u);
    const Complex coeff = sum.terms.at(1);
    EXPECT_DOUBLE_EQ(std::abs(coeff), 1.0);
    EXPECT_DOUBLE_EQ(coeff.imag(), 0.0);
    // U^dag Z U equals conjugation through the inverse tableau.
    const CliffordTableau tab = CliffordTableau::from_circuit(inst.circuit);
    const PauliString expected = tab.inverse().conjugate_pauli(
        PauliString::single(n, inst.outputs[0], 'Z'));
    PauliString got = sum.basis[0];
    if (coeff.real() < 0.0) got.negate();
    EXPECT_EQ(got, expected);
  }
}

TEST(Propagate, RotationThenHadamardSplitsIntoTwoTerms) {
  const double theta = 0.7;
  QcsatInstance inst;
  inst.circuit.num_qubits = 1;
  inst.circuit.gates = {Gate::rz(theta, 0), Gate::h(0)};
  inst.witness = {0};
  inst.outputs = {0};
  const TermSum sum = propagate(inst);
  EXPECT_EQ(sum.basis.size(), 2u);
  EXPECT_EQ(sum.terms.size(), 2u);
  // U^dag Z U = cos(theta) X - sin(theta) Y = [[0, e^{i theta}], [e^{-i theta}, 0]].
  CMat expected(2, 2);
  expected << Complex{0, 0}, std::polar(1.0, theta),
      std::polar(1.0, -theta), Complex{0, 0};
  EXPECT_LT((dense_term_sum(sum) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Propagate, DiagonalRotationOnOutputCommutes) {
  QcsatInstance inst;
  inst.circuit.num_qubits = 1;
  inst.circuit.gates = {Gate::t(0)};
  inst.witness = {0};
  inst.outputs = {0};
  const TermSum sum = propagate(inst);
  EXPECT_EQ(sum.basis.size(), 1u);
  EXPECT_EQ(sum.terms.size(), 1u);
  EXPECT_EQ(sum.basis[0], PauliString::single(1, 0, 'Z'));
  EXPECT_EQ(sum.terms.at(1), Complex(1.0, 0.0));
}

TEST(Propagate, RotationOutsideLightConeLeavesSumAlone) {
  QcsatInstance inst;
  inst.circuit.num_qubits = 3;
  inst.circuit.gates = {Gate::h(1), Gate::t(1), Gate::cx(1, 2), Gate::t(2)};
  inst.witness = {0, 1, 2};
  inst.outputs = {0};
  const TermSum sum = propagate(inst);
  EXPECT_EQ(sum.basis.size(), 1u);
  EXPECT_EQ(sum.terms.size(), 1u);
  EXPECT_EQ(sum.basis[0], PauliString::single(3, 0, 'Z'));
  EXPECT_EQ(predict_width(inst), 1u);
}

TEST(Propagate, PruneFlagControlsNumericallyZeroTerms) {
  // cos(pi/2) ~ 6e-17 < kCoeffPrune: the cosine branch survives only with
  // pruning disabled, and either way the reconstruction is correct.
  QcsatInstance inst;
  inst.circuit.num_qubits = 1;
  inst.circuit.gates = {Gate::rz(M_PI / 2, 0), Gate::h(0)};
  inst.witness = {0};
  inst.outputs = {0};
  const TermSum pruned = propagate(inst, true);
  const TermSum full = propagate(inst, false);
  EXPECT_EQ(pruned.terms.size(), 1u);
  EXPECT_EQ(full.terms.size(), 2u);
  const CMat oracle = dense_heisenberg(inst.circuit, 0);
  EXPECT_LT((dense_term_sum(pruned) - oracle).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((dense_term_sum(full) - oracle).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Propagate, RequiresExactlyOneOutputQubit) {
  QcsatInstance inst;
  inst.circuit.num_qubits = 2;
  inst.witness = {0, 1};
  inst.outputs = {0, 1};
  EXPECT_THROW((void)propagate(inst), std::invalid_argument);
  EXPECT_THROW((void)predict_width(inst), std::invalid_argument);
  EXPECT_THROW((void)solve_appendix(inst), std::invalid_argument);
}

TEST(Propagate, WidthBoundHermitianBasisAndMaskHygiene) {
  Rng rng(0xB0B57EADu);
  for (int trial = 0; trial < 200; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 8, 6, 40);
    const std::size_t t = inst.circuit.t_count();
    const TermSum sum = propagate(inst);
    ASSERT_LE(sum.basis.size(), t + 1);
    ASSERT_TRUE(symplectically_independent(sum.basis));
    for (const auto& b : sum.basis) ASSERT_TRUE(b.is_hermitian());
    ASSERT_LE(sum.terms.size(), std::size_t{1} << sum.basis.size());
    for (const auto& [mask, coeff] : sum.terms) {
      ASSERT_EQ(mask >> sum.basis.size(), 0u);
      ASSERT_GE(std::abs(coeff), kCoeffPrune);
    }
  }
}

TEST(Propagate, ReconstructsHeisenbergObservableDensely) {
  Rng rng(0xD15EA5Eu);
  for (int trial = 0; trial < 40; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 5, 3, 25);
    const TermSum sum = propagate(inst);
    const CMat oracle = dense_heisenberg(inst.circuit, inst.outputs[0]);
    ASSERT_LT((dense_term_sum(sum) - oracle).cwiseAbs().maxCoeff(), 1e-10)
        << "trial " << trial;
  }
}

TEST(PredictWidth, AlwaysEqualsPropagatedBasisSize) {
  Rng rng(0x77D7Bu);
  for (int trial = 0; trial < 150; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 7, 6, 35);
    ASSERT_EQ(predict_width(inst), propagate(inst).basis.size());
  }
}

TEST(PredictWidth, IndependentRotationLadderReachesTPlusOne) {
  // Processed right-to-left the gates read h(0), t(0), cx(0,1), t(1), ...:
  // every rotation sees an X component on a fresh qubit whose Z is outside
  // the span, so each of the t rotations appends one basis element.
  const std::size_t t = 5;
  QcsatInstance inst;
  inst.circuit.num_qubits = t;
  std::vector<Gate> processed = {Gate::h(0), Gate::t(0)};
  for (std::uint32_t j = 0; j + 1 < t; ++j) {
    processed.push_back(Gate::cx(j, j + 1));
    processed.push_back(Gate::t(j + 1));
  }
  inst.circuit.gates.assign(processed.rbegin(), processed.rend());
  for (std::size_t q = 0; q < t; ++q) inst.witness.push_back(q);
  inst.outputs = {0};
  EXPECT_EQ(inst.circuit.t_count(), t);
  EXPECT_EQ(predict_width(inst), t + 1);
  const TermSum sum = propagate(inst);
  EXPECT_EQ(sum.basis.size(), t + 1);
  EXPECT_EQ(sum.terms.size(), std::size_t{1} << t);
}

TEST(PredictWidth, PolynomialOnWideCircuits) {
  Rng rng(0x40404u);
  QcsatInstance inst;
  inst.circuit = random_circuit(rng, 40, 4, 400);
  for (std::size_t q = 0; q < 40; ++q) inst.witness.push_back(q);
  inst.outputs = {7};
  const std::size_t b = predict_width(inst);
  EXPECT_LE(b, 5u);
  EXPECT_GE(b, 1u);
}

TEST(ProjectAncillas, EmptyAncillaListIsIdentity) {
  Rng rng(0x1D1D1Du);
  const QcsatInstance inst = random_single_output(rng, 5, 3, 20);
  const TermSum sum = propagate(inst);
  const TermSum same = project_ancillas(sum, {});
  EXPECT_EQ(same.num_qubits, sum.num_qubits);
  EXPECT_EQ(same.basis, sum.basis);
  EXPECT_EQ(same.terms, sum.terms);
}

TEST(ProjectAncillas, PinnedSingleTermBehaviour) {
  // Z (x) Z survives with its coefficient; X on an ancilla annihilates.
  TermSum zz;
  zz.num_qubits = 2;
  zz.basis = {PauliString::single(2, 0, 'Z') * PauliString::single(2, 1, 'Z')};
  zz.terms = {{1, Complex{0.25, 0.0}}};
  const TermSum zw = project_ancillas(zz, {1});
  ASSERT_EQ(zw.num_qubits, 1u);
  ASSERT_EQ(zw.terms.size(), 1u);
  ASSERT_EQ(zw.basis.size(), 1u);
  EXPECT_EQ(zw.basis[0], PauliString::single(1, 0, 'Z'));
  EXPECT_EQ(zw.terms.at(1), Complex(0.25, 0.0));

  TermSum xa;
  xa.num_qubits = 2;
  xa.basis = {PauliString::single(2, 1, 'X')};
  xa.terms = {{1, Complex{1.0, 0.0}}};
  const TermSum zero = project_ancillas(xa, {1});
  EXPECT_EQ(zero.num_qubits, 1u);
  EXPECT_TRUE(zero.terms.empty());
  EXPECT_TRUE(zero.basis.empty());
  EXPECT_LT(dense_term_sum(zero).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ProjectAncillas, MatchesDenseRestrictionOracle) {
  Rng rng(0xFEED5EEDu);
  int nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    QcsatInstance inst = random_single_output(rng, 6, 3, 25);
    if (inst.ancilla.empty()) continue;
    const TermSum sum = propagate(inst);
    const TermSum proj = project_ancillas(sum, inst.ancilla);
    ASSERT_TRUE(symplectically_independent(proj.basis));
    const CMat oracle = dense_restrict(
        dense_heisenberg(inst.circuit, inst.outputs[0]),
        inst.circuit.num_qubits, inst.ancilla);
    ASSERT_LT((dense_term_sum(proj) - oracle).cwiseAbs().maxCoeff(), 1e-10)
        << "trial " << trial;
    if (!proj.terms.empty()) ++nonempty;
  }
  EXPECT_GE(nonempty, 10);
}

TEST(Compress, PinnedTinyCases) {
  // One Z on a wide register compresses to the 2x2 matrix c * Z.
  TermSum one;
  one.num_qubits = 6;
  one.basis = {PauliString::single(6, 3, 'Z')};
  one.terms = {{1, Complex{2.5, 0.0}}};
  const CMat h = compress(one);
  ASSERT_EQ(h.rows(), 2);
  EXPECT_LT((h - 2.5 * dense_pauli(PauliString::single(1, 0, 'Z')))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);

  // a X + b Z on one qubit: compressed spectrum stays {+-sqrt(a^2 + b^2)}.
  TermSum pair;
  pair.num_qubits = 1;
  pair.basis = {PauliString::single(1, 0, 'X'), PauliString::single(1, 0, 'Z')};
  pair.terms = {{1, Complex{0.6, 0.0}}, {2, Complex{-0.8, 0.0}}};
  expect_same_eigenvalue_set(compress(pair), dense_term_sum(pair), 1e-12);

  // A negative-signed basis element must carry its sign into the mapping.
  TermSum neg;
  neg.num_qubits = 1;
  PauliString mz = PauliString::single(1, 0, 'Z');
  mz.negate();
  neg.basis = {mz};
  neg.terms = {{1, Complex{1.0, 0.0}}};
  EXPECT_LT((compress(neg) + dense_pauli(PauliString::single(1, 0, 'Z')))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(Compress, RejectsDependentBasisAndOversizedWidth) {
  TermSum dep;
  dep.num_qubits = 2;
  dep.basis = {PauliString::single(2, 0, 'Z'), PauliString::single(2, 0, 'Z')};
  dep.terms = {{3, Complex{1.0, 0.0}}};
  EXPECT_THROW((void)compress(dep), std::invalid_argument);

  TermSum wide;
  wide.num_qubits = kCompressCap + 1;
  std::uint64_t all = 0;
  for (std::size_t q = 0; q < kCompressCap + 1; ++q) {
    wide.basis.push_back(PauliString::single(kCompressCap + 1, q, 'Z'));
    all |= std::uint64_t{1} << q;
  }
  wide.terms = {{all, Complex{1.0, 0.0}}};
  EXPECT_THROW((void)compress(wide), CapExceeded);

  // Width counts only basis elements referenced by terms: the same wide
  // basis with a narrow term set compresses fine.
  wide.terms = {{3, Complex{1.0, 0.0}}};
  EXPECT_EQ(compress(wide).rows(), 4);
}

TEST(Compress, SpectrumSetMatchesRepresentedOperator) {
  Rng rng(0xC0C0C0u);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 6, 3, 25);
    const TermSum proj = project_ancillas(propagate(inst), inst.ancilla);
    if (proj.num_qubits > kDenseUnitaryCap) continue;
    const CMat h = compress(proj);
    ASSERT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    expect_same_eigenvalue_set(h, dense_term_sum(proj), 1e-8);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(SolveAppendix, PinnedValues) {
  // H T H on the output ancilla: Val = (2 - sqrt(2)) / 4.
  const ValEstimate hth = solve_appendix(hth_instance());
  EXPECT_NEAR(hth.value.to_double(), (2.0 - std::sqrt(2.0)) / 4.0, 1e-12);
  EXPECT_EQ(hth.mode, ValMode::Exact);

  // m = 0, single-qubit T: lambda_min(U^dag Z U) = -1, so Val = 1.
  QcsatInstance tonly;
  tonly.circuit.num_qubits = 1;
  tonly.circuit.gates = {Gate::t(0)};
  tonly.witness = {0};
  tonly.outputs = {0};
  EXPECT_NEAR(solve_appendix(tonly).value.to_double(), 1.0, 1e-15);

  EXPECT_THROW((void)solve_appendix(hth_instance(), 0.0), std::invalid_argument);
  EXPECT_THROW((void)solve_appendix(hth_instance(), 1.0), std::invalid_argument);
}

TEST(SolveAppendix, CliffordInstancesStayDyadicAndMatchExactSolver) {
  Rng rng(0x5AFE5AFEu);
  for (int trial = 0; trial < 15; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 6, 0, 30);
    const ValEstimate appendix = solve_appendix(inst);
    const ValEstimate exact = exact_val(inst);
    ASSERT_NEAR(appendix.value.to_double(), exact.value.to_double(), 1e-12);
    const double v = appendix.value.to_double();
    // Single-output Clifford values are 0, 1/2, or 1.
    ASSERT_TRUE(v == 0.0 || v == 0.5 || v == 1.0) << "value " << v;
  }
}

TEST(SolveAppendix, AgreesWithStabilizerReductionSolver) {
  Rng rng(0xAB5EED99u);
  for (int trial = 0; trial < 60; ++trial) {
    const QcsatInstance inst = random_single_output(rng, 7, 3, 30);
    const double appendix = solve_appendix(inst).value.to_double();
    const double exact = exact_val(inst).value.to_double();
    ASSERT_NEAR(appendix, exact, 1e-6) << "trial " << trial;
  }
}

TEST(SolveAppendix, WideInstanceRunsAtPolynomialWidth) {
  Rng rng(0xBEEFCAFEu);
  QcsatInstance inst;
  inst.circuit = random_circuit(rng, 40, 4, 400);
  std::vector<std::size_t> ids(40);
  for (std::size_t q = 0; q < 40; ++q) ids[q] = q;
  shuffle_vec(ids, rng);
  inst.witness.assign(ids.begin(), ids.begin() + 20);
  inst.ancilla.assign(ids.begin() + 20, ids.end());
  std::sort(inst.witness.begin(), inst.witness.end());
  std::sort(inst.ancilla.begin(), inst.ancilla.end());
  inst.outputs = {ids[0]};
  const double v = solve_appendix(inst).value.to_double();
  EXPECT_GE(v, 0.0);
  EXPECT_LE(v, 1.0);
}

}  // namespace
}  // namespace qcsat
