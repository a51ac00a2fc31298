// Circuit model, .qcirc parsing/serialization, and the gadget rewrite.
#include <gtest/gtest.h>

#include <sstream>

#include "qcsat/circuit.hpp"
#include "qcsat/config.hpp"
#include "qcsat/dense.hpp"
#include "qcsat/rng.hpp"
#include "testutil.hpp"

using namespace qcsat;
using namespace qcsat::testing;

TEST(Circuit, ParseBasics) {
  std::istringstream in(R"(# toy instance
qubits 6
witness 0 2..4
ancilla 1 5
output 5
h 0
cx 0 1
rz 0.25 2   # trailing comment
tdg 3
swap 4 5
)");
  const QcsatInstance inst = parse_qcsat(in);
  EXPECT_EQ(inst.circuit.num_qubits, 6u);
  EXPECT_EQ(inst.witness, (std::vector<std::size_t>{0, 2, 3, 4}));
  EXPECT_EQ(inst.ancilla, (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(inst.outputs, (std::vector<std::size_t>{5}));
  ASSERT_EQ(inst.circuit.gates.size(), 5u);
  EXPECT_EQ(inst.circuit.gates[0], Gate::h(0));
  EXPECT_EQ(inst.circuit.gates[1], Gate::cx(0, 1));
  EXPECT_EQ(inst.circuit.gates[2], Gate::rz(0.25, 2));
  EXPECT_EQ(inst.circuit.gates[3], Gate::tdg(3));
  EXPECT_EQ(inst.circuit.gates[4], Gate::swap(4, 5));
  EXPECT_NO_THROW(validate_instance(inst));
  EXPECT_EQ(inst.circuit.t_count(), 2u);
}

TEST(Circuit, RegisterComplementDefaulting) {
  std::istringstream in("qubits 4\nancilla 1 3\noutput 3\nh 0\n");
  const QcsatInstance inst = parse_qcsat(in);
  EXPECT_EQ(inst.witness, (std::vector<std::size_t>{0, 2}));
  EXPECT_NO_THROW(validate_instance(inst));
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
  const auto expect_throw = [](const char* text, const char* needle) {
    std::istringstream in(text);
    try {
      parse_qcsat(in);
      FAIL() << "expected ParseError for: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
          << e.what();
    }
  };
  expect_throw("qubits 2\nh 5\n", "line 2");
  expect_throw("qubits 2\nfrobnicate 0\n", "unknown directive");
  expect_throw("h 0\n", "qubits");
  expect_throw("qubits 2\nqubits 3\n", "duplicate");
  expect_throw("qubits 2\ncx 1 1\n", "distinct");
  expect_throw("qubits 2\nrz fast 0\n", "angle");
  expect_throw("qubits 2\nwitness 3..1\n", "line 2");
}

TEST(Circuit, ValidateInstanceRejectsBadRegisters) {
  QcsatInstance inst;
  inst.circuit = Circuit(2);
  inst.witness = {0};
  inst.ancilla = {0, 1};
  inst.outputs = {1};
  EXPECT_THROW(validate_instance(inst), ParseError);
  inst.ancilla = {1};
  EXPECT_NO_THROW(validate_instance(inst));
  inst.outputs = {};
  EXPECT_THROW(validate_instance(inst), ParseError);
}

TEST(Circuit, SerializeRoundTrip) {
  QcsatInstance inst;
  inst.circuit = Circuit(3);
  inst.witness = {2, 0};
  inst.ancilla = {1};
  inst.outputs = {1};
  inst.circuit.append(Gate::rz(-1.2345678901234567, 0));
  inst.circuit.append(Gate::cz(2, 1));
  inst.circuit.append(Gate::sdg(2));
  const std::string text = serialize_qcsat(inst);
  std::istringstream in(text);
  const QcsatInstance back = parse_qcsat(in);
  EXPECT_EQ(back.circuit.num_qubits, inst.circuit.num_qubits);
  EXPECT_EQ(back.circuit.gates, inst.circuit.gates);
  EXPECT_EQ(back.witness, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(serialize_qcsat(back), text);  // normalized form is a fixed point
}

TEST(Circuit, DaggerSequenceInvertsDense) {
  Rng rng(31);
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::t(1));
  c.append(Gate::rz(0.7, 2));
  c.append(Gate::cx(0, 2));
  c.append(Gate::s(1));
  Circuit inv(3);
  inv.gates = dagger_sequence(c.gates);
  const CMat u = circuit_unitary(c), v = circuit_unitary(inv);
  EXPECT_LT(max_abs_diff(CMat(v * u), CMat(CMat::Identity(8, 8))), 1e-12);
}

// The load-bearing identity: replacing each phase gate by a CNOT onto a fresh
// qubit that consumes |A_theta> and post-selects |0> reproduces the original
// circuit's action, with amplitude sqrt(2)^{-t} (so probabilities scale 2^t).
TEST(Circuit, GadgetizeReproducesCircuitAction) {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    Circuit c(n);
    for (int i = 0; i < 14; ++i) {
      const auto q = static_cast<std::uint32_t>(rng.below(n));
      auto r = static_cast<std::uint32_t>(rng.below(n));
      while (r == q) r = static_cast<std::uint32_t>(rng.below(n));
      switch (rng.below(7)) {
        case 0: c.append(Gate::h(q)); break;
        case 1: c.append(Gate::s(q)); break;
        case 2: c.append(Gate::cx(q, r)); break;
        case 3: c.append(Gate::t(q)); break;
        case 4: c.append(Gate::tdg(q)); break;
        case 5: c.append(Gate::rz(rng.uniform() * 6.28 - 3.14, q)); break;
        default: c.append(Gate::cz(q, r)); break;
      }
    }
    const GadgetizedCircuit gc = gadgetize(c);
    const std::size_t t = gc.angles.size();
    ASSERT_EQ(t, c.t_count());
    ASSERT_TRUE(gc.clifford.is_clifford_only());

    // Random input on the base register, |A_theta> states on the gadgets.
    const auto amps = rng.haar_state(std::size_t{1} << n);
    CVec full = CVec::Zero(std::int64_t{1} << (n + t));
    for (std::size_t b = 0; b < (std::size_t{1} << (n + t)); ++b) {
      std::complex<double> a = amps[b & ((std::size_t{1} << n) - 1)];
      for (std::size_t j = 0; j < t; ++j) {
        const bool hi = (b >> (n + j)) & 1u;
        a *= (hi ? std::polar(1.0, gc.angles[j]) : 1.0) / std::sqrt(2.0);
      }
      full[static_cast<std::int64_t>(b)] = a;
    }
    const CVec evolved = apply_circuit_dense(gc.clifford, full);

    // Project gadgets onto |0>, rescale by sqrt(2)^t, compare to the direct
    // evolution of the original circuit.
    CVec base_in(std::int64_t{1} << n);
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b)
      base_in[static_cast<std::int64_t>(b)] = amps[b];
    const CVec direct = apply_circuit_dense(c, base_in);
    const double scale = std::pow(std::sqrt(2.0), static_cast<double>(t));
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b)
      EXPECT_LT(std::abs(scale * evolved[static_cast<std::int64_t>(b)] -
                         direct[static_cast<std::int64_t>(b)]),
                1e-9);
  }
}
