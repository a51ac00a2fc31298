// Non-identity check (NIC): given a circuit U and thresholds beta < alpha
// with the promise that d(U) = min_phi ||U - e^{i phi} I|| is either >= alpha
// or <= beta, decide which.
//
// Two deciders:
//  - decide_nic_clifford: exact polynomial-time trace method for all-Clifford
//    circuits. Tr((2I - C - C^dag)^p) is a signed-integer combination of
//    Clifford traces Tr(C^i), each computable exactly through stabilizer
//    inner products, so the decision never touches floating point.
//  - decide_nic_lightcone: for constant-depth circuits over an exactly
//    specified gate set, U is a phase times the identity iff every qubit's
//    causal-cone subcircuit is; each cone is small enough to check densely.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/stab_state.hpp"
#include "qcsat/tableau.hpp"

namespace qcsat {

// Exact real number a + b*sqrt(2) with rational coefficients. Closed under
// the arithmetic this module needs, and sign/comparison are exact.
struct QuadraticReal {
  mpq_class a = 0;
  mpq_class b = 0;

  // -1, 0, +1.
  int sign() const;
  double to_double() const;
  // Exact decimal-free rendering, e.g. "3/4 + 5*sqrt(2)".
  std::string str() const;

  friend QuadraticReal operator-(const QuadraticReal& x,
                                 const QuadraticReal& y) {
    return {x.a - y.a, x.b - y.b};
  }
  bool operator==(const QuadraticReal&) const = default;
};

// sign(x - y).
int compare(const QuadraticReal& x, const QuadraticReal& y);

struct NicInstance {
  Circuit circuit;
  double alpha = 0.0;  // yes threshold (far from identity)
  double beta = 0.0;   // no threshold (close to identity)
  std::optional<std::size_t> depth_bound;
};

// Exact trace of the circuit as written (global phase included):
// Tr(U) = 2^n <Phi| I (x) U |Phi> with |Phi> the maximally entangled state
// on 2n qubits, evaluated as an exact stabilizer inner product.
ExactComplex clifford_trace(const Circuit& c);

// A tableau fixes the unitary only up to a global eighth-root-of-unity
// phase, so this overload canonicalizes: the representative U is chosen so
// that the amplitude <x0|U|0...0> at the lexicographically smallest support
// point x0 is a positive real. Deterministic and compile-independent.
ExactComplex clifford_trace(const CliffordTableau& t);

// Coefficients a_{-p..p} of (2 - x - x^{-1})^p, index i at position p + i.
// Built by repeated multiplication; exact integers (magnitudes reach
// binomial(2p, p)).
std::vector<mpz_class> power_coefficients(unsigned p);

// Tr((2I - C - C^dag)^p) for the circuit as written: sum of a_i Tr(C^i)
// with C^i accumulated by repeated gate application (positive powers) and
// repeated application of the daggered gate list (negative powers), so all
// powers carry coherent global phases. Exact; always real and >= 0.
QuadraticReal trace_h_power(const Circuit& c, unsigned p);

// Same, for the canonical phase representative of the tableau.
QuadraticReal trace_h_power(const CliffordTableau& t, unsigned p);

struct NicCliffordResult {
  bool yes = false;
  unsigned p = 0;
  // min over the eight global phases w^k of Tr((2I - w^{-k}C - w^k C^dag)^p);
  // this is the quantity compared against the thresholds.
  QuadraticReal trace;
  QuadraticReal yes_threshold;  // alpha^{2p}
  QuadraticReal no_threshold;   // 2^n * beta^{2p}
};

// Exact decider for all-Clifford circuits. Picks the minimal p
// with alpha^{2p} >= 2^{n+1} beta^{2p} (p = 1 when beta = 0; error if the
// gap needs p > 64n). Because d minimizes over the global phase, the trace
// statistic is minimized over the eight realizable Clifford phases w^k
// (computed exactly from the same Tr(C^i) data). Decision: yes iff that
// minimum exceeds the geometric mean of the two thresholds — under the
// promise this agrees with "trace >= alpha^{2p} -> yes" and
// "trace <= 2^n beta^{2p} -> no", and it is deterministic off-promise.
NicCliffordResult decide_nic_clifford(const NicInstance& inst);

struct NicLightconeResult {
  bool yes = false;
  // Set when yes: a qubit whose causal-cone circuit is not a phase times
  // the identity.
  std::optional<std::size_t> failing_qubit;
  // Largest cone examined.
  std::size_t lightcone_size = 0;
  std::size_t depth = 0;
};

// Causal-cone layering of a gate list: gate layer = 1 + max layer among
// earlier gates sharing a qubit; returns the layer per gate and the depth.
std::size_t circuit_depth(const Circuit& c, std::vector<std::size_t>* layers = nullptr);

// Exact identity testing for constant-depth circuits: yes iff some qubit's
// backward causal cone multiplies to anything other than e^{i phi} I
// (per-entry tolerance kIdentityTol; gates are specified exactly, so a true
// mismatch is order 1).
NicLightconeResult decide_nic_lightcone(const NicInstance& inst);

}  // namespace qcsat
