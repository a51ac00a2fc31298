// The satisfiability solver: reduce an instance to a t-qubit spectral
// problem, evaluate the optimal acceptance value Val (exactly for small t, or
// by a randomized power-method estimator), and extract an optimal witness
// recipe "Clifford W applied to (small state phi) tensor |0...0>".
//
// The reduction replaces every non-Clifford phase gate by a post-selected
// CNOT gadget, conjugates the acceptance projector through the resulting
// Clifford, projects the ancillas onto |0>, and splits the remainder across
// the witness/magic cut into local Cliffords times elementary projectors.
// What survives is
//
//   Val = gamma * 2^{t - r - l1} * max_sigma lambda_max(rho(sigma)),
//
// where rho(sigma) is the reduced density matrix, on the l1 qubits EPR-paired
// with the witness side, of the magic-register state C_R |A^t> sliced at
// copy-pair bits sigma and zero-tagged bits 0. Everything is exponential only
// in t, never in the qubit count.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/dense.hpp"
#include "qcsat/projector.hpp"
#include "qcsat/tableau.hpp"

namespace qcsat {

// A nonnegative real carried as mantissa * 2^exponent with mantissa in [1,2)
// (or exactly 0). The 2^{t-r-l1} scaling can underflow a double's exponent
// range long before the instance is large, so the scale stays an integer.
struct ScaledReal {
  double mantissa = 0.0;
  long long exponent = 0;

  static ScaledReal zero() { return {}; }
  static ScaledReal make(double value, long long exp2 = 0);

  bool is_zero() const { return mantissa == 0.0; }
  // Saturates: huge exponents clamp to HUGE_VAL, tiny ones flush to 0.
  double to_double() const;

  ScaledReal operator*(const ScaledReal& o) const;
  // Comparison by exponent then mantissa (exact, no overflow).
  bool operator<(const ScaledReal& o) const;
  bool operator==(const ScaledReal& o) const;
};

// Output of the reduction pipeline. Qubit bookkeeping:
//  * witness-local indices 0..n-1 name the witness qubits in ascending
//    original order; c_left acts on this register;
//  * magic-local indices 0..t-1 name the gadget qubits in creation order
//    (gadget j consumes angle angles[j]); c_right acts on this register.
// The tag partition splits the witness side into zero-pinned (l1_prime),
// unconstrained (l2_prime), EPR-paired (l1) and copy-paired (l2) qubits, and
// the magic side into the EPR partners (r1), copy partners (r2), zero-pinned
// (r3) and free (r4) qubits. Pairing: partner[i] is the magic-local partner
// of witness-local qubit l1[i] / l2[i].
struct ReducedForm {
  bool gamma = false;      // false: no witness is ever accepted
  std::size_t r = 0;       // number of halving events among ancilla projections
  std::size_t t = 0;       // gadget count
  std::vector<double> angles;

  CliffordTableau c_left{0};   // on the n witness-local qubits
  CliffordTableau c_right{0};  // on the t magic-local qubits

  std::vector<std::size_t> l1_prime, l2_prime;  // witness-local, ascending
  std::vector<std::size_t> l1, l2;              // witness-local, ascending
  std::vector<std::size_t> r1, r2, r3, r4;      // magic-local, ascending
  std::vector<std::size_t> l1_partner;          // magic-local partner of l1[i]
  std::vector<std::size_t> l2_partner;          // magic-local partner of l2[i]

  std::size_t num_witness = 0;  // n
};

// How a value was computed.
enum class ValMode { Exact, Randomized };

struct ValEstimate {
  ScaledReal value;  // in [0,1]
  ValMode mode = ValMode::Exact;
  double delta = 0.0;        // randomized mode only
  std::uint64_t seed = 0;    // randomized mode only
  std::vector<std::uint8_t> sigma_star;  // maximizing copy-pair bits (l2 long)
};

// Optimal-witness recipe: witness = W * (|0> on zero_qubits, |0> junk on
// free_qubits, phi on the remaining qubits). phi's qubit q (bit q of its
// amplitude index) is the q-th smallest witness-local index not listed in
// zero_qubits or free_qubits; w_gates realize W = C_L^dag on all n qubits.
struct WitnessRecipe {
  std::size_t num_qubits = 0;             // n
  std::vector<Gate> w_gates;              // Clifford only
  CVec phi;                               // on <= t qubits, unit norm
  std::vector<std::size_t> zero_qubits;   // must be |0>
  std::vector<std::size_t> free_qubits;   // any state; |0> by convention
};

// Runs gadgetize -> conjugate -> ancilla projections -> bipartite canonical
// form and packages the partition. Polynomial in every parameter.
ReducedForm reduce_instance(const QcsatInstance& inst);

// Amplitudes of C_R (|0>+e^{i angle_j}|1>)/sqrt(2) tensored over the t
// magic-local qubits; dense, 2^t amplitudes. Throws CapExceeded when t
// exceeds the dense-state cap.
CVec magic_vector(const ReducedForm& rf);

// The slice <sigma on r2, 0 on r3 | phi>, reindexed to r1 (low bits, in
// ascending magic-local order) then r4 (high bits). Unnormalized; sigma bit
// j corresponds to rf.r2[j].
CVec sliced_magic_vector(const ReducedForm& rf, const CVec& phi,
                         std::uint64_t sigma);

// Largest eigenvalue of the reduced density matrix of the cut qubits,
// estimated by `iters` power-method steps from a Haar-random start on the
// smaller side of the cut. Guarantees 0 <= result <= lambda_max exactly
// (Rayleigh quotient); the expected relative error is at most
// (state qubits)/iters. `state` must be unit norm.
double lambda_max_power_iters(const CVec& state,
                              const std::vector<std::size_t>& cut,
                              std::size_t iters, std::uint64_t seed);

// As above with iters = ceil(100 * q / delta), q = number of state qubits:
// Pr[result >= (1 - delta) * lambda_max] >= 99/100.
double lambda_max_power(const CVec& state, const std::vector<std::size_t>& cut,
                        double delta, std::uint64_t seed);

// Exact largest eigenvalue of the same reduced density matrix (dense
// eigensolve on the smaller side of the cut).
double lambda_max_exact(const CVec& state, const std::vector<std::size_t>& cut);

// Randomized estimate xi of Val: 0 <= xi <= Val always, and
// Pr[xi >= (1-delta) Val] >= 99/100. Per-sigma randomness is derived from
// (seed, sigma), so results are reproducible under any parallel schedule.
ValEstimate estimate_val(const QcsatInstance& inst, double delta,
                         std::uint64_t seed);

// Deterministic Val by dense eigensolves; requires t <= kExactValTCap.
ValEstimate exact_val(const QcsatInstance& inst);

// Witness recipe achieving (for Exact mode) acceptance = exact value, or
// (Randomized, same delta/seed) acceptance at least the reported estimate.
// Throws invalid_argument when gamma = 0 (every witness is rejected).
WitnessRecipe extract_witness(const QcsatInstance& inst, ValMode mode,
                              double delta = 0.05, std::uint64_t seed = 1);

// Dense realization of the recipe's witness state on all n qubits (free
// qubits filled with |0>); test/oracle helper, exponential in n.
CVec realize_witness_dense(const WitnessRecipe& recipe);

struct QcsatDecision {
  bool yes = false;
  ValEstimate estimate;
};

// Promise decision "Val > a" vs "Val < b" (requires 0 <= b < a <= 1): exact
// mode when t <= kExactValTCap, otherwise the randomized estimator with
// delta = 1 - (a+b)/(2a), comparing against the midpoint (a+b)/2. Off-promise
// inputs (b <= Val <= a) get an unspecified but well-formed answer.
QcsatDecision decide_qcsat(const QcsatInstance& inst, double a, double b,
                           std::uint64_t seed = 1);

}  // namespace qcsat
