// Amplitude-exact stabilizer states in affine form:
//
//   |psi> = scalar * sum_{u in F2^r} i^{phi(u)} |A u (+) c>
//
// with A an n x r full-column-rank GF(2) matrix, c in F2^n, and
// phi(u) = sum_j l_j u_j + 2 sum_{j<k} Q_jk u_j u_k (mod 4). The scalar is
// kept exactly as 2^{h/2} omega^m (omega = e^{i pi/4}), so every amplitude
// and inner product is an exact element of Z[omega, 1/sqrt(2)].
//
// The Z4 phase-form engine (QuadForm) also evaluates Gauss sums
// sum_u i^{phi(u)} in closed form by variable elimination; inner products
// between stabilizer states reduce to exactly such sums.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qcsat/bitmat.hpp"
#include "qcsat/circuit.hpp"
#include "qcsat/pauli.hpp"

namespace qcsat {

// Exactly 0, or 2^{half_log2/2} * omega^{octant} with omega = e^{i pi/4}.
struct ExactComplex {
  bool zero = true;
  long long half_log2 = 0;
  int octant = 0;  // mod 8

  static ExactComplex one() { return {false, 0, 0}; }
  static ExactComplex zero_value() { return {}; }
  static ExactComplex make(long long half_log2, int octant) {
    return {false, half_log2, ((octant % 8) + 8) % 8};
  }

  void mul_omega(int k) {
    if (!zero) octant = (((octant + k) % 8) + 8) % 8;
  }
  void mul_pow_sqrt2(long long k) {
    if (!zero) half_log2 += k;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    if (zero || o.zero) {
      *this = zero_value();
    } else {
      half_log2 += o.half_log2;
      octant = (octant + o.octant) % 8;
    }
    return *this;
  }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) {
    return a *= b;
  }
  ExactComplex conjugated() const {
    return zero ? zero_value() : make(half_log2, -octant);
  }
  std::complex<double> to_complex() const {
    if (zero) return {0.0, 0.0};
    return std::polar(std::exp2(0.5 * static_cast<double>(half_log2)),
                      octant * std::numbers::pi / 4);
  }
  bool operator==(const ExactComplex& o) const {
    if (zero || o.zero) return zero == o.zero;
    return half_log2 == o.half_log2 && octant == o.octant;
  }
};

// phi(u) = sum_j l_j u_j + 2 sum_{j<k} Q_jk u_j u_k over Z4 (no constant
// term; constants surface as scalar updates in the elimination steps).
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(std::size_t nvars) {
    grow_to(nvars);
    r_ = nvars;
  }

  std::size_t num_vars() const { return r_; }
  std::size_t capacity() const { return cap_; }
  std::size_t add_variable();

  std::uint8_t linear(std::size_t j) const { return ell_[j]; }
  void add_linear(std::size_t j, std::uint8_t k) { ell_[j] = (ell_[j] + k) & 3u; }
  bool quad(std::size_t j, std::size_t k) const { return q_[j].get(k); }
  void flip_pair(std::size_t j, std::size_t k);

  // phi += k * XOR_{j in mask} u_j  (k in Z4).
  void add_xor_term(const BitVec& mask, std::uint8_t k);
  // phi += 2 * (XOR_{j in a} u_j) * (XOR_{k in b} u_k).
  void add_and_term(const BitVec& a, const BitVec& b);

  std::uint8_t eval(const BitVec& u) const;

  // Change of variables sending column p of any carrier matrix to
  // A * kappa (callers clear the carrier column themselves); kappa must
  // contain p. Rewrites (l, Q) accordingly.
  void merge_variable(std::size_t p, const BitVec& kappa);

  // Effect of summing a variable out of sum_u i^{phi(u)}.
  struct ElimStep {
    bool is_zero = false;          // the whole sum vanishes
    long long scalar_half_log2 = 0;
    int scalar_octant = 0;
    bool constrained = false;      // a pivot variable was substituted away
    std::size_t pivot = 0;         // valid when constrained
    BitVec others;                 // u_pivot := rhs (+) XOR_{j in others} u_j
    bool rhs = false;
  };

  // Sum out variable p, which must not appear in any carrier column. The
  // form is updated in place; the caller applies the scalar factor, mirrors
  // the substitution on carriers when `constrained`, and then removes the
  // dead variables (p, and pivot when constrained; higher index first).
  ElimStep eliminate_variable(std::size_t p);

  // Swap-with-last removal; variable p must be dead (zero l and Q row).
  void remove_variable(std::size_t p);

 private:
  void grow_to(std::size_t nvars);

  std::size_t r_ = 0;
  std::size_t cap_ = 0;
  std::vector<std::uint8_t> ell_;  // cap_ entries, Z4
  std::vector<BitVec> q_;          // cap_ x cap_, symmetric, zero diagonal
};

// sum over u in F2^r of i^{phi(u)}, exactly.
ExactComplex gauss_sum(QuadForm form);

class StabilizerState {
 public:
  static StabilizerState zero_state(std::size_t n);
  // Joint +1 eigenstate of n independent commuting Hermitian Pauli strings
  // (global phase pinned by the deterministic synthesis circuit).
  static StabilizerState from_generators(const std::vector<PauliString>& gens);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_vars() const { return form_.num_vars(); }
  const ExactComplex& scalar() const { return scalar_; }

  void apply_gate(const Gate& g);  // Clifford only
  void apply_gates(const std::vector<Gate>& gates);

  // Exact <basis|psi> (basis given as n bits).
  ExactComplex amplitude(const BitVec& basis) const;

  // Lexicographically smallest basis state with nonzero amplitude (qubit
  // n-1 is the most significant bit). Depends only on the abstract state,
  // not on the internal affine gauge.
  BitVec canonical_support_point() const;

  // Exact <a|b>.
  static ExactComplex inner_product(const StabilizerState& a,
                                    const StabilizerState& b);

  // Dense expansion for tests/small instances.
  std::vector<std::complex<double>> to_dense() const;

 private:
  explicit StabilizerState(std::size_t n);
  void apply_h(std::size_t q);
  void ensure_capacity(std::size_t nvars);
  void clear_column(std::size_t p);
  void substitute_column(std::size_t pivot, const BitVec& others, bool rhs);
  void remove_variable_everywhere(std::size_t p);
  void canonicalize();  // after H: restore full column rank
  void check_normalized() const;

  std::size_t n_ = 0;
  std::vector<BitVec> rows_;  // n rows, one per qubit, capacity-synced with form_
  BitVec c_;                  // n bits
  QuadForm form_;
  ExactComplex scalar_;
};

}  // namespace qcsat
