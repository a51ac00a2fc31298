// Signed Pauli strings P = i^e * X^x Z^z with bit-packed x/z masks.
//
// The phase exponent e lives in Z4 and multiplies the *ordered* product
// X^x Z^z, so Y = i*XZ is stored as (e=1, x=1, z=1). P is Hermitian exactly
// when e == |x & z| (mod 2); the canonical Hermitian representative with
// "+" sign is e = |x & z| (mod 4), i.e. a plain tensor of I/X/Y/Z.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcsat/bitmat.hpp"

namespace qcsat {

struct PauliString {
  std::size_t n = 0;
  std::uint8_t phase_exp = 0;  // e mod 4
  BitVec x, z;

  PauliString() = default;
  explicit PauliString(std::size_t n_) : n(n_), x(n_), z(n_) {}

  static PauliString identity(std::size_t n) { return PauliString(n); }

  // Single-qubit X/Y/Z embedded at qubit q.
  static PauliString single(std::size_t n, std::size_t q, char kind);

  // i^{|x & z|} X^x Z^z: the '+'-signed tensor of I/X/Y/Z with these masks.
  static PauliString hermitian_canonical(BitVec x, BitVec z);

  bool is_hermitian() const {
    return (phase_exp & 1u) == ((x & z).popcount() & 1u);
  }
  bool is_identity_bits() const { return !x.any() && !z.any(); }
  bool is_diagonal() const { return !x.any(); }

  void mul_phase(std::uint8_t k) { phase_exp = (phase_exp + k) & 3u; }
  void negate() { mul_phase(2); }

  PauliString& operator*=(const PauliString& o);
  friend PauliString operator*(PauliString a, const PauliString& b) {
    return a *= b;
  }

  bool commutes(const PauliString& o) const {
    return BitVec::and_parity(x, o.z) == BitVec::and_parity(z, o.x);
  }

  // Conjugation by elementary gates: *this <- g * (*this) * g^dagger.
  void conj_h(std::size_t q);
  void conj_s(std::size_t q);
  void conj_sdg(std::size_t q);
  void conj_x(std::size_t q);
  void conj_y(std::size_t q);
  void conj_z(std::size_t q);
  void conj_cx(std::size_t c, std::size_t t);
  void conj_cz(std::size_t a, std::size_t b);
  void conj_swap(std::size_t a, std::size_t b);

  // <0_S| P |0_S> where S = {q : drop[q]}. Returns false when the element is
  // zero (X or Y on a dropped qubit); otherwise writes the Pauli restricted
  // to the kept qubits (order preserved, phase unchanged: Z|0> = +|0>).
  bool restrict_zero(const std::vector<bool>& drop, PauliString* out) const;

  // Sub-Pauli on `indices` (in the given order) with phase_exp 0.
  PauliString extract_bits(const std::vector<std::size_t>& indices) const;

  // Human-readable form, e.g. "+XIZ", "-iYZ" (letters use Y, so the printed
  // prefix is i^{e - |x&z|}).
  std::string str() const;

  bool operator==(const PauliString&) const = default;
};

// Symplectic (x|z) vector of length 2n: x bits first, then z bits.
inline BitVec symplectic_vector(const PauliString& p) {
  return p.x.concat(p.z);
}

}  // namespace qcsat
