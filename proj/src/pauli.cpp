#include "qcsat/pauli.hpp"

#include <stdexcept>

namespace qcsat {

PauliString PauliString::single(std::size_t n, std::size_t q, char kind) {
  PauliString p(n);
  switch (kind) {
    case 'X':
      p.x.set(q, true);
      break;
    case 'Y':
      p.phase_exp = 1;
      p.x.set(q, true);
      p.z.set(q, true);
      break;
    case 'Z':
      p.z.set(q, true);
      break;
    default:
      throw std::invalid_argument("PauliString::single: kind must be X/Y/Z");
  }
  return p;
}

PauliString PauliString::hermitian_canonical(BitVec x, BitVec z) {
  PauliString p;
  p.n = x.size();
  p.phase_exp = static_cast<std::uint8_t>((x & z).popcount() & 3u);
  p.x = std::move(x);
  p.z = std::move(z);
  return p;
}

PauliString& PauliString::operator*=(const PauliString& o) {
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2): commuting Z^z1 past X^x2 costs
  // (-1)^{|z1 & x2|}.
  const std::uint8_t cross =
      static_cast<std::uint8_t>(2u * (BitVec::and_parity(z, o.x) ? 1u : 0u));
  phase_exp = (phase_exp + o.phase_exp + cross) & 3u;
  x ^= o.x;
  z ^= o.z;
  return *this;
}

void PauliString::conj_h(std::size_t q) {
  const bool xq = x.get(q), zq = z.get(q);
  if (xq && zq) mul_phase(2);
  x.set(q, zq);
  z.set(q, xq);
}

void PauliString::conj_s(std::size_t q) {
  if (x.get(q)) {
    mul_phase(1);
    z.flip(q);
  }
}

void PauliString::conj_sdg(std::size_t q) {
  if (x.get(q)) {
    mul_phase(3);
    z.flip(q);
  }
}

void PauliString::conj_x(std::size_t q) {
  if (z.get(q)) mul_phase(2);
}

void PauliString::conj_y(std::size_t q) {
  if (x.get(q) != z.get(q)) mul_phase(2);
}

void PauliString::conj_z(std::size_t q) {
  if (x.get(q)) mul_phase(2);
}

void PauliString::conj_cx(std::size_t c, std::size_t t) {
  // X_c -> X_c X_t, Z_t -> Z_c Z_t; no phase correction is needed in the
  // X^x Z^z representation (the Y_c Y_t -> -X_c Z_t sign falls out of e).
  if (x.get(c)) x.flip(t);
  if (z.get(t)) z.flip(c);
}

void PauliString::conj_cz(std::size_t a, std::size_t b) {
  if (x.get(a) && x.get(b)) mul_phase(2);
  if (x.get(a)) z.flip(b);
  if (x.get(b)) z.flip(a);
}

void PauliString::conj_swap(std::size_t a, std::size_t b) {
  const bool xa = x.get(a), za = z.get(a);
  x.set(a, x.get(b));
  z.set(a, z.get(b));
  x.set(b, xa);
  z.set(b, za);
}

bool PauliString::restrict_zero(const std::vector<bool>& drop,
                                PauliString* out) const {
  std::size_t kept = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (drop[q]) {
      if (x.get(q)) return false;
    } else {
      ++kept;
    }
  }
  PauliString r(kept);
  r.phase_exp = phase_exp;
  std::size_t j = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (drop[q]) continue;
    r.x.set(j, x.get(q));
    r.z.set(j, z.get(q));
    ++j;
  }
  *out = std::move(r);
  return true;
}

PauliString PauliString::extract_bits(
    const std::vector<std::size_t>& indices) const {
  PauliString r(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    r.x.set(i, x.get(indices[i]));
    r.z.set(i, z.get(indices[i]));
  }
  return r;
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  const std::uint8_t disp =
      static_cast<std::uint8_t>((phase_exp + 4u - ((x & z).popcount() & 3u)) & 3u);
  std::string s = kPrefix[disp];
  for (std::size_t q = 0; q < n; ++q) {
    const bool xq = x.get(q), zq = z.get(q);
    s += xq ? (zq ? 'Y' : 'X') : (zq ? 'Z' : 'I');
  }
  return s;
}

}  // namespace qcsat
