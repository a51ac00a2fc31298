#include "qcsat/pauli_sum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcsat/config.hpp"

namespace qcsat {

namespace {

using Complex = std::complex<double>;

Complex phase_of(std::uint8_t e) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[e & 3u];
}

// i^{e(have) - e(want)}: multiply a coefficient by this to swap the Pauli
// factor `have` for `want` when both share the same (x, z) masks.
Complex phase_ratio(const PauliString& have, const PauliString& want) {
  return phase_of(static_cast<std::uint8_t>((have.phase_exp - want.phase_exp + 4) & 3u));
}

// Forward-substitution table for GF(2) representation queries: rows with
// distinct leading bits, each remembering which basis elements combine to it.
struct SpanTable {
  std::vector<BitVec> vecs;
  std::vector<std::uint64_t> masks;

  void insert(const BitVec& v, std::uint64_t mask) {
    BitVec cur = v;
    std::uint64_t m = mask;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const int p = vecs[i].first_set();
      if (p >= 0 && cur.get(static_cast<std::size_t>(p))) {
        cur ^= vecs[i];
        m ^= masks[i];
      }
    }
    if (cur.any()) {
      vecs.push_back(cur);
      masks.push_back(m);
    }
  }

  // Mask of basis elements summing to `target`, if representable.
  std::optional<std::uint64_t> solve(const BitVec& target) const {
    BitVec cur = target;
    std::uint64_t m = 0;
    bool progress = true;
    while (cur.any() && progress) {
      progress = false;
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        const int p = vecs[i].first_set();
        if (p >= 0 && cur.get(static_cast<std::size_t>(p))) {
          cur ^= vecs[i];
          m ^= masks[i];
          progress = true;
        }
      }
    }
    if (cur.any()) return std::nullopt;
    return m;
  }
};

// Bit k of a term mask; elements beyond the 64-bit mask range (reachable
// only in the width-only mode, which never reads masks) get an empty mask.
std::uint64_t bit_at(std::size_t k) {
  return k < 64 ? std::uint64_t{1} << k : 0;
}

SpanTable build_span_table(const std::vector<PauliString>& basis) {
  SpanTable table;
  for (std::size_t k = 0; k < basis.size(); ++k)
    table.insert(symplectic_vector(basis[k]), bit_at(k));
  return table;
}

// Shared propagation engine. `terms == nullptr` runs the width-only variant:
// every basis decision below depends only on the basis, never on the terms,
// which is what makes predict_width exact.
class Propagator {
 public:
  Propagator(std::size_t n, std::size_t output,
             std::unordered_map<std::uint64_t, Complex>* terms, bool prune)
      : n_(n), terms_(terms), prune_(prune) {
    basis_.push_back(PauliString::single(n, output, 'Z'));
    if (terms_) terms_->emplace(1, Complex{1.0, 0.0});
  }

  void apply_dagger(const Gate& g) {
    if (is_clifford(g.kind)) {
      const Gate gd = dagger(g);
      for (auto& b : basis_) conjugate_by_gate(b, gd);
      return;
    }
    switch (g.kind) {
      case GateKind::T: rotate(g.q0, M_PI / 4); break;
      case GateKind::Tdg: rotate(g.q0, -M_PI / 4); break;
      case GateKind::Rz: rotate(g.q0, g.angle); break;
      default: throw std::logic_error("propagate: unexpected gate kind");
    }
  }

  TermSum finish() {
    TermSum out;
    out.num_qubits = n_;
    out.basis = std::move(basis_);
    if (terms_) out.terms = std::move(*terms_);
    return out;
  }

  std::size_t width() const { return basis_.size(); }

 private:
  PauliString product(std::uint64_t mask) const {
    PauliString p = PauliString::identity(n_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (mask >> k & 1u) p *= basis_[k];
    return p;
  }

  // basis[i] <- canonical Hermitian form of basis[i] * basis[j]; rewrite the
  // terms so the represented operator is unchanged (masks containing i gain
  // or lose j, coefficients absorb the exact i^k phase difference).
  void fold(std::size_t i, std::size_t j) {
    struct Pending {
      std::uint64_t mask;
      Complex coeff;
      std::uint8_t old_phase;
    };
    std::vector<Pending> pending;
    if (terms_) {
      for (auto it = terms_->begin(); it != terms_->end();) {
        if (it->first >> i & 1u) {
          pending.push_back({it->first, it->second, product(it->first).phase_exp});
          it = terms_->erase(it);
        } else {
          ++it;
        }
      }
    }
    const PauliString prod = basis_[i] * basis_[j];
    basis_[i] = PauliString::hermitian_canonical(prod.x, prod.z);
    for (const auto& p : pending) {
      // Toggling j keeps the GF(2) sum (hence the (x,z) masks) unchanged;
      // the coefficient absorbs the i^k phase difference of the reordering.
      const std::uint64_t mask = p.mask ^ (std::uint64_t{1} << j);
      const std::uint8_t now = product(mask).phase_exp;
      (*terms_)[mask] +=
          p.coeff * phase_of(static_cast<std::uint8_t>((p.old_phase - now + 4) & 3u));
    }
  }

  // Column-eliminate qubit q so at most one basis element has an X component
  // there and at most one other acts as Z. Returns the X-pivot, if any.
  int eliminate(std::size_t q) {
    int piv_x = -1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].x.get(q)) continue;
      if (piv_x < 0) {
        piv_x = static_cast<int>(k);
      } else {
        fold(k, static_cast<std::size_t>(piv_x));
      }
    }
    int piv_z = -1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (static_cast<int>(k) == piv_x || !basis_[k].z.get(q)) continue;
      if (piv_z < 0) {
        piv_z = static_cast<int>(k);
      } else {
        fold(k, static_cast<std::size_t>(piv_z));
      }
    }
    return piv_x;
  }

  // Conjugate by diag(1, e^{-i theta}) on qubit q, i.e. apply
  // P -> R(theta)^dag P R(theta) = cos(theta) P - i sin(theta) (P * Z_q)
  // to every term anticommuting with Z_q.
  void rotate(std::size_t q, double theta) {
    const int piv_x = eliminate(q);
    if (piv_x < 0) return;  // everything commutes with the rotation

    // Make Z_q expressible over the basis, appending it if independent.
    const PauliString zq = PauliString::single(n_, q, 'Z');
    std::optional<std::uint64_t> rep =
        build_span_table(basis_).solve(symplectic_vector(zq));
    if (!rep) {
      // 64-bit term masks bound the tracked width; the width-only mode has
      // no masks and may grow arbitrarily (it exists to stay polynomial).
      if (terms_ && basis_.size() >= 64)
        throw CapExceeded("propagate: basis width exceeds 64");
      basis_.push_back(zq);
      rep = bit_at(basis_.size() - 1);
    }

    if (!terms_) return;
    const Complex cos_c(std::cos(theta), 0.0);
    const Complex msin_i(0.0, -std::sin(theta));
    std::unordered_map<std::uint64_t, Complex> next;
    next.reserve(terms_->size() * 2);
    for (const auto& [mask, coeff] : *terms_) {
      if (!(mask >> static_cast<std::size_t>(piv_x) & 1u)) {
        next[mask] += coeff;
        continue;
      }
      next[mask] += coeff * cos_c;
      const PauliString pz = product(mask) * zq;
      const std::uint64_t mask2 = mask ^ *rep;
      next[mask2] += coeff * msin_i * phase_ratio(pz, product(mask2));
    }
    if (prune_) {
      for (auto it = next.begin(); it != next.end();) {
        if (std::abs(it->second) < kCoeffPrune)
          it = next.erase(it);
        else
          ++it;
      }
    }
    *terms_ = std::move(next);
  }

  std::size_t n_;
  std::vector<PauliString> basis_;
  std::unordered_map<std::uint64_t, Complex>* terms_;
  bool prune_;
};

std::size_t require_single_output(const QcsatInstance& inst) {
  validate_instance(inst);
  if (inst.outputs.size() != 1)
    throw std::invalid_argument(
        "propagate: instance must have exactly one output qubit");
  return inst.outputs.front();
}

TermSum propagate_impl(const QcsatInstance& inst, bool with_terms, bool prune) {
  const std::size_t out = require_single_output(inst);
  std::unordered_map<std::uint64_t, Complex> terms;
  Propagator prop(inst.circuit.num_qubits, out, with_terms ? &terms : nullptr,
                  prune);
  const auto& gates = inst.circuit.gates;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    prop.apply_dagger(*it);
  return prop.finish();
}

std::string symplectic_key(const PauliString& p) {
  const BitVec v = symplectic_vector(p);
  std::string key;
  key.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    key.push_back(v.get(i) ? '1' : '0');
  return key;
}

}  // namespace

PauliString term_pauli(const TermSum& sum, std::uint64_t mask) {
  QCSAT_CHECK(sum.basis.size() >= 64 || (mask >> sum.basis.size()) == 0,
              "term_pauli: mask selects nonexistent basis elements");
  PauliString p = PauliString::identity(sum.num_qubits);
  for (std::size_t k = 0; k < sum.basis.size(); ++k)
    if (mask >> k & 1u) p *= sum.basis[k];
  return p;
}

CMat dense_term_sum(const TermSum& sum) {
  if (sum.num_qubits > kDenseUnitaryCap)
    throw CapExceeded("dense_term_sum: register wider than kDenseUnitaryCap");
  const std::size_t dim = std::size_t{1} << sum.num_qubits;
  CMat out = CMat::Zero(static_cast<Eigen::Index>(dim),
                        static_cast<Eigen::Index>(dim));
  for (const auto& [mask, coeff] : sum.terms)
    out += coeff * dense_pauli(term_pauli(sum, mask));
  return out;
}

TermSum propagate(const QcsatInstance& inst, bool prune) {
  return propagate_impl(inst, /*with_terms=*/true, prune);
}

std::size_t predict_width(const QcsatInstance& inst) {
  return propagate_impl(inst, /*with_terms=*/false, /*prune=*/true)
      .basis.size();
}

TermSum project_ancillas(const TermSum& sum,
                         const std::vector<std::size_t>& ancilla) {
  if (ancilla.empty()) return sum;
  std::vector<bool> drop(sum.num_qubits, false);
  for (const std::size_t q : ancilla) {
    if (q >= sum.num_qubits)
      throw std::invalid_argument("project_ancillas: qubit out of range");
    drop[q] = true;
  }
  std::size_t kept = 0;
  for (const bool d : drop)
    if (!d) ++kept;

  // <0|O|0>: restrict every term, merging coefficients of equal Paulis
  // (keyed by (x, z); phases are folded onto the canonical representative).
  struct Survivor {
    PauliString pauli;  // canonical Hermitian, phase_exp = |x & z| mod 4
    Complex coeff;
  };
  std::map<std::string, Survivor> merged;
  for (const auto& [mask, coeff] : sum.terms) {
    PauliString restricted(0);
    if (!term_pauli(sum, mask).restrict_zero(drop, &restricted)) continue;
    PauliString canon =
        PauliString::hermitian_canonical(restricted.x, restricted.z);
    const Complex adj = coeff * phase_ratio(restricted, canon);
    auto [it, inserted] =
        merged.emplace(symplectic_key(canon), Survivor{canon, adj});
    if (!inserted) it->second.coeff += adj;
  }

  TermSum out;
  out.num_qubits = kept;
  SpanTable table;
  for (auto it = merged.begin(); it != merged.end();) {
    if (std::abs(it->second.coeff) < kCoeffPrune) {
      it = merged.erase(it);
      continue;
    }
    const BitVec v = symplectic_vector(it->second.pauli);
    if (v.any() && !table.solve(v)) {
      if (out.basis.size() >= 64)
        throw CapExceeded("project_ancillas: basis width exceeds 64");
      table.insert(v, std::uint64_t{1} << out.basis.size());
      out.basis.push_back(it->second.pauli);
    }
    ++it;
  }
  for (const auto& [key, s] : merged) {
    const auto rep = table.solve(symplectic_vector(s.pauli));
    QCSAT_CHECK(rep.has_value(), "project_ancillas: survivor outside span");
    out.terms[*rep] += s.coeff * phase_ratio(s.pauli, term_pauli(out, *rep));
  }
  return out;
}

CMat compress(const TermSum& sum) {
  if (sum.basis.size() > 64)
    throw CapExceeded("compress: basis wider than a 64-bit term mask");
  SpanTable table;
  for (std::size_t k = 0; k < sum.basis.size(); ++k) {
    const BitVec v = symplectic_vector(sum.basis[k]);
    if (!v.any() || table.solve(v))
      throw std::invalid_argument("compress: basis is not independent");
    table.insert(v, std::uint64_t{1} << k);
  }

  // Keep only basis elements some term actually uses: dropping an unused
  // element preserves every pairwise relation among the rest, so the
  // compressed dimension is 2^{b'} with b' <= b.
  std::uint64_t used = 0;
  for (const auto& [mask, coeff] : sum.terms) used |= mask;
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < sum.basis.size(); ++k)
    if (used >> k & 1u) live.push_back(k);
  const std::size_t b = live.size();
  if (b > kCompressCap)
    throw CapExceeded("compress: basis wider than kCompressCap");

  // Map basis[live[k]] to A_k = (prod_{j<k} X_j^{gamma(j,k)}) Z_k with
  // gamma = 1 exactly when the j-th and k-th live elements anticommute, then
  // copy the sign. The A's reproduce every pairwise relation of the B's, so
  // the ordered term products pick up identical phases and the dense sum has
  // the same eigenvalue set (up to multiplicity) as the represented operator.
  TermSum mapped;
  mapped.num_qubits = b;
  for (std::size_t k = 0; k < b; ++k) {
    const PauliString& bk = sum.basis[live[k]];
    QCSAT_CHECK(bk.is_hermitian(), "compress: non-Hermitian basis");
    BitVec ax(b), az(b);
    az.set(k, true);
    for (std::size_t j = 0; j < k; ++j)
      if (!sum.basis[live[j]].commutes(bk)) ax.set(j, true);
    PauliString a = PauliString::hermitian_canonical(ax, az);
    const std::uint8_t canon =
        static_cast<std::uint8_t>((bk.x & bk.z).popcount() & 3u);
    if (((bk.phase_exp - canon) & 3u) == 2u) a.negate();
    mapped.basis.push_back(a);
  }
  for (const auto& [mask, coeff] : sum.terms) {
    std::uint64_t remapped = 0;
    for (std::size_t k = 0; k < b; ++k)
      if (mask >> live[k] & 1u) remapped |= std::uint64_t{1} << k;
    mapped.terms[remapped] += coeff;
  }
  return dense_term_sum(mapped);
}

ValEstimate solve_appendix(const QcsatInstance& inst, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("solve_appendix: delta must lie in (0, 1)");
  const TermSum heisenberg = propagate(inst);
  const CMat h = compress(project_ancillas(heisenberg, inst.ancilla));
  QCSAT_CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-9,
              "solve_appendix: compressed operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues().minCoeff();
  const double val = std::clamp((1.0 - lambda_min) / 2.0, 0.0, 1.0);
  ValEstimate est;
  est.value = ScaledReal::make(val);
  est.mode = ValMode::Exact;
  est.delta = delta;
  return est;
}

}  // namespace qcsat
