#include "qcsat/projector.hpp"

#include <algorithm>
#include <utility>

#include "qcsat/circuit.hpp"
#include "qcsat/clifford_synthesis.hpp"
#include "qcsat/config.hpp"

namespace qcsat {

namespace {

// Symplectic key of the restriction of g to the given qubits: x bits first,
// then z bits (2*|idxs| bits total).
BitVec cut_key(const PauliString& g, const std::vector<std::size_t>& idxs) {
  BitVec key(2 * idxs.size());
  for (std::size_t i = 0; i < idxs.size(); ++i) {
    if (g.x.get(idxs[i])) key.set(i, true);
    if (g.z.get(idxs[i])) key.set(idxs.size() + i, true);
  }
  return key;
}

bool anticommute_on(const PauliString& a, const PauliString& b,
                    const std::vector<std::size_t>& idxs) {
  const PauliString ra = a.extract_bits(idxs);
  const PauliString rb = b.extract_bits(idxs);
  return !ra.commutes(rb);
}

// Greedy forward elimination keyed by the restriction to `idxs`: insert
// keeps only members with independent keys; reduce multiplies the candidate
// down by the stored pivots.
struct KeyedBasis {
  std::vector<std::size_t> pivot_bits;
  std::vector<PauliString> gens;

  // Reduce g against the basis; returns the surviving key.
  BitVec reduce(PauliString& g, const std::vector<std::size_t>& idxs) const {
    BitVec key = cut_key(g, idxs);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (key.get(pivot_bits[k])) {
        g *= gens[k];
        key = cut_key(g, idxs);
      }
    }
    return key;
  }

  void insert(PauliString g, const BitVec& key) {
    const int pb = key.first_set();
    QCSAT_CHECK(pb >= 0, "keyed basis: zero key inserted");
    pivot_bits.push_back(static_cast<std::size_t>(pb));
    gens.push_back(std::move(g));
  }
};

PauliString hermitian_restrict(const std::vector<std::size_t>& idxs,
                        const PauliString& g) {
  // Hermitian restriction of g to the ordered sub-register idxs.
  const PauliString sub = g.extract_bits(idxs);
  return PauliString::hermitian_canonical(sub.x, sub.z);
}

}  // namespace

bool reduce_pauli_generators(std::vector<PauliString>& gens) {
  if (gens.empty()) return true;
  const std::size_t n = gens.front().n;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  KeyedBasis basis;
  for (PauliString g : gens) {
    const BitVec key = basis.reduce(g, all);
    if (key.any()) {
      basis.insert(std::move(g), key);
      continue;
    }
    // Reduced to a phase times identity.
    QCSAT_CHECK((g.phase_exp & 1u) == 0,
                "imaginary identity product in a Hermitian commuting family");
    if (g.phase_exp == 2) return false;  // -I: the projector vanishes
  }
  gens = std::move(basis.gens);
  return true;
}

StabilizerProjector make_projector(std::size_t num_qubits,
                                   std::vector<PauliString> generators,
                                   long long log2_scalar) {
  StabilizerProjector p;
  p.num_qubits = num_qubits;
  p.log2_scalar = log2_scalar;
  for (const auto& g : generators) {
    QCSAT_CHECK(g.n == num_qubits, "make_projector: size mismatch");
    QCSAT_CHECK(g.is_hermitian(), "make_projector: non-Hermitian generator");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      QCSAT_CHECK(generators[i].commutes(generators[j]),
                  "make_projector: generators must commute");
  if (!reduce_pauli_generators(generators)) {
    p.is_zero = true;
    p.generators.clear();
    return p;
  }
  p.generators = std::move(generators);
  return p;
}

StabilizerProjector conjugate_projector(const StabilizerProjector& p,
                                        const CliffordTableau& t) {
  QCSAT_CHECK(t.num_qubits() == p.num_qubits,
              "conjugate_projector: size mismatch");
  StabilizerProjector out = p;
  for (auto& g : out.generators) g = t.conjugate_pauli(g);
  return out;
}

QubitProjection project_qubit_zero(const StabilizerProjector& p,
                                   std::size_t qubit) {
  QCSAT_CHECK(qubit < p.num_qubits, "project_qubit_zero: bad qubit");
  QubitProjection out;
  out.projector.num_qubits = p.num_qubits - 1;
  out.projector.log2_scalar = p.log2_scalar;
  if (p.is_zero) {
    out.projector.is_zero = true;
    return out;
  }

  std::vector<PauliString> work = p.generators;
  // If any generator anticommutes with Z_qubit, clear the X support onto a
  // single pivot; the pivot contributes the factor 1/2 and drops out.
  std::size_t pivot = work.size();
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work[i].x.get(qubit)) {
      pivot = i;
      break;
    }
  }
  if (pivot != work.size()) {
    out.halved = true;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (i != pivot && work[i].x.get(qubit)) work[i] *= work[pivot];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
  }

  // <0|Z|0> = +1: delete the qubit, keep phases; then weed out the
  // dependencies this may create (+Z_q in the group -> +I, -Z_q -> -I).
  std::vector<bool> drop(p.num_qubits, false);
  drop[qubit] = true;
  std::vector<PauliString> restricted;
  restricted.reserve(work.size());
  for (const auto& g : work) {
    PauliString r;
    const bool ok = g.restrict_zero(drop, &r);
    QCSAT_CHECK(ok, "project_qubit_zero: X survived the pivot sweep");
    restricted.push_back(std::move(r));
  }
  if (!reduce_pauli_generators(restricted)) {
    out.projector.is_zero = true;
    out.halved = false;
    return out;
  }
  out.projector.generators = std::move(restricted);
  return out;
}

CMat dense_matrix(const StabilizerProjector& p) {
  if (p.num_qubits > kDenseUnitaryCap) throw CapExceeded("dense_matrix");
  const std::size_t dim = std::size_t{1} << p.num_qubits;
  if (p.is_zero) return CMat::Zero(dim, dim);
  CMat m = CMat::Identity(dim, dim);
  for (const auto& g : p.generators)
    m = 0.5 * (m + m * dense_pauli(g));
  return std::exp2(static_cast<double>(p.log2_scalar)) * m;
}

CanonicalBipartiteForm bipartite_canonical_form(
    const StabilizerProjector& p, const std::vector<std::size_t>& left,
    const std::vector<std::size_t>& right) {
  if (p.is_zero) throw std::invalid_argument("bipartite form of zero projector");
  const std::size_t n = p.num_qubits;
  QCSAT_CHECK(left.size() + right.size() == n,
              "bipartite_canonical_form: cut must partition the register");
  {
    std::vector<bool> seen(n, false);
    for (std::size_t q : left) {
      QCSAT_CHECK(q < n && !seen[q], "bipartite_canonical_form: bad cut");
      seen[q] = true;
    }
    for (std::size_t q : right) {
      QCSAT_CHECK(q < n && !seen[q], "bipartite_canonical_form: bad cut");
      seen[q] = true;
    }
  }
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();

  // Stage 1: split off the purely one-sided part of the group.
  //   pure_l: zero R restriction; pure_r: zero L restriction even modulo
  //   pure_l; list_b: independent on both sides.
  std::vector<PauliString> pure_l, pure_r, list_b;
  {
    KeyedBasis by_r;
    for (PauliString g : p.generators) {
      const BitVec key = by_r.reduce(g, right);
      if (key.any()) by_r.insert(std::move(g), key);
      else pure_l.push_back(std::move(g));
    }
    KeyedBasis by_l;
    for (PauliString g : pure_l) {
      const BitVec key = by_l.reduce(g, left);
      QCSAT_CHECK(key.any(), "pure-L element with empty support");
      by_l.insert(std::move(g), key);
    }
    pure_l = by_l.gens;
    const std::size_t seeded = pure_l.size();
    for (PauliString g : by_r.gens) {
      const BitVec key = by_l.reduce(g, left);
      if (key.any()) by_l.insert(std::move(g), key);
      else pure_r.push_back(std::move(g));
    }
    list_b.assign(by_l.gens.begin() + static_cast<std::ptrdiff_t>(seeded),
                  by_l.gens.end());
  }

  // Stage 2: hyperbolic pairing of the two-sided part. The L and R
  // anticommutation patterns coincide because the full generators commute.
  std::vector<std::pair<PauliString, PauliString>> pairs;
  {
    std::vector<PauliString> rem = std::move(list_b);
    for (;;) {
      std::size_t pi = rem.size(), pj = rem.size();
      for (std::size_t i = 0; i < rem.size() && pi == rem.size(); ++i) {
        for (std::size_t j = i + 1; j < rem.size(); ++j) {
          if (anticommute_on(rem[i], rem[j], left)) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == rem.size()) break;
      const PauliString h1 = rem[pi];
      const PauliString h2 = rem[pj];
      QCSAT_CHECK(anticommute_on(h1, h2, right),
                  "cut anticommutation mismatch between sides");
      std::vector<PauliString> next;
      for (std::size_t k = 0; k < rem.size(); ++k) {
        if (k == pi || k == pj) continue;
        PauliString g = rem[k];
        if (anticommute_on(g, h1, left)) g *= h2;
        if (anticommute_on(g, h2, left)) g *= h1;
        QCSAT_CHECK(!anticommute_on(g, h1, left) &&
                        !anticommute_on(g, h2, left),
                    "hyperbolic sweep failed");
        next.push_back(std::move(g));
      }
      rem = std::move(next);
      pairs.emplace_back(h1, h2);
    }
    list_b = std::move(rem);  // Copy-pair candidates: commuting on each side
  }
  const std::size_t ne = pairs.size();
  const std::size_t nc = list_b.size();
  QCSAT_CHECK(ne + nc + pure_l.size() <= nl, "L register overflow");
  QCSAT_CHECK(ne + nc + pure_r.size() <= nr, "R register overflow");

  // Working one-sided restrictions, conjugated along as gates are emitted.
  // Order: pair X-roles, pair Z-roles are interleaved per pair; then copies,
  // then the pure elements of each side.
  auto restrict_list = [&](const std::vector<std::size_t>& idxs) {
    std::vector<PauliString> out;
    for (const auto& pr : pairs) {
      out.push_back(hermitian_restrict(idxs, pr.first));
      out.push_back(hermitian_restrict(idxs, pr.second));
    }
    for (const auto& g : list_b) out.push_back(hermitian_restrict(idxs, g));
    return out;
  };
  std::vector<PauliString> wl = restrict_list(left);
  std::vector<PauliString> wr = restrict_list(right);
  for (const auto& g : pure_l) wl.push_back(hermitian_restrict(left, g));
  for (const auto& g : pure_r) wr.push_back(hermitian_restrict(right, g));

  // One side's synthesis: EPR pairs (X,Z) at ascending fresh targets via the
  // anticommuting-pair primitive, then all remaining Z-images in one family
  // map. All work happens on the shrinking active sub-register so gates can
  // never revisit a placed qubit.
  struct SideResult {
    std::vector<Gate> gates;
    std::vector<std::size_t> targets;  // per working-list entry, sub-register
  };
  auto synthesize_side = [&](std::vector<PauliString>& ws, std::size_t nq,
                             std::size_t num_pairs) -> SideResult {
    SideResult res;
    res.targets.assign(ws.size(), nq);
    std::vector<std::size_t> active(nq);
    for (std::size_t i = 0; i < nq; ++i) active[i] = i;
    for (std::size_t k = 0; k < num_pairs; ++k) {
      const std::size_t ix = 2 * k, iz = 2 * k + 1;
      for (std::size_t q = 0; q < nq; ++q) {
        const bool live = std::find(active.begin(), active.end(), q) !=
                          active.end();
        QCSAT_CHECK(live || (!ws[ix].x.get(q) && !ws[ix].z.get(q) &&
                             !ws[iz].x.get(q) && !ws[iz].z.get(q)),
                    "support escaped the active sub-register");
      }
      const PauliString px = hermitian_restrict(active, ws[ix]);
      const PauliString pz = hermitian_restrict(active, ws[iz]);
      const auto sub = reduce_anticommuting_pair(px, pz, 0);
      const auto emb = remap_qubits(sub, active);
      for (auto& w : ws) conjugate_by_gates(w, emb);
      res.gates.insert(res.gates.end(), emb.begin(), emb.end());
      res.targets[ix] = active[0];
      res.targets[iz] = active[0];
      active.erase(active.begin());
    }
    std::vector<PauliString> family;
    std::vector<std::size_t> fam_idx;
    for (std::size_t i = 2 * num_pairs; i < ws.size(); ++i) {
      for (std::size_t q = 0; q < nq; ++q) {
        const bool live = std::find(active.begin(), active.end(), q) !=
                          active.end();
        QCSAT_CHECK(live || (!ws[i].x.get(q) && !ws[i].z.get(q)),
                    "support escaped the active sub-register");
      }
      family.push_back(hermitian_restrict(active, ws[i]));
      fam_idx.push_back(i);
    }
    if (!family.empty()) {
      std::vector<std::size_t> targets(family.size());
      for (std::size_t i = 0; i < family.size(); ++i) targets[i] = i;
      const auto sub = map_commuting_family_to_z(family, targets);
      const auto emb = remap_qubits(sub, active);
      for (auto& w : ws) conjugate_by_gates(w, emb);
      res.gates.insert(res.gates.end(), emb.begin(), emb.end());
      for (std::size_t i = 0; i < fam_idx.size(); ++i)
        res.targets[fam_idx[i]] = active[i];
    }
    return res;
  };

  SideResult sl = synthesize_side(wl, nl, ne);
  SideResult sr = synthesize_side(wr, nr, ne);

  // Expected full-register images and sign fixes. Working entry order:
  // on L: [pair0 X, pair0 Z, pair1 X, ..., copies..., pure_l...]
  // on R: [pair0 X, pair0 Z, pair1 X, ..., copies..., pure_r...]
  struct Expect {
    PauliString full;      // original generator (product form)
    char kind_l, kind_r;   // 'X', 'Z', or 'I' on each side's target
    std::size_t tl, tr;    // sub-register targets (valid unless kind 'I')
    bool fix_on_left;      // where a -1 sign gets repaired
  };
  std::vector<Expect> expects;
  for (std::size_t k = 0; k < ne; ++k) {
    expects.push_back({pairs[k].first, 'X', 'X', sl.targets[2 * k],
                       sr.targets[2 * k], false});
    expects.push_back({pairs[k].second, 'Z', 'Z', sl.targets[2 * k + 1],
                       sr.targets[2 * k + 1], false});
  }
  for (std::size_t k = 0; k < nc; ++k) {
    expects.push_back({list_b[k], 'Z', 'Z', sl.targets[2 * ne + k],
                       sr.targets[2 * ne + k], false});
  }
  for (std::size_t k = 0; k < pure_l.size(); ++k)
    expects.push_back(
        {pure_l[k], 'Z', 'I', sl.targets[2 * ne + nc + k], 0, true});
  for (std::size_t k = 0; k < pure_r.size(); ++k)
    expects.push_back({pure_r[k], 'I', 'Z', 0, sr.targets[2 * ne + nc + k],
                       false});

  std::vector<Gate> full_gates = remap_qubits(sl.gates, left);
  {
    const auto rg = remap_qubits(sr.gates, right);
    full_gates.insert(full_gates.end(), rg.begin(), rg.end());
  }
  auto expected_pauli = [&](const Expect& e) {
    BitVec x(n), z(n);
    if (e.kind_l == 'X') x.set(left[e.tl], true);
    if (e.kind_l == 'Z') z.set(left[e.tl], true);
    if (e.kind_r == 'X') x.set(right[e.tr], true);
    if (e.kind_r == 'Z') z.set(right[e.tr], true);
    return PauliString::hermitian_canonical(std::move(x), std::move(z));
  };
  for (const auto& e : expects) {
    PauliString got = e.full;
    conjugate_by_gates(got, full_gates);
    const PauliString want = expected_pauli(e);
    QCSAT_CHECK(got.x == want.x && got.z == want.z,
                "canonical form image mismatch");
    const unsigned diff = (got.phase_exp - want.phase_exp) & 3u;
    QCSAT_CHECK((diff & 1u) == 0, "non-real sign in canonical form");
    if (diff == 2) {
      // Anticommuting single-qubit fix on the owning side; the partner image
      // at the same qubit commutes with it, so nothing else moves.
      const Gate fix = (e.kind_r == 'X')   ? Gate::z(static_cast<std::uint32_t>(e.tr))
                       : e.fix_on_left     ? Gate::x(static_cast<std::uint32_t>(e.tl))
                                           : Gate::x(static_cast<std::uint32_t>(e.tr));
      if (e.fix_on_left)
        sl.gates.push_back(fix);
      else
        sr.gates.push_back(fix);
      full_gates.push_back(remap_qubits({fix}, e.fix_on_left ? left : right)[0]);
    }
  }
  // Exact re-verification including signs.
  for (const auto& e : expects) {
    PauliString got = e.full;
    conjugate_by_gates(got, full_gates);
    QCSAT_CHECK(got == expected_pauli(e), "sign repair failed");
  }

  CanonicalBipartiteForm form;
  form.left = left;
  form.right = right;
  form.c_left = CliffordTableau::from_gates(nl, sl.gates);
  form.c_right = CliffordTableau::from_gates(nr, sr.gates);
  form.tags.assign(n, QubitTag{});
  for (const auto& e : expects) {
    if (e.kind_l != 'I' && e.kind_r != 'I') {
      const std::size_t ql = left[e.tl];
      const std::size_t qr = right[e.tr];
      const TagKind kind = (e.kind_l == 'X') ? TagKind::Epr : TagKind::Copy;
      // EPR emits two expects on the same qubit pair; X-role wins the tag.
      if (kind == TagKind::Epr || form.tags[ql].kind == TagKind::Free) {
        form.tags[ql] = {kind, qr};
        form.tags[qr] = {kind, ql};
      }
    } else if (e.kind_l != 'I') {
      form.tags[left[e.tl]] = {TagKind::Zero, 0};
    } else {
      form.tags[right[e.tr]] = {TagKind::Zero, 0};
    }
  }
  return form;
}

std::vector<PauliString> tag_generators(const CanonicalBipartiteForm& form,
                                        std::size_t num_qubits) {
  std::vector<PauliString> gens;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    const QubitTag& tag = form.tags[q];
    switch (tag.kind) {
      case TagKind::Free:
        break;
      case TagKind::Zero:
        gens.push_back(PauliString::single(num_qubits, q, 'Z'));
        break;
      case TagKind::Epr:
        if (q < tag.partner) {
          BitVec x(num_qubits), z(num_qubits);
          x.set(q, true);
          x.set(tag.partner, true);
          gens.push_back(PauliString::hermitian_canonical(x, BitVec(num_qubits)));
          z.set(q, true);
          z.set(tag.partner, true);
          gens.push_back(PauliString::hermitian_canonical(BitVec(num_qubits), z));
        }
        break;
      case TagKind::Copy:
        if (q < tag.partner) {
          BitVec z(num_qubits);
          z.set(q, true);
          z.set(tag.partner, true);
          gens.push_back(PauliString::hermitian_canonical(BitVec(num_qubits), z));
        }
        break;
    }
  }
  return gens;
}

CliffordTableau embed_product_tableau(std::size_t num_qubits,
                                      const CanonicalBipartiteForm& form) {
  std::vector<Gate> gates = remap_qubits(form.c_left.compile(), form.left);
  const auto rg = remap_qubits(form.c_right.compile(), form.right);
  gates.insert(gates.end(), rg.begin(), rg.end());
  return CliffordTableau::from_gates(num_qubits, gates);
}

}  // namespace qcsat
