#include "qcsat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "qcsat/config.hpp"
#include "qcsat/rng.hpp"

namespace qcsat {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t sigma_seed(std::uint64_t master, std::uint64_t sigma) {
  return splitmix64(master ^ splitmix64(sigma + 1));
}

std::size_t log2_dim(const CVec& state, const char* who) {
  const auto dim = static_cast<std::size_t>(state.size());
  std::size_t q = 0;
  while ((std::size_t{1} << q) < dim) ++q;
  if ((std::size_t{1} << q) != dim)
    throw std::invalid_argument(std::string(who) +
                                ": state length is not a power of two");
  return q;
}

// Amplitudes rearranged into a 2^|a_bits| x 2^|b_bits| matrix: row bits land
// at the a_bits positions of the state index, column bits at b_bits.
CMat cut_matrix(const CVec& state, const std::vector<std::size_t>& a_bits,
                const std::vector<std::size_t>& b_bits) {
  const std::size_t rows = std::size_t{1} << a_bits.size();
  const std::size_t cols = std::size_t{1} << b_bits.size();
  CMat eta(rows, cols);
  for (std::size_t y = 0; y < cols; ++y) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < b_bits.size(); ++j)
      if ((y >> j) & 1u) base |= std::size_t{1} << b_bits[j];
    for (std::size_t x = 0; x < rows; ++x) {
      std::size_t idx = base;
      for (std::size_t j = 0; j < a_bits.size(); ++j)
        if ((x >> j) & 1u) idx |= std::size_t{1} << a_bits[j];
      eta(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          state[static_cast<Eigen::Index>(idx)];
    }
  }
  return eta;
}

struct CutSpec {
  std::vector<std::size_t> a_bits;  // the cut register, ascending
  std::vector<std::size_t> b_bits;  // its complement, ascending
};

CutSpec split_cut(std::size_t q, const std::vector<std::size_t>& cut,
                  const char* who) {
  CutSpec s;
  s.a_bits = cut;
  std::sort(s.a_bits.begin(), s.a_bits.end());
  for (std::size_t j = 0; j < s.a_bits.size(); ++j) {
    if (s.a_bits[j] >= q)
      throw std::invalid_argument(std::string(who) + ": cut qubit out of range");
    if (j > 0 && s.a_bits[j] == s.a_bits[j - 1])
      throw std::invalid_argument(std::string(who) + ": duplicate cut qubit");
  }
  std::size_t next = 0;
  for (std::size_t i = 0; i < q; ++i) {
    if (next < s.a_bits.size() && s.a_bits[next] == i)
      ++next;
    else
      s.b_bits.push_back(i);
  }
  return s;
}

void require_unit(const CVec& state, const char* who) {
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
}

struct CutSolve {
  double lambda = 0.0;
  CVec avec;  // unit vector on the cut register (only when requested)
};

// Largest eigenvalue of rho_A = Tr_B |state><state| for the cut A, either by
// a dense eigensolve or by `iters` power-method steps from a Haar-random
// start; all linear algebra runs on the smaller side of the cut and the
// reported value is a Rayleigh quotient, hence never exceeds lambda_max.
CutSolve solve_cut(const CVec& state, const std::vector<std::size_t>& cut,
                   bool exact, std::size_t iters, std::uint64_t seed,
                   bool want_vec) {
  const char* who = exact ? "lambda_max_exact" : "lambda_max_power";
  const std::size_t q = log2_dim(state, who);
  require_unit(state, who);
  const CutSpec spec = split_cut(q, cut, who);

  CutSolve out;
  // Degenerate cuts: the reduced state on an empty register (or of an
  // unentangled pure state against an empty complement) has lambda_max 1.
  if (spec.a_bits.empty()) {
    out.lambda = state.squaredNorm();
    out.avec = CVec::Ones(1);
    return out;
  }
  if (spec.b_bits.empty()) {
    out.lambda = state.squaredNorm();
    if (want_vec) out.avec = state / state.norm();
    return out;
  }

  const CMat eta = cut_matrix(state, spec.a_bits, spec.b_bits);
  const bool a_small = spec.a_bits.size() <= spec.b_bits.size();

  if (exact) {
    // Gram matrix on the smaller side; nonzero spectra of eta eta^dag and
    // eta^dag eta coincide.
    const CMat gram = a_small ? CMat(eta * eta.adjoint())
                              : CMat(eta.adjoint() * eta);
    Eigen::SelfAdjointEigenSolver<CMat> solver(gram);
    const Eigen::Index top = solver.eigenvalues().size() - 1;
    out.lambda = std::max(0.0, solver.eigenvalues()(top));
    if (want_vec) {
      CVec v = solver.eigenvectors().col(top);
      if (!a_small) {
        v = eta * v;  // lift the B-side eigenvector to the A side
        const double nrm = v.norm();
        out.avec = nrm > 0 ? CVec(v / nrm)
                           : CVec(CVec::Unit(eta.rows(), 0));
      } else {
        out.avec = v;
      }
    }
    return out;
  }

  const Eigen::Index dim_small = a_small ? eta.rows() : eta.cols();
  Rng rng(seed);
  const auto start = rng.haar_state(static_cast<std::size_t>(dim_small));
  CVec v(dim_small);
  for (Eigen::Index i = 0; i < dim_small; ++i)
    v[i] = start[static_cast<std::size_t>(i)];

  // v <- rho v, renormalized, (iters - 1) times; the estimate is the final
  // Rayleigh quotient <v|rho|v>.
  const auto apply_rho = [&](const CVec& x) {
    if (a_small) return CVec(eta * (eta.adjoint() * x));
    return CVec(eta.adjoint() * (eta * x));
  };
  for (std::size_t step = 1; step < iters; ++step) {
    CVec w = apply_rho(v);
    const double nrm = w.norm();
    if (nrm == 0.0) break;  // start was in the kernel; quotient is 0
    v = w / nrm;
  }
  const CVec rv = apply_rho(v);
  out.lambda = std::max(0.0, v.dot(rv).real() / v.squaredNorm());
  if (want_vec) {
    if (a_small) {
      out.avec = v;
    } else {
      CVec lifted = eta * v;
      const double nrm = lifted.norm();
      out.avec =
          nrm > 0 ? CVec(lifted / nrm) : CVec(CVec::Unit(eta.rows(), 0));
    }
  }
  return out;
}

}  // namespace

ScaledReal ScaledReal::make(double value, long long exp2) {
  QCSAT_CHECK(std::isfinite(value) && value >= 0.0,
              "ScaledReal: value must be finite and nonnegative");
  if (value == 0.0) return {};
  int e = 0;
  const double m = std::frexp(value, &e);  // m in [0.5, 1)
  return {2.0 * m, exp2 + e - 1};
}

double ScaledReal::to_double() const {
  if (mantissa == 0.0) return 0.0;
  const long long lo = std::numeric_limits<int>::min();
  const long long hi = std::numeric_limits<int>::max();
  const int e = static_cast<int>(std::clamp(exponent, lo, hi));
  return std::ldexp(mantissa, e);
}

ScaledReal ScaledReal::operator*(const ScaledReal& o) const {
  if (is_zero() || o.is_zero()) return {};
  return make(mantissa * o.mantissa, exponent + o.exponent);
}

bool ScaledReal::operator<(const ScaledReal& o) const {
  if (is_zero()) return !o.is_zero();
  if (o.is_zero()) return false;
  if (exponent != o.exponent) return exponent < o.exponent;
  return mantissa < o.mantissa;
}

bool ScaledReal::operator==(const ScaledReal& o) const {
  return mantissa == o.mantissa && (is_zero() || exponent == o.exponent);
}

ReducedForm reduce_instance(const QcsatInstance& inst) {
  validate_instance(inst);
  const GadgetizedCircuit gadget = gadgetize(inst.circuit);
  const std::size_t t = gadget.angles.size();
  const std::size_t total = gadget.clifford.num_qubits;

  ReducedForm rf;
  rf.t = t;
  rf.angles = gadget.angles;
  rf.num_witness = inst.witness.size();

  // Acceptance projector: |1><1| on every output qubit (generator -Z) and
  // |0><0| on every gadget qubit (generator +Z).
  std::vector<PauliString> gens;
  gens.reserve(inst.outputs.size() + t);
  for (std::size_t o : inst.outputs) {
    PauliString p(total);
    p.z.set(o, true);
    p.phase_exp = 2;  // -Z
    gens.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < t; ++j) {
    PauliString p(total);
    p.z.set(gadget.base_qubits + j, true);
    gens.push_back(std::move(p));
  }
  StabilizerProjector proj = make_projector(total, std::move(gens));

  // Heisenberg step: C^dag Pi C.
  const CliffordTableau ctab = CliffordTableau::from_circuit(gadget.clifford);
  proj = conjugate_projector(proj, ctab.inverse());

  // Project every ancilla onto <0|...|0>, highest index first so the
  // remaining indices stay stable; gadget qubits slide down to sit right
  // above the witness register.
  std::vector<std::size_t> ancillas = inst.ancilla;
  std::sort(ancillas.begin(), ancillas.end(), std::greater<>());
  rf.gamma = true;
  for (std::size_t a : ancillas) {
    QubitProjection qp = project_qubit_zero(proj, a);
    if (qp.projector.is_zero) {
      rf.gamma = false;
      return rf;
    }
    if (qp.halved) ++rf.r;
    proj = std::move(qp.projector);
  }
  QCSAT_CHECK(proj.log2_scalar == 0,
              "reduce_instance: projector scalar drifted");
  QCSAT_CHECK(proj.num_qubits == rf.num_witness + t,
              "reduce_instance: register bookkeeping is off");

  // Split across the witness | magic cut.
  std::vector<std::size_t> left(rf.num_witness), right(t);
  for (std::size_t i = 0; i < rf.num_witness; ++i) left[i] = i;
  for (std::size_t j = 0; j < t; ++j) right[j] = rf.num_witness + j;
  const CanonicalBipartiteForm form =
      bipartite_canonical_form(proj, left, right);
  rf.c_left = form.c_left;
  rf.c_right = form.c_right;

  for (std::size_t i = 0; i < rf.num_witness; ++i) {
    const QubitTag& tag = form.tags[i];
    switch (tag.kind) {
      case TagKind::Zero:
        rf.l1_prime.push_back(i);
        break;
      case TagKind::Free:
        rf.l2_prime.push_back(i);
        break;
      case TagKind::Epr:
        rf.l1.push_back(i);
        rf.l1_partner.push_back(tag.partner - rf.num_witness);
        break;
      case TagKind::Copy:
        rf.l2.push_back(i);
        rf.l2_partner.push_back(tag.partner - rf.num_witness);
        break;
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    switch (form.tags[rf.num_witness + j].kind) {
      case TagKind::Epr:
        rf.r1.push_back(j);
        break;
      case TagKind::Copy:
        rf.r2.push_back(j);
        break;
      case TagKind::Zero:
        rf.r3.push_back(j);
        break;
      case TagKind::Free:
        rf.r4.push_back(j);
        break;
    }
  }
  QCSAT_CHECK(rf.l1.size() == rf.r1.size() && rf.l2.size() == rf.r2.size(),
              "reduce_instance: pairing left/right sizes disagree");
  QCSAT_CHECK(rf.l1.size() + rf.l2.size() <= t,
              "reduce_instance: more pairs than magic qubits");
  return rf;
}

CVec magic_vector(const ReducedForm& rf) {
  if (rf.t > kDenseStateCap) throw CapExceeded("magic_vector");
  const std::size_t dim = std::size_t{1} << rf.t;
  CVec state(dim);
  const double scale = std::pow(0.5, 0.5 * static_cast<double>(rf.t));
  for (std::size_t u = 0; u < dim; ++u) {
    double phase = 0.0;
    for (std::size_t j = 0; j < rf.t; ++j)
      if ((u >> j) & 1u) phase += rf.angles[j];
    state[static_cast<Eigen::Index>(u)] =
        scale * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  for (const Gate& g : rf.c_right.compile()) apply_gate_dense(state, g);
  return state;
}

CVec sliced_magic_vector(const ReducedForm& rf, const CVec& phi,
                         std::uint64_t sigma) {
  QCSAT_CHECK(static_cast<std::size_t>(phi.size()) == (std::size_t{1} << rf.t),
              "sliced_magic_vector: wrong magic-vector length");
  const std::size_t keep = rf.r1.size() + rf.r4.size();
  std::size_t base = 0;
  for (std::size_t j = 0; j < rf.r2.size(); ++j)
    if ((sigma >> j) & 1u) base |= std::size_t{1} << rf.r2[j];
  CVec out(std::size_t{1} << keep);
  for (std::size_t v = 0; v < (std::size_t{1} << keep); ++v) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < rf.r1.size(); ++j)
      if ((v >> j) & 1u) idx |= std::size_t{1} << rf.r1[j];
    for (std::size_t j = 0; j < rf.r4.size(); ++j)
      if ((v >> (rf.r1.size() + j)) & 1u) idx |= std::size_t{1} << rf.r4[j];
    out[static_cast<Eigen::Index>(v)] = phi[static_cast<Eigen::Index>(idx)];
  }
  return out;
}

double lambda_max_power_iters(const CVec& state,
                              const std::vector<std::size_t>& cut,
                              std::size_t iters, std::uint64_t seed) {
  if (iters == 0)
    throw std::invalid_argument("lambda_max_power: need at least 1 iteration");
  return solve_cut(state, cut, /*exact=*/false, iters, seed, false).lambda;
}

double lambda_max_power(const CVec& state, const std::vector<std::size_t>& cut,
                        double delta, std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("lambda_max_power: delta must be in (0,1)");
  const std::size_t q = log2_dim(state, "lambda_max_power");
  const auto iters = static_cast<std::size_t>(
      std::ceil(100.0 * static_cast<double>(q) / delta));
  return lambda_max_power_iters(state, cut, std::max<std::size_t>(iters, 1),
                                seed);
}

double lambda_max_exact(const CVec& state,
                        const std::vector<std::size_t>& cut) {
  return solve_cut(state, cut, /*exact=*/true, 0, 0, false).lambda;
}

namespace {

struct SigmaScan {
  double best = 0.0;           // max_sigma ||phi(sigma)||^2 * lambda_max
  std::uint64_t best_sigma = 0;
  CVec best_avec;              // unit vector on the r1 slice register
};

// Evaluates the per-sigma spectral quantities. `exact` chooses the dense
// eigensolve; otherwise each sigma gets the power method with its own
// deterministic seed.
SigmaScan scan_sigmas(const ReducedForm& rf, const CVec& phi, bool exact,
                      double delta, std::uint64_t seed, bool want_vec) {
  SigmaScan scan;
  const std::size_t l1 = rf.r1.size();
  std::vector<std::size_t> cut(l1);
  for (std::size_t j = 0; j < l1; ++j) cut[j] = j;
  const std::size_t sigma_count = std::size_t{1} << rf.r2.size();
  bool have = false;
  for (std::uint64_t sigma = 0; sigma < sigma_count; ++sigma) {
    CVec slice = sliced_magic_vector(rf, phi, sigma);
    const double norm2 = slice.squaredNorm();
    if (norm2 <= 0.0) continue;
    slice /= std::sqrt(norm2);
    double lambda = 1.0;  // empty cut: scalar reduced state of a unit vector
    if (l1 > 0) {
      if (exact) {
        lambda = solve_cut(slice, cut, true, 0, 0, false).lambda;
      } else {
        const std::size_t q = log2_dim(slice, "estimate_val");
        const auto iters = std::max<std::size_t>(
            static_cast<std::size_t>(
                std::ceil(100.0 * static_cast<double>(q) / delta)),
            1);
        lambda =
            solve_cut(slice, cut, false, iters, sigma_seed(seed, sigma), false)
                .lambda;
      }
    }
    const double xi = norm2 * lambda;
    if (!have || xi > scan.best) {
      have = true;
      scan.best = xi;
      scan.best_sigma = sigma;
    }
  }
  if (want_vec) {
    CVec slice = sliced_magic_vector(rf, phi, scan.best_sigma);
    const double norm2 = slice.squaredNorm();
    if (norm2 > 0.0) {
      slice /= std::sqrt(norm2);
      const auto iters =
          exact ? 0
                : std::max<std::size_t>(
                      static_cast<std::size_t>(std::ceil(
                          100.0 *
                          static_cast<double>(log2_dim(slice, "witness")) /
                          delta)),
                      1);
      scan.best_avec = solve_cut(slice, cut, exact, iters,
                                 sigma_seed(seed, scan.best_sigma), true)
                           .avec;
    } else {
      scan.best_avec = CVec::Unit(std::int64_t{1} << l1, 0);
    }
  }
  return scan;
}

std::vector<std::uint8_t> sigma_bits(std::uint64_t sigma, std::size_t len) {
  std::vector<std::uint8_t> bits(len);
  for (std::size_t j = 0; j < len; ++j)
    bits[j] = static_cast<std::uint8_t>((sigma >> j) & 1u);
  return bits;
}

ValEstimate value_from_scan(const ReducedForm& rf, const SigmaScan& scan) {
  ValEstimate est;
  const long long exponent = static_cast<long long>(rf.t) -
                             static_cast<long long>(rf.r) -
                             static_cast<long long>(rf.r1.size());
  est.value = ScaledReal::make(scan.best, exponent);
  // Eigensolver roundoff can land an ulp or two above the exact boundary;
  // the value is a probability, so pin it back.
  const ScaledReal one = ScaledReal::make(1.0);
  if (one < est.value) est.value = one;
  est.sigma_star = sigma_bits(scan.best_sigma, rf.r2.size());
  return est;
}

}  // namespace

ValEstimate estimate_val(const QcsatInstance& inst, double delta,
                         std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("estimate_val: delta must be in (0,1)");
  const ReducedForm rf = reduce_instance(inst);
  ValEstimate est;
  est.mode = ValMode::Randomized;
  est.delta = delta;
  est.seed = seed;
  if (!rf.gamma) return est;
  const CVec phi = magic_vector(rf);
  const SigmaScan scan = scan_sigmas(rf, phi, false, delta, seed, false);
  ValEstimate valued = value_from_scan(rf, scan);
  est.value = valued.value;
  est.sigma_star = std::move(valued.sigma_star);
  return est;
}

ValEstimate exact_val(const QcsatInstance& inst) {
  const ReducedForm rf = reduce_instance(inst);
  ValEstimate est;
  est.mode = ValMode::Exact;
  if (!rf.gamma) return est;
  if (rf.t > static_cast<std::size_t>(kExactValTCap))
    throw CapExceeded("exact_val: t exceeds the exact-mode cap");
  const CVec phi = magic_vector(rf);
  const SigmaScan scan = scan_sigmas(rf, phi, true, 0.0, 0, false);
  ValEstimate valued = value_from_scan(rf, scan);
  est.value = valued.value;
  est.sigma_star = std::move(valued.sigma_star);
  return est;
}

WitnessRecipe extract_witness(const QcsatInstance& inst, ValMode mode,
                              double delta, std::uint64_t seed) {
  const ReducedForm rf = reduce_instance(inst);
  if (!rf.gamma)
    throw std::invalid_argument(
        "extract_witness: the instance rejects every witness (value 0)");
  const bool exact = mode == ValMode::Exact;
  if (exact && rf.t > static_cast<std::size_t>(kExactValTCap))
    throw CapExceeded("extract_witness: t exceeds the exact-mode cap");
  if (!exact && !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("extract_witness: delta must be in (0,1)");

  const CVec phi_magic = magic_vector(rf);
  const SigmaScan scan =
      scan_sigmas(rf, phi_magic, exact, delta, seed, /*want_vec=*/true);

  WitnessRecipe recipe;
  recipe.num_qubits = rf.num_witness;
  recipe.w_gates = rf.c_left.inverse().compile();
  recipe.zero_qubits = rf.l1_prime;
  recipe.free_qubits = rf.l2_prime;

  // phi lives on the paired witness qubits (l1 and l2 merged, ascending).
  // The EPR-paired part carries the complex conjugate of the maximizing
  // magic-side vector; the copy-paired part is pinned to sigma*.
  std::vector<std::size_t> support;
  support.reserve(rf.l1.size() + rf.l2.size());
  support.insert(support.end(), rf.l1.begin(), rf.l1.end());
  support.insert(support.end(), rf.l2.begin(), rf.l2.end());
  std::vector<std::size_t> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support[a] < support[b];
  });

  // For the i-th qubit of phi (ascending witness-local order), record
  // whether it is EPR- or copy-paired and which bit of the magic-side
  // objects it corresponds to.
  struct Wire {
    bool epr = false;
    std::size_t bit = 0;  // bit index into avec (epr) or sigma* (copy)
  };
  std::vector<Wire> wires(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t which = order[i];
    Wire w;
    if (which < rf.l1.size()) {
      w.epr = true;
      const std::size_t partner = rf.l1_partner[which];
      const auto it = std::find(rf.r1.begin(), rf.r1.end(), partner);
      QCSAT_CHECK(it != rf.r1.end(), "extract_witness: missing EPR partner");
      w.bit = static_cast<std::size_t>(it - rf.r1.begin());
    } else {
      const std::size_t partner = rf.l2_partner[which - rf.l1.size()];
      const auto it = std::find(rf.r2.begin(), rf.r2.end(), partner);
      QCSAT_CHECK(it != rf.r2.end(), "extract_witness: missing copy partner");
      w.bit = static_cast<std::size_t>(it - rf.r2.begin());
    }
    wires[i] = w;
  }

  const std::size_t support_bits = order.size();
  recipe.phi = CVec::Zero(std::int64_t{1} << support_bits);
  for (std::size_t b = 0; b < (std::size_t{1} << support_bits); ++b) {
    bool compatible = true;
    std::size_t avec_index = 0;
    for (std::size_t i = 0; i < support_bits && compatible; ++i) {
      const bool bit = (b >> i) & 1u;
      if (wires[i].epr) {
        if (bit) avec_index |= std::size_t{1} << wires[i].bit;
      } else if (bit != ((scan.best_sigma >> wires[i].bit) & 1u)) {
        compatible = false;
      }
    }
    if (!compatible) continue;
    recipe.phi[static_cast<Eigen::Index>(b)] =
        std::conj(scan.best_avec[static_cast<Eigen::Index>(avec_index)]);
  }
  return recipe;
}

CVec realize_witness_dense(const WitnessRecipe& recipe) {
  const std::size_t n = recipe.num_qubits;
  if (n > kDenseStateCap) throw CapExceeded("realize_witness_dense");

  std::vector<bool> pinned(n, false);
  for (std::size_t qb : recipe.zero_qubits) pinned.at(qb) = true;
  for (std::size_t qb : recipe.free_qubits) pinned.at(qb) = true;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (!pinned[i]) support.push_back(i);
  QCSAT_CHECK(
      (std::int64_t{1} << support.size()) == recipe.phi.size(),
      "realize_witness_dense: phi length disagrees with the qubit split");

  CVec state = CVec::Zero(std::int64_t{1} << n);
  for (std::size_t b = 0; b < (std::size_t{1} << support.size()); ++b) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < support.size(); ++j)
      if ((b >> j) & 1u) idx |= std::size_t{1} << support[j];
    state[static_cast<Eigen::Index>(idx)] =
        recipe.phi[static_cast<Eigen::Index>(b)];
  }
  for (const Gate& g : recipe.w_gates) apply_gate_dense(state, g);
  return state;
}

QcsatDecision decide_qcsat(const QcsatInstance& inst, double a, double b,
                           std::uint64_t seed) {
  if (!(b >= 0.0 && b < a && a <= 1.0))
    throw std::invalid_argument("decide_qcsat: need 0 <= b < a <= 1");
  QcsatDecision decision;
  const std::size_t t = inst.circuit.t_count();
  if (t <= static_cast<std::size_t>(kExactValTCap)) {
    decision.estimate = exact_val(inst);
  } else {
    const double delta = 1.0 - (a + b) / (2.0 * a);
    decision.estimate = estimate_val(inst, delta, seed);
  }
  const ScaledReal midpoint = ScaledReal::make(0.5 * (a + b));
  decision.yes = midpoint < decision.estimate.value;
  return decision;
}

}  // namespace qcsat
