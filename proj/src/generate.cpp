#include "qcsat/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcsat/config.hpp"
#include "qcsat/rng.hpp"

namespace qcsat {

namespace {

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

void validate_ising(const IsingSpec& spec) {
  if (spec.num_vertices == 0)
    throw std::invalid_argument("ising: graph must have at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : spec.edges) {
    if (a >= spec.num_vertices || b >= spec.num_vertices)
      throw std::invalid_argument("ising: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("ising: self-loops not allowed");
    if (!seen.insert(ordered(a, b)).second)
      throw std::invalid_argument("ising: duplicate edge");
  }
}

IsingSpec parse_ising(std::istream& in) {
  IsingSpec spec;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (first == "vertices") {
      if (have_header) throw ParseError("ising: duplicate vertices header" + where);
      if (!(ls >> spec.num_vertices))
        throw ParseError("ising: expected `vertices N`" + where);
      have_header = true;
    } else {
      if (!have_header)
        throw ParseError("ising: `vertices N` must come first" + where);
      std::size_t a = 0, b = 0;
      std::istringstream es(first);
      if (!(es >> a) || !es.eof() || !(ls >> b))
        throw ParseError("ising: expected `u v` edge pair" + where);
      spec.edges.emplace_back(a, b);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("ising: trailing tokens" + where);
  }
  if (!have_header) throw ParseError("ising: missing `vertices N` header");
  try {
    validate_ising(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

long long ising_min_energy(const IsingSpec& spec) {
  validate_ising(spec);
  if (spec.num_vertices > kDenseStateCap)
    throw CapExceeded("ising_min_energy: too many vertices for brute force");
  long long best = std::numeric_limits<long long>::max();
  for (std::size_t assign = 0; assign < (std::size_t{1} << spec.num_vertices);
       ++assign) {
    // Z|0> = +|0>: bit 0 is spin +1.
    const auto spin = [&](std::size_t v) -> long long {
      return (assign >> v & 1u) ? -1 : 1;
    };
    long long energy = 0;
    for (const auto& [a, b] : spec.edges) energy += spin(a) * spin(b);
    for (std::size_t v = 0; v < spec.num_vertices; ++v) energy += spin(v);
    best = std::min(best, energy);
  }
  return best;
}

double ising_value(const IsingSpec& spec) {
  const auto mprime =
      static_cast<double>(spec.edges.size() + spec.num_vertices);
  const double shifted = static_cast<double>(ising_min_energy(spec)) - mprime;
  const double m = 2.0 * mprime;
  return (shifted / m) * (shifted / m);
}

CVec w_state(std::size_t m) {
  QCSAT_CHECK(m >= 1 && m <= kDenseStateCap, "w_state: bad register size");
  CVec v = CVec::Zero(static_cast<Eigen::Index>(std::size_t{1} << m));
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    v[static_cast<Eigen::Index>(std::size_t{1} << i)] = amp;
  return v;
}

Circuit w2_preparation() {
  Circuit c;
  c.num_qubits = 2;
  c.gates = {Gate::h(0), Gate::cx(0, 1), Gate::x(1)};
  return c;
}

namespace {

// List-order Y rotation on qubit q: the matrix S H Rz(theta) H Sdg equals
// e^{i theta/2} Ry(theta); the global phase cancels against the inverse leg.
void push_ry(std::vector<Gate>& gates, double theta, std::uint32_t q) {
  gates.push_back(Gate::sdg(q));
  gates.push_back(Gate::h(q));
  gates.push_back(Gate::rz(theta, q));
  gates.push_back(Gate::h(q));
  gates.push_back(Gate::s(q));
}

// Controlled Ry(theta): Ry(theta/2), CX, Ry(-theta/2), CX on the target.
void push_cry(std::vector<Gate>& gates, double theta, std::uint32_t c,
              std::uint32_t t) {
  push_ry(gates, theta / 2, t);
  gates.push_back(Gate::cx(c, t));
  push_ry(gates, -theta / 2, t);
  gates.push_back(Gate::cx(c, t));
}

}  // namespace

Circuit w_state_preparation(std::size_t m) {
  QCSAT_CHECK(m >= 1, "w_state_preparation: need at least one qubit");
  Circuit c;
  c.num_qubits = m;
  c.gates.push_back(Gate::x(0));
  // Step k moves mass from the excitation on qubit k-1 to qubit k, keeping
  // amplitude sqrt(1/(m-k+1)) behind, so every |e_i> ends at 1/sqrt(m).
  for (std::size_t k = 1; k < m; ++k) {
    const double keep = std::sqrt(1.0 / static_cast<double>(m - k + 1));
    const double theta = 2.0 * std::acos(keep);
    const auto prev = static_cast<std::uint32_t>(k - 1);
    const auto cur = static_cast<std::uint32_t>(k);
    push_cry(c.gates, theta, prev, cur);
    c.gates.push_back(Gate::cx(cur, prev));
  }
  return c;
}

Circuit ising_control_circuit(const IsingSpec& spec) {
  validate_ising(spec);
  const std::size_t v = spec.num_vertices;
  const std::size_t mprime = spec.edges.size() + spec.num_vertices;
  Circuit c;
  c.num_qubits = v + 2 * mprime;
  std::size_t ctrl = v;
  for (const auto& [a, b] : spec.edges) {
    c.gates.push_back(Gate::cz(static_cast<std::uint32_t>(ctrl),
                               static_cast<std::uint32_t>(a)));
    c.gates.push_back(Gate::cz(static_cast<std::uint32_t>(ctrl),
                               static_cast<std::uint32_t>(b)));
    ++ctrl;
  }
  for (std::size_t a = 0; a < v; ++a) {
    c.gates.push_back(Gate::cz(static_cast<std::uint32_t>(ctrl),
                               static_cast<std::uint32_t>(a)));
    ++ctrl;
  }
  for (std::size_t i = 0; i < mprime; ++i)
    c.gates.push_back(Gate::z(static_cast<std::uint32_t>(ctrl + i)));
  return c;
}

QcsatInstance ising_to_qcsat(const IsingSpec& spec, const Circuit& wprep) {
  validate_ising(spec);
  const std::size_t v = spec.num_vertices;
  const std::size_t m = 2 * (spec.edges.size() + spec.num_vertices);
  if (wprep.num_qubits < m)
    throw std::invalid_argument(
        "ising_to_qcsat: preparation circuit spans fewer qubits than the "
        "control register");
  const std::size_t total = v + wprep.num_qubits;

  // wprep qubit j lives at v + j: control register first, junk after.
  std::vector<std::size_t> map(wprep.num_qubits);
  for (std::size_t j = 0; j < wprep.num_qubits; ++j) map[j] = v + j;
  const std::vector<Gate> prep = remap_qubits(wprep.gates, map);

  QcsatInstance inst;
  inst.circuit.num_qubits = total;
  inst.circuit.gates = prep;
  const Circuit control = ising_control_circuit(spec);
  inst.circuit.gates.insert(inst.circuit.gates.end(), control.gates.begin(),
                            control.gates.end());
  const std::vector<Gate> unprep = dagger_sequence(prep);
  inst.circuit.gates.insert(inst.circuit.gates.end(), unprep.begin(),
                            unprep.end());
  for (std::size_t i = 0; i < m; ++i)
    inst.circuit.gates.push_back(Gate::x(static_cast<std::uint32_t>(v + i)));

  for (std::size_t q = 0; q < v; ++q) inst.witness.push_back(q);
  for (std::size_t q = v; q < total; ++q) inst.ancilla.push_back(q);
  for (std::size_t i = 0; i < m; ++i) inst.outputs.push_back(v + i);
  validate_instance(inst);
  return inst;
}

QcsatInstance random_instance(std::size_t n, std::size_t m, std::size_t s,
                              std::size_t t, std::uint64_t seed) {
  if (t > s)
    throw std::invalid_argument("random_instance: more T gates than gates");
  if (m == 0)
    throw std::invalid_argument(
        "random_instance: need at least one ancilla for the output register");
  const std::size_t total = n + m;
  Rng rng(seed);

  const auto random_qubit = [&] {
    return static_cast<std::uint32_t>(rng.below(total));
  };
  const auto random_clifford = [&]() -> Gate {
    const std::uint32_t q = random_qubit();
    if (total >= 2 && rng.below(3) == 0) {
      std::uint32_t r = static_cast<std::uint32_t>(rng.below(total - 1));
      if (r >= q) ++r;
      switch (rng.below(3)) {
        case 0: return Gate::cx(q, r);
        case 1: return Gate::cz(q, r);
        default: return Gate::swap(q, r);
      }
    }
    switch (rng.below(6)) {
      case 0: return Gate::h(q);
      case 1: return Gate::s(q);
      case 2: return Gate::sdg(q);
      case 3: return Gate::x(q);
      case 4: return Gate::y(q);
      default: return Gate::z(q);
    }
  };

  QcsatInstance inst;
  inst.circuit.num_qubits = total;
  for (std::size_t i = 0; i < s - t; ++i)
    inst.circuit.gates.push_back(random_clifford());
  for (std::size_t i = 0; i < t; ++i)
    inst.circuit.gates.push_back(Gate::t(random_qubit()));
  for (std::size_t i = inst.circuit.gates.size(); i > 1; --i)
    std::swap(inst.circuit.gates[i - 1], inst.circuit.gates[rng.below(i)]);

  for (std::size_t q = 0; q < n; ++q) inst.witness.push_back(q);
  for (std::size_t q = n; q < total; ++q) inst.ancilla.push_back(q);

  std::vector<std::size_t> pool = inst.ancilla;
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng.below(i)]);
  const std::size_t k = 1 + rng.below(m);
  inst.outputs.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(inst.outputs.begin(), inst.outputs.end());
  validate_instance(inst);
  return inst;
}

}  // namespace qcsat
