// Project-wide caps, tolerances, and error types.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcsat {

// Hard caps on dense-vector work. Dense statevectors allocate 2^n complex
// doubles; 2^26 is ~1 GiB and the practical ceiling in this environment.
inline constexpr int kDenseStateCap = 26;
// Dense unitary matrices square that: 2^12 x 2^12 complex is ~256 MiB.
inline constexpr int kDenseUnitaryCap = 12;
// T-count cap for the exact (eigensolve) value path. The Gram trick keeps the
// matrix at 2^{ceil(t/2)} per side, so t = 14 means a 128x128 eigensolve.
inline constexpr int kExactValTCap = 14;
// Compressed-width cap for the dense eigensolve in the Heisenberg solver.
inline constexpr int kCompressCap = 12;
// Lightcone decider: a causal cone is simulated densely on its own qubits.
inline constexpr int kLightconeConeCap = kDenseUnitaryCap;

// Numeric tolerances.
inline constexpr double kAcceptTol = 1e-9;     // value/probability agreement
inline constexpr double kIdentityTol = 1e-9;   // per-entry identity check
inline constexpr double kHermitianTol = 1e-12; // Hermiticity of built matrices
inline constexpr double kCoeffPrune = 1e-14;   // drop tiny propagated terms

// Internal invariant check that survives release builds: these guard
// algebraic facts the algorithms rely on, so silent corruption is worse
// than an exception.
#define QCSAT_CHECK(cond, msg)                                   \
  do {                                                           \
    if (!(cond)) throw std::logic_error(std::string("internal: ") + (msg)); \
  } while (0)

// Thrown when an input exceeds a documented cap (CLI exit code 3).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed circuit files or inconsistent instances (exit code 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcsat
