#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptscatter {

/// Deliberate corruption of the closed-form S-matrix, used to prove that the
/// suite actually detects broken formulas.
enum class Fault { None, NegateS12 };

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t hermitian_samples = 200;
  Fault fault = Fault::None;
};

struct InvariantResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string worst_sample;  ///< "U=..,gamma=..,omega=.." of the largest residual

  bool passed() const noexcept { return max_residual <= tolerance; }
};

struct VerificationReport {
  std::size_t samples = 0;
  std::size_t hermitian_samples = 0;
  std::uint64_t seed = 0;
  std::vector<InvariantResult> invariants;

  bool passed() const noexcept;
  const InvariantResult* find(const std::string& name) const noexcept;
};

/// Random points: U in [-1.9, 1.9], gamma in [0, 3], omega in (-1.99, 1.99),
/// redrawn while |Gamma| < 1e-6. Compares closed forms against the lattice
/// oracle and checks every scattering identity.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace ptscatter
