#pragma once

#include <vector>

#include "ptscatter/core_model.hpp"
#include "ptscatter/scattering_matrix.hpp"

namespace ptscatter::oracle {

/// Complex on-site potentials v_0 .. v_{m-1} embedded at sites 0 .. m-1 of an
/// otherwise uniform infinite chain.
class DefectChain {
 public:
  DefectChain() = default;
  /// Throws Error{NonFinite} if any potential is NaN/inf.
  explicit DefectChain(std::vector<cplx> potentials);

  const std::vector<cplx>& potentials() const noexcept { return potentials_; }
  std::size_t size() const noexcept { return potentials_.size(); }

  /// v_j == conj(v_{m-1-j}) for all j (mirror axis at the chain center).
  bool pt_symmetric() const noexcept { return pt_symmetric_; }

  /// Lattice coordinate of the mirror axis, (m - 1) / 2.
  double center() const noexcept;

 private:
  std::vector<cplx> potentials_;
  bool pt_symmetric_ = true;
};

enum class Side { Left, Right };

struct OracleSolution {
  cplx r;
  cplx t;
  std::vector<cplx> interior;  ///< A_0 .. A_{m-1}
  Side side;
  double max_residual;         ///< worst lattice residual / (1 + max|A|), n = -2 .. m+1
  double condition;            ///< 2-norm condition number of the matching system
};

/// The PT dimer [U + i gamma, U - i gamma].
DefectChain two_site_chain(const ModelParams& params);

/// Solves omega A_n = A_{n-1} + A_{n+1} + v_n A_n with exact plane-wave
/// closure. Left injection: A_n = e^{ikn} + r e^{-ikn} (n <= -1),
/// A_n = t e^{ikn} (n >= m). Right injection is the mirror construction.
/// Throws Error{SingularSystem} if the matching system is numerically singular.
OracleSolution oracle_scatter(const DefectChain& chain, const WavePoint& wp, Side side);

/// S assembled from one left and one right solve; plane waves referenced to site 0.
ScatteringMatrix oracle_s_matrix(const DefectChain& chain, const WavePoint& wp);

}  // namespace ptscatter::oracle
