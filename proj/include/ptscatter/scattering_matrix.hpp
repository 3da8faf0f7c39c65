#pragma once

#include <complex>
#include <utility>

namespace ptscatter {

using cplx = std::complex<double>;

/// S maps incoming (F_b^+, F_f^-) to outgoing (F_b^-, F_f^+):
///
///     | t_R  r_L |
///     | r_R  t_L |
///
/// Plane waves are referenced to site 0, i.e. A_n = F_f e^{ikn} + F_b e^{-ikn}
/// on both sides of the scatterer.
struct ScatteringMatrix {
  cplx s11, s12, s21, s22;

  cplx t_right() const noexcept { return s11; }
  cplx r_left() const noexcept { return s12; }
  cplx r_right() const noexcept { return s21; }
  cplx t_left() const noexcept { return s22; }

  cplx trace() const noexcept { return s11 + s22; }
  cplx det() const noexcept { return s11 * s22 - s12 * s21; }
};

/// M maps left amplitudes (F_f^-, F_b^-) to right amplitudes (F_f^+, F_b^+).
struct TransferMatrix {
  cplx m11, m12, m21, m22;

  cplx det() const noexcept { return m11 * m22 - m12 * m21; }
};

/// Re-references the plane waves of a scatterer whose mirror axis sits at
/// lattice coordinate `center` (1/2 for the two-site dimer). Transmissions are
/// unchanged; r_L picks up e^{-2ik c}, r_R picks up e^{+2ik c}. In this gauge a
/// PT-symmetric scatterer satisfies conj(S) = S^{-1} exactly.
ScatteringMatrix recenter(const ScatteringMatrix& s, double k, double center) noexcept;

/// Same re-referencing for the transfer matrix: m12 -> m12 e^{2ik c},
/// m21 -> m21 e^{-2ik c}. Afterwards conj(M) = M^{-1} for PT-symmetric scatterers.
TransferMatrix recenter(const TransferMatrix& m, double k, double center) noexcept;

ScatteringMatrix inverse(const ScatteringMatrix& s) noexcept;
TransferMatrix inverse(const TransferMatrix& m) noexcept;

/// Largest elementwise |conj(A) - A^{-1}|.
double pseudo_unitarity_defect(const ScatteringMatrix& s) noexcept;
double pseudo_unitarity_defect(const TransferMatrix& m) noexcept;

/// Largest elementwise |a - b|.
double max_abs_diff(const ScatteringMatrix& a, const ScatteringMatrix& b) noexcept;

}  // namespace ptscatter
