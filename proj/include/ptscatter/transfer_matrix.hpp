#pragma once

#include <optional>

#include "ptscatter/analytic_scattering.hpp"
#include "ptscatter/core_model.hpp"
#include "ptscatter/scattering_matrix.hpp"

namespace ptscatter {

/// The four asymptotic plane-wave coefficients around the scatterer.
struct PortAmplitudes {
  cplx f_f_minus;  ///< incoming from the left
  cplx f_b_minus;  ///< outgoing to the left
  cplx f_f_plus;   ///< outgoing to the right
  cplx f_b_plus;   ///< incoming from the right
};

/// Frequency and loss/gain strength at which the dimer is simultaneously a
/// laser (pole of S) and a coherent perfect absorber.
struct CpaPoint {
  double omega0;
  double k0;
  double gamma_cpa;
};

/// Closed-form transfer matrix, all entries over -2i sin k. Every entry is
/// finite in the band; m22 = Gamma e^{ik} / (-2i sin k) vanishes at the laser
/// pole.
TransferMatrix m_matrix(const ModelParams& params, const WavePoint& wp) noexcept;

/// Two-port conversion. Throws Error{LaserPole} when |m22| <= pole_eps.
ScatteringMatrix s_from_m(const TransferMatrix& m, double pole_eps = kDefaultPoleEpsilon);

/// Self-dual point omega0 = 2U, gamma = sqrt(2 - U^2); exists only for |U| < 1.
std::optional<CpaPoint> cpa_laser_point(double U) noexcept;

/// (|F_b^-|^2 + |F_f^+|^2) / (|F_f^-|^2 + |F_b^+|^2) for injection
/// F_f^- = 1, F_b^+ = sigma, evaluated from the transfer matrix.
/// Throws Error{LaserPole} when |m22| <= pole_eps.
double output_coefficient_theta(const ModelParams& params, const WavePoint& wp, cplx sigma,
                                double pole_eps = kDefaultPoleEpsilon);

/// Theta with sigma = m21(k): the input ratio that a CPA at k would absorb.
double output_coefficient_theta_cpa_scan(const ModelParams& params, const WavePoint& wp,
                                         double pole_eps = kDefaultPoleEpsilon);

/// (F_b^-, F_f^+) = S (F_b^+, F_f^-).
PortAmplitudes scatter_outputs(const ScatteringMatrix& s, cplx f_b_plus,
                               cplx f_f_minus) noexcept;

/// Theta from port amplitudes directly (total out / total in).
double output_ratio(const PortAmplitudes& ports) noexcept;

}  // namespace ptscatter
