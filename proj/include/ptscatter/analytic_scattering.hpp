#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "ptscatter/core_model.hpp"
#include "ptscatter/scattering_matrix.hpp"

namespace ptscatter {

/// |Gamma| at or below this raises LaserPole.
inline constexpr double kDefaultPoleEpsilon = 1e-12;

/// Tolerance band around Delta = 0 for exact-arithmetic classification.
inline constexpr double kDefaultEpTolerance = 1e-10;

/// Lattice coordinate of the mirror axis of the dimer (between sites 0 and 1).
inline constexpr double kDimerCenter = 0.5;

struct ScatterCoefficients {
  cplx t;    ///< t_L == t_R
  cplx r_L;  ///< left-incidence reflection amplitude, site-0 referenced
  cplx r_R;  ///< right-incidence reflection amplitude, site-0 referenced
  double T;
  double R_L;
  double R_R;
  double k;

  /// r_L conj(r_R) with both amplitudes referenced to the mirror axis.
  /// Equals 1 - T for the PT-symmetric dimer.
  cplx reflection_product() const noexcept;
};

enum class PtPhase { Exact, Broken, ExceptionalPoint };

std::string_view to_string(PtPhase phase) noexcept;

struct Discriminant {
  double value;
  /// gamma = U = 0: the defect term is 0/0 and has been dropped.
  bool degenerate;
};

struct PhaseReport {
  double delta;
  double T;
  cplx s1;  ///< larger modulus
  cplx s2;
  PtPhase classification;
};

struct ExceptionalPoints {
  double omega_minus;
  double omega_plus;
  bool minus_in_band;  ///< omega_minus inside (-2, 2)
  bool plus_in_band;
  bool degenerate;     ///< gamma = 0: Delta only touches zero at omega = U
};

/// Gamma = (U - e^{-ik})^2 + gamma^2 - 1, the common denominator of S.
cplx gamma_factor(const ModelParams& params, const WavePoint& wp) noexcept;

/// Closed-form S-matrix. Throws Error{LaserPole} when |Gamma| <= pole_eps.
ScatteringMatrix s_matrix(const ModelParams& params, const WavePoint& wp,
                          double pole_eps = kDefaultPoleEpsilon);

ScatterCoefficients scattering_coefficients(const ModelParams& params, const WavePoint& wp,
                                            double pole_eps = kDefaultPoleEpsilon);

/// T(omega) as a single rational function of U, gamma, omega.
double transmission_closed_form(const ModelParams& params, double omega,
                                double band_eps = kDefaultBandEpsilon,
                                double pole_eps = kDefaultPoleEpsilon);

/// Delta = (omega - U)^2 + gamma^2 (gamma^2 + U^2 - 4) / (gamma^2 + U^2).
/// Delta > 0: unimodular S eigenvalues; Delta < 0: reciprocal moduli.
Discriminant discriminant(const ModelParams& params, double omega) noexcept;

/// g = -(gamma^2 + U^2) / (4 - omega^2); g * Delta = (T - 1) / T.
double g_factor(const ModelParams& params, double omega) noexcept;

/// s_{1,2} = t (1 +- sqrt(g Delta)), principal root, ordered by descending
/// modulus with near-ties broken by ascending arg.
std::pair<cplx, cplx> s_eigenvalues_closed(const ModelParams& params, const WavePoint& wp,
                                           double pole_eps = kDefaultPoleEpsilon);

/// Roots of lambda^2 - tr(S) lambda + det(S), larger root first, same ordering.
std::pair<cplx, cplx> s_eigenvalues_direct(const ScatteringMatrix& s) noexcept;

/// Sorts an eigenvalue pair into the reporting order.
std::pair<cplx, cplx> order_eigenvalues(cplx a, cplx b) noexcept;

PhaseReport classify_phase(const ModelParams& params, double omega,
                           double tol_ep = kDefaultEpTolerance,
                           double band_eps = kDefaultBandEpsilon,
                           double pole_eps = kDefaultPoleEpsilon);

/// None when gamma^2 + U^2 >= 4 (exact phase at every omega).
std::optional<ExceptionalPoints> exceptional_points(const ModelParams& params) noexcept;

}  // namespace ptscatter
