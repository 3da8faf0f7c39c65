#pragma once

#include <numbers>

namespace ptscatter {

/// Hopping amplitude; every energy in the library is measured in units of it.
inline constexpr double kHopping = 1.0;

/// Default collar excluded around the band edges omega = +-2.
inline constexpr double kDefaultBandEpsilon = 1e-9;

/// Parameters of the infinite chain with defects U + i*gamma (site 0) and
/// U - i*gamma (site 1).
///
/// gamma is stored non-negative. A negative input gamma describes the parity
/// image of the canonical model; it is recorded through `mirrored` so that
/// quantities which are not parity invariant (r_L versus r_R) stay correct.
struct ModelParams {
  double U = 0.0;
  double gamma = 0.0;
  bool mirrored = false;

  /// gamma as it enters the site-0 potential U + i*gamma.
  double signed_gamma() const noexcept { return mirrored ? -gamma : gamma; }

  /// |U| < 2: the real part lies inside the band and supports the resonance.
  bool resonance_ok() const noexcept { return U < 2.0 && U > -2.0; }

  /// gamma^2 + U^2, the combination that appears throughout the closed forms.
  double strength_sq() const noexcept { return gamma * gamma + U * U; }
};

/// In-band plane wave: momentum k in (0, pi) and omega = 2 cos k.
/// Construct through k_from_omega / omega_from_k, which keep the pair in sync.
class WavePoint {
 public:
  double k() const noexcept { return k_; }
  double omega() const noexcept { return omega_; }

 private:
  WavePoint(double k, double omega) noexcept : k_(k), omega_(omega) {}

  double k_;
  double omega_;

  friend WavePoint k_from_omega(double, double);
  friend WavePoint omega_from_k(double, double);
};

/// Principal branch k = arccos(omega / 2). Throws Error{BandEdge} when
/// |omega| >= 2 - band_eps.
WavePoint k_from_omega(double omega, double band_eps = kDefaultBandEpsilon);

/// Throws Error{BandEdge} unless band_eps < k < pi - band_eps.
WavePoint omega_from_k(double k, double band_eps = kDefaultBandEpsilon);

/// Throws Error{NonFinite} on NaN/inf. Negative gamma is folded onto the
/// parity image (gamma -> -gamma, mirrored = true).
ModelParams validate_params(double U, double gamma);

}  // namespace ptscatter
