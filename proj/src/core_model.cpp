#include "ptscatter/core_model.hpp"

#include <cmath>
#include <sstream>

#include "ptscatter/errors.hpp"

namespace ptscatter {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BandEdge: return "BandEdge";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::LaserPole: return "LaserPole";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

WavePoint k_from_omega(double omega, double band_eps) {
  if (!std::isfinite(omega) || std::abs(omega) >= 2.0 - band_eps) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "omega = " << omega << " is outside the open band (-2, 2) minus a collar of "
        << band_eps;
    throw Error(ErrorKind::BandEdge, msg.str());
  }
  // The caller's omega is kept verbatim; 2 cos(acos(x)) reproduces it to a few ulp.
  return WavePoint(std::acos(omega / 2.0), omega);
}

WavePoint omega_from_k(double k, double band_eps) {
  if (!std::isfinite(k) || k <= band_eps || k >= std::numbers::pi - band_eps) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "k = " << k << " is not strictly inside (0, pi) with collar " << band_eps;
    throw Error(ErrorKind::BandEdge, msg.str());
  }
  return WavePoint(k, 2.0 * std::cos(k));
}

ModelParams validate_params(double U, double gamma) {
  if (!std::isfinite(U) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::NonFinite, "model parameters U and gamma must be finite");
  }
  ModelParams p;
  p.U = U;
  p.gamma = std::abs(gamma);
  p.mirrored = gamma < 0.0;
  return p;
}

}  // namespace ptscatter
