#include "ptscatter/transfer_matrix.hpp"

#include <cmath>
#include <sstream>

#include "ptscatter/errors.hpp"

namespace ptscatter {

namespace {

using namespace std::complex_literals;

void check_m22(const TransferMatrix& m, double pole_eps) {
  if (std::abs(m.m22) <= pole_eps) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "transfer matrix has m22 = " << std::abs(m.m22) << " <= " << pole_eps
        << " (laser pole)";
    throw Error(ErrorKind::LaserPole, msg.str());
  }
}

}  // namespace

TransferMatrix m_matrix(const ModelParams& params, const WavePoint& wp) noexcept {
  const double U = params.U;
  const double g = params.signed_gamma();
  const double k = wp.k();
  const double sk = std::sin(k);
  const double ck = std::cos(k);
  const cplx denom = -2.0i * sk;
  const cplx ep = std::polar(1.0, k);
  const cplx em = std::polar(1.0, -k);
  const cplx up = U - ep;
  const cplx um = U - em;

  TransferMatrix m;
  m.m11 = (1.0 - up * up - g * g) * em / denom;
  m.m12 = (2.0 * U * ck - U * U - g * g - 2.0 * g * sk) * em / denom;
  m.m21 = (U * U + g * g - 2.0 * U * ck - 2.0 * g * sk) * ep / denom;
  // m22 = 1 / t_R = Gamma e^{ik} / (-2i sin k), with Gamma built from e^{-ik}.
  m.m22 = (um * um + g * g - 1.0) * ep / denom;
  return m;
}

ScatteringMatrix s_from_m(const TransferMatrix& m, double pole_eps) {
  check_m22(m, pole_eps);
  ScatteringMatrix s;
  s.s11 = 1.0 / m.m22;
  s.s12 = -m.m21 / m.m22;
  s.s21 = m.m12 / m.m22;
  s.s22 = m.det() / m.m22;
  return s;
}

std::optional<CpaPoint> cpa_laser_point(double U) noexcept {
  if (!std::isfinite(U) || !(std::abs(U) < 1.0)) return std::nullopt;
  return CpaPoint{2.0 * U, std::acos(U), std::sqrt(2.0 - U * U)};
}

double output_coefficient_theta(const ModelParams& params, const WavePoint& wp, cplx sigma,
                                double pole_eps) {
  const TransferMatrix m = m_matrix(params, wp);
  check_m22(m, pole_eps);
  const double num = std::norm(1.0 + sigma * m.m12) + std::norm(sigma - m.m21);
  return num / ((1.0 + std::norm(sigma)) * std::norm(m.m22));
}

double output_coefficient_theta_cpa_scan(const ModelParams& params, const WavePoint& wp,
                                         double pole_eps) {
  return output_coefficient_theta(params, wp, m_matrix(params, wp).m21, pole_eps);
}

PortAmplitudes scatter_outputs(const ScatteringMatrix& s, cplx f_b_plus,
                               cplx f_f_minus) noexcept {
  PortAmplitudes p;
  p.f_b_plus = f_b_plus;
  p.f_f_minus = f_f_minus;
  p.f_b_minus = s.s11 * f_b_plus + s.s12 * f_f_minus;
  p.f_f_plus = s.s21 * f_b_plus + s.s22 * f_f_minus;
  return p;
}

double output_ratio(const PortAmplitudes& ports) noexcept {
  return (std::norm(ports.f_b_minus) + std::norm(ports.f_f_plus)) /
         (std::norm(ports.f_f_minus) + std::norm(ports.f_b_plus));
}

}  // namespace ptscatter
