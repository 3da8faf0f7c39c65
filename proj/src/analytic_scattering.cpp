#include "ptscatter/analytic_scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ptscatter/errors.hpp"

namespace ptscatter {

namespace {

using namespace std::complex_literals;

[[noreturn]] void throw_pole(const ModelParams& p, double omega, double magnitude) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "laser pole at U = " << p.U << ", gamma = " << p.signed_gamma() << ", omega = " << omega
      << " (|Gamma| = " << magnitude << ")";
  throw Error(ErrorKind::LaserPole, msg.str());
}

// Relative width of the "same modulus" band used when ordering eigenvalues.
constexpr double kModulusTie = 1e-12;

}  // namespace

std::string_view to_string(PtPhase phase) noexcept {
  switch (phase) {
    case PtPhase::Exact: return "exact";
    case PtPhase::Broken: return "broken";
    case PtPhase::ExceptionalPoint: return "ep";
  }
  return "unknown";
}

cplx ScatterCoefficients::reflection_product() const noexcept {
  // (r_L e^{-2ikc}) * conj(r_R e^{2ikc})
  return r_L * std::conj(r_R) * std::polar(1.0, -4.0 * k * kDimerCenter);
}

cplx gamma_factor(const ModelParams& params, const WavePoint& wp) noexcept {
  const cplx d = params.U - std::polar(1.0, -wp.k());
  return d * d + params.gamma * params.gamma - 1.0;
}

ScatteringMatrix s_matrix(const ModelParams& params, const WavePoint& wp, double pole_eps) {
  const cplx gam = gamma_factor(params, wp);
  if (std::abs(gam) <= pole_eps) throw_pole(params, wp.omega(), std::abs(gam));

  const double U = params.U;
  const double g = params.signed_gamma();
  const double sk = std::sin(wp.k());
  const double ck = std::cos(wp.k());
  const double base = -U * U - g * g + 2.0 * U * ck;

  ScatteringMatrix s;
  s.s11 = -2.0i * sk * std::polar(1.0, -wp.k()) / gam;
  s.s22 = s.s11;
  s.s12 = (base + 2.0 * g * sk) / gam;
  s.s21 = (base - 2.0 * g * sk) * std::polar(1.0, -2.0 * wp.k()) / gam;
  return s;
}

ScatterCoefficients scattering_coefficients(const ModelParams& params, const WavePoint& wp,
                                            double pole_eps) {
  const ScatteringMatrix s = s_matrix(params, wp, pole_eps);
  ScatterCoefficients c;
  c.t = s.t_left();
  c.r_L = s.r_left();
  c.r_R = s.r_right();
  c.T = std::norm(c.t);
  c.R_L = std::norm(c.r_L);
  c.R_R = std::norm(c.r_R);
  c.k = wp.k();
  return c;
}

double transmission_closed_form(const ModelParams& params, double omega, double band_eps,
                                double pole_eps) {
  // Validates the band; the momentum itself is not needed.
  (void)k_from_omega(omega, band_eps);
  const double U = params.U;
  const double g2 = params.gamma * params.gamma;
  const double num = 4.0 - omega * omega;
  const double a = U * U - U * omega + 1.0;
  const double den = a * a + (g2 - 1.0) * (2.0 * U * U - 2.0 * U * omega + omega * omega + g2 - 3.0);
  if (std::abs(den) <= pole_eps * num) throw_pole(params, omega, std::abs(den));
  return num / den;
}

Discriminant discriminant(const ModelParams& params, double omega) noexcept {
  const double detune = omega - params.U;
  const double strength = params.strength_sq();
  if (strength == 0.0) return {detune * detune, true};
  const double g2 = params.gamma * params.gamma;
  return {detune * detune + g2 * (strength - 4.0) / strength, false};
}

double g_factor(const ModelParams& params, double omega) noexcept {
  return -params.strength_sq() / (4.0 - omega * omega);
}

std::pair<cplx, cplx> order_eigenvalues(cplx a, cplx b) noexcept {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) <= kModulusTie * std::max(ma, mb)) {
    // arg() lies in [-pi, pi]; map -pi onto pi so the range is (-pi, pi].
    auto phase = [](cplx z) {
      const double p = std::arg(z);
      return p == -std::numbers::pi ? std::numbers::pi : p;
    };
    return phase(a) <= phase(b) ? std::pair{a, b} : std::pair{b, a};
  }
  return ma > mb ? std::pair{a, b} : std::pair{b, a};
}

std::pair<cplx, cplx> s_eigenvalues_closed(const ModelParams& params, const WavePoint& wp,
                                           double pole_eps) {
  const ScatteringMatrix s = s_matrix(params, wp, pole_eps);
  const cplx t = s.t_left();
  const double gd = g_factor(params, wp.omega()) * discriminant(params, wp.omega()).value;
  const cplx root = std::sqrt(cplx(gd, 0.0));
  return order_eigenvalues(t * (1.0 + root), t * (1.0 - root));
}

std::pair<cplx, cplx> s_eigenvalues_direct(const ScatteringMatrix& s) noexcept {
  const cplx tr = s.trace();
  const cplx det = s.det();
  const cplx root = std::sqrt(tr * tr - 4.0 * det);
  // Pick the sign that avoids cancellation in tr +- root.
  const cplx q = (std::real(std::conj(tr) * root) >= 0.0 ? tr + root : tr - root) / 2.0;
  if (q == cplx(0.0, 0.0)) return {q, q};
  return order_eigenvalues(q, det / q);
}

PhaseReport classify_phase(const ModelParams& params, double omega, double tol_ep,
                           double band_eps, double pole_eps) {
  const WavePoint wp = k_from_omega(omega, band_eps);
  const ScatterCoefficients c = scattering_coefficients(params, wp, pole_eps);
  const auto [s1, s2] = s_eigenvalues_closed(params, wp, pole_eps);

  PhaseReport report;
  report.delta = discriminant(params, omega).value;
  report.T = c.T;
  report.s1 = s1;
  report.s2 = s2;
  if (params.gamma == 0.0 || report.delta > tol_ep) {
    // Hermitian chain: S is unitary, so Delta = 0 at omega = U is not a
    // symmetry-breaking point.
    report.classification = PtPhase::Exact;
  } else if (report.delta < -tol_ep) {
    report.classification = PtPhase::Broken;
  } else {
    report.classification = PtPhase::ExceptionalPoint;
  }
  return report;
}

std::optional<ExceptionalPoints> exceptional_points(const ModelParams& params) noexcept {
  const double strength = params.strength_sq();
  const double condition = strength - 4.0;
  if (condition >= 0.0) return std::nullopt;

  auto in_band = [](double w) { return w > -2.0 && w < 2.0; };
  ExceptionalPoints ep;
  if (params.gamma == 0.0) {
    ep.omega_minus = ep.omega_plus = params.U;
    ep.degenerate = true;
  } else {
    const double g2 = params.gamma * params.gamma;
    const double half_width = std::sqrt(-g2 * condition / strength);
    ep.omega_minus = params.U - half_width;
    ep.omega_plus = params.U + half_width;
    ep.degenerate = false;
  }
  ep.minus_in_band = in_band(ep.omega_minus);
  ep.plus_in_band = in_band(ep.omega_plus);
  return ep;
}

}  // namespace ptscatter
