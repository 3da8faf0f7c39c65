#include "ptscatter/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "ptscatter/analytic_scattering.hpp"
#include "ptscatter/csv_format.hpp"
#include "ptscatter/numeric_oracle.hpp"
#include "ptscatter/transfer_matrix.hpp"

namespace ptscatter {

namespace {

constexpr double kSampleUMax = 1.9;
constexpr double kSampleGammaMax = 3.0;
constexpr double kSampleOmegaMax = 1.99;
constexpr double kMinGammaFactor = 1e-6;

struct Sample {
  double U;
  double gamma;
  double omega;
};

std::string describe(const Sample& s) {
  return "U=" + format_double(s.U) + ",gamma=" + format_double(s.gamma) +
         ",omega=" + format_double(s.omega);
}

// Accumulates the worst residual per named invariant, preserving insertion order.
class Tally {
 public:
  void declare(const std::string& name, double tolerance) {
    index_.emplace(name, results_.size());
    results_.push_back({name, 0.0, tolerance, ""});
  }

  void record(const std::string& name, double residual, const Sample& s) {
    InvariantResult& r = results_[index_.at(name)];
    // NaN must count as a failure.
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    if (r.worst_sample.empty() || residual > r.max_residual) {
      r.max_residual = residual;
      r.worst_sample = describe(s);
    }
  }

  std::vector<InvariantResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<InvariantResult> results_;
};

double pair_distance(std::pair<cplx, cplx> a, std::pair<cplx, cplx> b) {
  const double same = std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
  const double swapped = std::max(std::abs(a.first - b.second), std::abs(a.second - b.first));
  return std::min(same, swapped);
}

// Elementwise agreement measured relative to max(1, |reference|).
double scaled_diff(const ScatteringMatrix& a, const ScatteringMatrix& ref) {
  auto one = [](cplx x, cplx r) { return std::abs(x - r) / std::max(1.0, std::abs(r)); };
  return std::max({one(a.s11, ref.s11), one(a.s12, ref.s12), one(a.s21, ref.s21),
                   one(a.s22, ref.s22)});
}

int banded_sign(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

ScatteringMatrix closed_s(const ModelParams& p, const WavePoint& wp, Fault fault) {
  ScatteringMatrix s = s_matrix(p, wp);
  if (fault == Fault::NegateS12) s.s12 = -s.s12;
  return s;
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed(); });
}

const InvariantResult* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& r : invariants) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

VerificationReport run_verification(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> draw_u(-kSampleUMax, kSampleUMax);
  std::uniform_real_distribution<double> draw_gamma(0.0, kSampleGammaMax);
  std::uniform_real_distribution<double> draw_omega(-kSampleOmegaMax, kSampleOmegaMax);
  std::uniform_real_distribution<double> draw_unit(-1.0, 1.0);

  Tally tally;
  tally.declare("oracle_s_matrix", 1e-10);
  tally.declare("oracle_residual", 1e-10);
  tally.declare("transmission_closed_form", 1e-10);
  tally.declare("eigenvalues_closed_vs_direct", 1e-9);
  tally.declare("pseudo_unitarity_s", 1e-9);
  tally.declare("det_s_modulus", 1e-9);
  tally.declare("det_m", 1e-9);
  tally.declare("pseudo_unitarity_m", 1e-9);
  tally.declare("s_from_m_roundtrip", 1e-9);
  tally.declare("reflection_product", 1e-9);
  tally.declare("generalized_conservation", 1e-9);
  tally.declare("moduli_law", 1e-9);
  tally.declare("criterion_equivalence", 0.0);
  tally.declare("theta_equivalence", 1e-10);
  tally.declare("hermitian_flux", 1e-10);
  tally.declare("hermitian_resonance", 1e-10);
  tally.declare("hermitian_unimodular", 1e-9);

  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample smp{};
    ModelParams p;
    WavePoint wp = k_from_omega(0.0);
    do {
      smp = {draw_u(rng), draw_gamma(rng), draw_omega(rng)};
      p = validate_params(smp.U, smp.gamma);
      wp = k_from_omega(smp.omega);
    } while (std::abs(gamma_factor(p, wp)) < kMinGammaFactor);
    const cplx sigma(draw_unit(rng), draw_unit(rng));

    const ScatteringMatrix s = closed_s(p, wp, options.fault);
    const ScatteringMatrix s_oracle = oracle::oracle_s_matrix(oracle::two_site_chain(p), wp);
    tally.record("oracle_s_matrix", scaled_diff(s, s_oracle), smp);
    const auto chain = oracle::two_site_chain(p);
    tally.record("oracle_residual",
                 std::max(oracle::oracle_scatter(chain, wp, oracle::Side::Left).max_residual,
                          oracle::oracle_scatter(chain, wp, oracle::Side::Right).max_residual),
                 smp);

    const double T = std::norm(s.t_left());
    const double R_L = std::norm(s.r_left());
    const double R_R = std::norm(s.r_right());
    const double T_display = transmission_closed_form(p, smp.omega);
    tally.record("transmission_closed_form", std::abs(T_display - T) / std::max(1.0, T), smp);

    const auto closed = s_eigenvalues_closed(p, wp);
    const auto direct = s_eigenvalues_direct(s);
    const double eig_scale = std::max({1.0, std::abs(direct.first), std::abs(direct.second)});
    tally.record("eigenvalues_closed_vs_direct", pair_distance(closed, direct) / eig_scale, smp);

    const ScatteringMatrix centered = recenter(s, wp.k(), kDimerCenter);
    const double s_scale = std::max({1.0, std::abs(s.s11), std::abs(s.s12), std::abs(s.s21)});
    tally.record("pseudo_unitarity_s", pseudo_unitarity_defect(centered) / s_scale, smp);
    tally.record("det_s_modulus", std::abs(std::abs(s.det()) - 1.0), smp);

    const TransferMatrix m = m_matrix(p, wp);
    const double m_scale = std::max({1.0, std::abs(m.m11), std::abs(m.m12), std::abs(m.m21)});
    tally.record("det_m", std::abs(m.det() - 1.0) / (m_scale * m_scale), smp);
    tally.record("pseudo_unitarity_m",
                 pseudo_unitarity_defect(recenter(m, wp.k(), kDimerCenter)) / m_scale, smp);
    tally.record("s_from_m_roundtrip", scaled_diff(s_from_m(m), s), smp);

    const cplx product = s.r_left() * std::conj(s.r_right()) * std::polar(1.0, -2.0 * wp.k());
    tally.record("reflection_product", std::abs(product - (1.0 - T)) / std::max(1.0, T), smp);
    tally.record("generalized_conservation",
                 std::abs(std::sqrt(R_L * R_R) - std::abs(T - 1.0)) / std::max(1.0, T), smp);

    const double delta = discriminant(p, smp.omega).value;
    const double mod1 = std::abs(closed.first);
    const double mod2 = std::abs(closed.second);
    if (delta > kDefaultEpTolerance) {
      tally.record("moduli_law", std::max(std::abs(mod1 - 1.0), std::abs(mod2 - 1.0)), smp);
    } else if (delta < -kDefaultEpTolerance) {
      const double law = std::abs(mod1 * mod2 - 1.0);
      tally.record("moduli_law", std::max(mod1, mod2) > 1.0 ? law : 1.0, smp);
    }

    const int sign_delta = banded_sign(delta, kDefaultEpTolerance);
    const int sign_t = banded_sign(1.0 - T, kDefaultEpTolerance);
    tally.record("criterion_equivalence",
                 (sign_delta != 0 && sign_t != 0 && sign_delta != sign_t) ? 1.0 : 0.0, smp);

    const double theta = output_coefficient_theta(p, wp, sigma);
    const double theta_ports = output_ratio(scatter_outputs(s, sigma, 1.0));
    tally.record("theta_equivalence", std::abs(theta - theta_ports) / std::max(1.0, theta), smp);
  }

  for (std::size_t i = 0; i < options.hermitian_samples; ++i) {
    const Sample smp{draw_u(rng), 0.0, draw_omega(rng)};
    const ModelParams p = validate_params(smp.U, 0.0);
    const WavePoint wp = k_from_omega(smp.omega);
    const ScatteringMatrix s = closed_s(p, wp, options.fault);
    tally.record("hermitian_flux", std::abs(std::norm(s.r_left()) + std::norm(s.t_left()) - 1.0),
                 smp);
    const auto [s1, s2] = s_eigenvalues_direct(s);
    tally.record("hermitian_unimodular",
                 std::max(std::abs(std::abs(s1) - 1.0), std::abs(std::abs(s2) - 1.0)), smp);

    const Sample res{smp.U, 0.0, smp.U};
    const WavePoint at_u = k_from_omega(smp.U);
    tally.record("hermitian_resonance", std::abs(std::norm(closed_s(p, at_u, options.fault).t_left()) - 1.0),
                 res);
  }

  VerificationReport report;
  report.samples = options.samples;
  report.hermitian_samples = options.hermitian_samples;
  report.seed = options.seed;
  report.invariants = tally.take();
  return report;
}

}  // namespace ptscatter
