#include "ptscatter/commands.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "ptscatter/analytic_scattering.hpp"
#include "ptscatter/core_model.hpp"
#include "ptscatter/csv_format.hpp"
#include "ptscatter/errors.hpp"
#include "ptscatter/transfer_matrix.hpp"

namespace ptscatter::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidConfig, "invalid " + field + ": " + why);
}

void require_finite(const std::string& field, double value) {
  if (!std::isfinite(value)) reject(field, "must be finite");
}

void validate_omega_range(double lo, double hi, long steps, bool allow_single) {
  require_finite("omega-min", lo);
  require_finite("omega-max", hi);
  const double edge = 2.0 - kDefaultBandEpsilon;
  if (!(std::abs(lo) < edge)) reject("omega-min", "must lie strictly inside (-2, 2)");
  if (!(std::abs(hi) < edge)) reject("omega-max", "must lie strictly inside (-2, 2)");
  if (allow_single && steps == 1) {
    if (lo != hi) reject("omega-max", "must equal omega-min for a single-point grid");
  } else if (!(lo < hi)) {
    reject("omega-max", "must exceed omega-min");
  }
}

double log10_sq(double modulus) { return std::log10(modulus * modulus); }

SweepRow pole_row(double omega, double k, double delta, const std::string& phase,
                  SigmaMode::Kind sigma) {
  SweepRow row{};
  row.omega = omega;
  row.k = k;
  row.T = row.R_L = row.R_R = kInf;
  row.abs_s1_sq = row.log10_abs_s1_sq = kInf;
  row.abs_s2_sq = 0.0;
  row.log10_abs_s2_sq = -kInf;
  row.delta = delta;
  row.phase = phase;
  // With sigma = m21(k) the numerator and denominator of Theta vanish together;
  // the neighbourhood shows Theta -> 0.
  if (sigma == SigmaMode::Kind::CpaScan) {
    row.theta = 0.0;
    row.flags = "pole;theta_limit";
  } else {
    row.theta = kInf;
    row.flags = "pole";
  }
  return row;
}

std::string phase_from_delta(double delta, double tol, bool hermitian) {
  if (hermitian || delta > tol) return std::string(to_string(PtPhase::Exact));
  if (delta < -tol) return std::string(to_string(PtPhase::Broken));
  return std::string(to_string(PtPhase::ExceptionalPoint));
}

}  // namespace

SigmaMode SigmaMode::parse(const std::string& text) {
  SigmaMode mode;
  if (text == "cpa") return mode;
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string body = text.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used_re = 0;
        std::size_t used_im = 0;
        const std::string re_text = body.substr(0, comma);
        const std::string im_text = body.substr(comma + 1);
        const double re = std::stod(re_text, &used_re);
        const double im = std::stod(im_text, &used_im);
        if (used_re == re_text.size() && used_im == im_text.size() && std::isfinite(re) &&
            std::isfinite(im)) {
          mode.kind = Kind::Fixed;
          mode.fixed = {re, im};
          return mode;
        }
      } catch (const std::exception&) {
        // fall through to the error below
      }
    }
  }
  reject("sigma-mode", "expected 'cpa' or 'fixed:<re>,<im>', got '" + text + "'");
}

void validate(const SweepConfig& c) {
  require_finite("U", c.U);
  require_finite("gamma", c.gamma);
  if (c.steps < 2) reject("steps", "must be at least 2");
  validate_omega_range(c.omega_min, c.omega_max, c.steps, false);
}

void validate(const HeatmapConfig& c) {
  require_finite("U", c.U);
  require_finite("gamma-min", c.gamma_min);
  require_finite("gamma-max", c.gamma_max);
  if (c.gamma_steps < 1) reject("gamma-steps", "must be positive");
  if (c.omega_steps < 1) reject("steps", "must be positive");
  if (c.gamma_min < 0.0) reject("gamma-min", "must be non-negative");
  if (c.gamma_steps == 1) {
    if (c.gamma_min != c.gamma_max) reject("gamma-max", "must equal gamma-min for a single row");
  } else if (!(c.gamma_min < c.gamma_max)) {
    reject("gamma-max", "must exceed gamma-min");
  }
  validate_omega_range(c.omega_min, c.omega_max, c.omega_steps, true);
}

std::vector<double> linear_grid(double lo, double hi, long steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid[0] = lo;
    return grid;
  }
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (long i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

std::vector<SweepRow> evaluate_sweep(const SweepConfig& config) {
  validate(config);
  const ModelParams p = validate_params(config.U, config.gamma);
  const std::vector<double> grid = linear_grid(config.omega_min, config.omega_max, config.steps);
  const double h = (config.omega_max - config.omega_min) / static_cast<double>(config.steps - 1);
  const bool hermitian = p.gamma == 0.0;

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double omega : grid) {
    const WavePoint wp = k_from_omega(omega);
    const double delta = discriminant(p, omega).value;
    // Delta crosses zero with slope 2 (omega - U); band the EP to half a grid step.
    const double tol = std::max(kDefaultEpTolerance, std::abs(omega - p.U) * h);
    const std::string phase = phase_from_delta(delta, tol, hermitian);
    try {
      const ScatterCoefficients c = scattering_coefficients(p, wp);
      const auto [s1, s2] = s_eigenvalues_closed(p, wp);
      const double theta = config.sigma_mode.kind == SigmaMode::Kind::CpaScan
                               ? output_coefficient_theta_cpa_scan(p, wp)
                               : output_coefficient_theta(p, wp, config.sigma_mode.fixed);
      SweepRow row{};
      row.omega = omega;
      row.k = wp.k();
      row.T = c.T;
      row.R_L = c.R_L;
      row.R_R = c.R_R;
      row.abs_s1_sq = std::norm(s1);
      row.abs_s2_sq = std::norm(s2);
      row.log10_abs_s1_sq = std::log10(row.abs_s1_sq);
      row.log10_abs_s2_sq = std::log10(row.abs_s2_sq);
      row.delta = delta;
      row.phase = phase;
      row.theta = theta;
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LaserPole) throw;
      rows.push_back(pole_row(omega, wp.k(), delta, phase, config.sigma_mode.kind));
    }
  }
  return rows;
}

std::vector<HeatmapRow> evaluate_heatmap(const HeatmapConfig& config) {
  validate(config);
  const auto gammas = linear_grid(config.gamma_min, config.gamma_max, config.gamma_steps);
  const auto omegas = linear_grid(config.omega_min, config.omega_max, config.omega_steps);
  const double dg = config.gamma_steps > 1
                        ? (config.gamma_max - config.gamma_min) / (config.gamma_steps - 1.0)
                        : 0.0;
  const double dw = config.omega_steps > 1
                        ? (config.omega_max - config.omega_min) / (config.omega_steps - 1.0)
                        : 0.0;
  const auto cpa = cpa_laser_point(config.U);

  std::vector<HeatmapRow> rows;
  rows.reserve(gammas.size() * omegas.size());
  for (const double gamma : gammas) {
    const ModelParams p = validate_params(config.U, gamma);
    for (const double omega : omegas) {
      const WavePoint wp = k_from_omega(omega);
      HeatmapRow row{gamma, omega, 0.0, 0.0, ""};
      if (cpa && std::abs(gamma - cpa->gamma_cpa) <= dg && std::abs(omega - cpa->omega0) <= dw) {
        row.flags = "near_pole";
      }
      try {
        const auto [s1, s2] = s_eigenvalues_closed(p, wp);
        row.log10_abs_s1_sq = log10_sq(std::abs(s1));
        row.log10_abs_s2_sq = log10_sq(std::abs(s2));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::LaserPole) throw;
        row.log10_abs_s1_sq = kInf;
        row.log10_abs_s2_sq = -kInf;
        row.flags = "pole";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "omega,k,T,R_L,R_R,abs_s1_sq,abs_s2_sq,log10_abs_s1_sq,log10_abs_s2_sq,delta,phase,"
         "theta,flags\n";
  for (const auto& r : rows) {
    out << format_double(r.omega) << ',' << format_double(r.k) << ',' << format_double(r.T) << ','
        << format_double(r.R_L) << ',' << format_double(r.R_R) << ','
        << format_double(r.abs_s1_sq) << ',' << format_double(r.abs_s2_sq) << ','
        << format_double(r.log10_abs_s1_sq) << ',' << format_double(r.log10_abs_s2_sq) << ','
        << format_double(r.delta) << ',' << r.phase << ',' << format_double(r.theta) << ','
        << r.flags << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, const std::vector<HeatmapRow>& rows) {
  out << "gamma,omega,log10_abs_s1_sq,log10_abs_s2_sq,flags\n";
  for (const auto& r : rows) {
    out << format_double(r.gamma) << ',' << format_double(r.omega) << ','
        << format_double(r.log10_abs_s1_sq) << ',' << format_double(r.log10_abs_s2_sq) << ','
        << r.flags << '\n';
  }
}

void cmd_sweep(const SweepConfig& config, std::ostream& out) {
  write_sweep_csv(out, evaluate_sweep(config));
}

void cmd_heatmap(const HeatmapConfig& config, std::ostream& out) {
  write_heatmap_csv(out, evaluate_heatmap(config));
}

void cmd_ep(double U, double gamma, ReportFormat format, std::ostream& out) {
  const ModelParams p = validate_params(U, gamma);
  const double condition = p.strength_sq() - 4.0;
  const auto eps = exceptional_points(p);

  json report;
  report["U"] = p.U;
  report["gamma"] = p.gamma;
  report["mirrored"] = p.mirrored;
  report["condition"] = condition;

  // Band intervals and the phase on each; EPs outside the band are clipped.
  json phase_map = json::array();
  auto interval = [&](double from, double to, PtPhase phase) {
    from = std::clamp(from, -2.0, 2.0);
    to = std::clamp(to, -2.0, 2.0);
    if (to > from) {
      phase_map.push_back({{"from", from}, {"to", to}, {"phase", std::string(to_string(phase))}});
    }
  };
  if (eps && !eps->degenerate) {
    report["exceptional_points"] = {{"omega_minus", eps->omega_minus},
                                    {"omega_plus", eps->omega_plus},
                                    {"minus_in_band", eps->minus_in_band},
                                    {"plus_in_band", eps->plus_in_band},
                                    {"degenerate", false}};
    interval(-2.0, eps->omega_minus, PtPhase::Exact);
    interval(eps->omega_minus, eps->omega_plus, PtPhase::Broken);
    interval(eps->omega_plus, 2.0, PtPhase::Exact);
  } else if (eps) {
    report["exceptional_points"] = {{"omega_minus", eps->omega_minus},
                                    {"omega_plus", eps->omega_plus},
                                    {"minus_in_band", eps->minus_in_band},
                                    {"plus_in_band", eps->plus_in_band},
                                    {"degenerate", true}};
    interval(-2.0, 2.0, PtPhase::Exact);
  } else {
    report["exceptional_points"] = nullptr;
    interval(-2.0, 2.0, PtPhase::Exact);
  }
  report["phase_map"] = phase_map;

  if (format == ReportFormat::Json) {
    out << report.dump(2) << '\n';
    return;
  }
  out << "U,gamma,condition,omega_minus,omega_plus,degenerate\n";
  out << format_double(p.U) << ',' << format_double(p.gamma) << ',' << format_double(condition)
      << ',';
  if (eps) {
    out << format_double(eps->omega_minus) << ',' << format_double(eps->omega_plus) << ','
        << (eps->degenerate ? "true" : "false") << '\n';
  } else {
    out << "none,none,false\n";
  }
}

void cmd_cpa(double U, ReportFormat format, std::ostream& out) {
  if (!std::isfinite(U)) throw Error(ErrorKind::NonFinite, "U must be finite");
  const auto point = cpa_laser_point(U);
  if (format == ReportFormat::Json) {
    json report;
    report["U"] = U;
    report["bound"] = "|U| < 1";
    report["exists"] = point.has_value();
    if (point) {
      report["omega0"] = point->omega0;
      report["k0"] = point->k0;
      report["gamma_cpa"] = point->gamma_cpa;
    } else {
      report["message"] = "no CPA-laser for this U";
    }
    out << report.dump(2) << '\n';
    return;
  }
  out << "U,exists,omega0,k0,gamma_cpa\n" << format_double(U) << ',';
  if (point) {
    out << "true," << format_double(point->omega0) << ',' << format_double(point->k0) << ','
        << format_double(point->gamma_cpa) << '\n';
  } else {
    out << "false,none,none,none\n";
  }
}

int cmd_verify(const VerifyOptions& options, ReportFormat format, std::ostream& out) {
  const VerificationReport report = run_verification(options);
  if (format == ReportFormat::Json) {
    json j;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["hermitian_samples"] = report.hermitian_samples;
    j["passed"] = report.passed();
    json items = json::array();
    json failures = json::array();
    for (const auto& inv : report.invariants) {
      items.push_back({{"name", inv.name},
                       {"max_residual", format_double(inv.max_residual)},
                       {"tolerance", inv.tolerance},
                       {"passed", inv.passed()},
                       {"worst_sample", inv.worst_sample}});
      if (!inv.passed()) failures.push_back(inv.name);
    }
    j["invariants"] = items;
    j["failures"] = failures;
    out << j.dump(2) << '\n';
  } else {
    out << "invariant,max_residual,tolerance,passed,worst_sample\n";
    for (const auto& inv : report.invariants) {
      out << inv.name << ',' << format_double(inv.max_residual) << ','
          << format_double(inv.tolerance) << ',' << (inv.passed() ? "true" : "false") << ",\""
          << inv.worst_sample << "\"\n";
    }
  }
  return report.passed() ? 0 : 1;
}

}  // namespace ptscatter::cli
