#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptscatter/verification.hpp"

namespace ptscatter::cli {

/// How the two-sided input ratio sigma = F_b^+ / F_f^- is chosen per grid point.
struct SigmaMode {
  enum class Kind { CpaScan, Fixed };
  Kind kind = Kind::CpaScan;
  std::complex<double> fixed{0.0, 0.0};

  /// Parses "cpa" or "fixed:<re>,<im>". Throws Error{InvalidConfig}.
  static SigmaMode parse(const std::string& text);
};

struct SweepConfig {
  double U = 0.0;
  double gamma = 0.0;
  double omega_min = -1.99;
  double omega_max = 1.99;
  long steps = 4000;
  SigmaMode sigma_mode;
};

struct HeatmapConfig {
  double U = 0.0;
  double gamma_min = 0.0;
  double gamma_max = 2.0;
  double omega_min = -1.9;
  double omega_max = 1.9;
  long gamma_steps = 400;
  long omega_steps = 400;
};

struct SweepRow {
  double omega;
  double k;
  double T;
  double R_L;
  double R_R;
  double abs_s1_sq;
  double abs_s2_sq;
  double log10_abs_s1_sq;
  double log10_abs_s2_sq;
  double delta;
  std::string phase;
  double theta;
  std::string flags;
};

struct HeatmapRow {
  double gamma;
  double omega;
  double log10_abs_s1_sq;
  double log10_abs_s2_sq;
  std::string flags;
};

/// Both throw Error{InvalidConfig} with the offending field named in the message.
void validate(const SweepConfig& config);
void validate(const HeatmapConfig& config);

/// Inclusive grid of `steps` points; a single point when steps == 1.
std::vector<double> linear_grid(double lo, double hi, long steps);

std::vector<SweepRow> evaluate_sweep(const SweepConfig& config);
std::vector<HeatmapRow> evaluate_heatmap(const HeatmapConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_heatmap_csv(std::ostream& out, const std::vector<HeatmapRow>& rows);

/// Validates, evaluates and writes in one go.
void cmd_sweep(const SweepConfig& config, std::ostream& out);
void cmd_heatmap(const HeatmapConfig& config, std::ostream& out);

enum class ReportFormat { Json, Csv };

void cmd_ep(double U, double gamma, ReportFormat format, std::ostream& out);
void cmd_cpa(double U, ReportFormat format, std::ostream& out);

/// Returns 0 when every invariant passes, 1 otherwise.
int cmd_verify(const VerifyOptions& options, ReportFormat format, std::ostream& out);

}  // namespace ptscatter::cli
