// ptscatter: scattering of a PT-symmetric dimer embedded in a tight-binding chain.
//
//   ptscatter sweep   --U 0.5 --gamma 0.5 [--omega-min --omega-max --steps --sigma-mode]
//   ptscatter heatmap --U 0.5 [--gamma-min --gamma-max --gamma-steps --omega-min ...]
//   ptscatter ep      --U 0.5 --gamma 0.5
//   ptscatter cpa     --U 0.5
//   ptscatter verify  [--samples 1000 --seed 42]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "ptscatter/commands.hpp"
#include "ptscatter/errors.hpp"

namespace {

using json = nlohmann::json;
namespace pc = ptscatter::cli;

constexpr int kExitUsage = 2;

// An option that can also be supplied by the JSON config file. Flags win.
struct Binding {
  CLI::Option* option;
  std::string key;
  std::function<void(const json&)> assign;
  bool from_config = false;

  bool provided() const { return option->count() > 0 || from_config; }
};

class Bindings {
 public:
  template <typename T>
  Binding& add(CLI::App* app, const std::string& flag, T& target, const std::string& help) {
    CLI::Option* opt = app->add_option("--" + flag, target, help);
    items_.push_back(std::make_unique<Binding>(
        Binding{opt, flag, [&target](const json& v) { target = v.get<T>(); }}));
    return *items_.back();
  }

  void apply(const json& config, const CLI::App* active) {
    for (auto& b : items_) {
      if (b->option->count() > 0) continue;
      if (!owned_by(b->option, active)) continue;
      std::string alt = b->key;
      std::replace(alt.begin(), alt.end(), '-', '_');
      const json* value = nullptr;
      if (config.contains(b->key)) {
        value = &config.at(b->key);
      } else if (config.contains(alt)) {
        value = &config.at(alt);
      }
      if (value == nullptr) continue;
      try {
        b->assign(*value);
      } catch (const json::exception&) {
        throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                               "invalid " + b->key + ": wrong type in config file");
      }
      b->from_config = true;
    }
  }

 private:
  static bool owned_by(const CLI::Option* opt, const CLI::App* app) {
    for (const CLI::Option* o : app->get_options()) {
      if (o == opt) return true;
    }
    return false;
  }

  std::vector<std::unique_ptr<Binding>> items_;
};

void require(const Binding& b) {
  if (!b.provided()) {
    throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                           "invalid " + b.key + ": required (flag or config file)");
  }
}

pc::ReportFormat report_format(const std::string& text) {
  if (text == "json") return pc::ReportFormat::Json;
  if (text == "csv") return pc::ReportFormat::Csv;
  throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                         "invalid format: expected csv or json, got '" + text + "'");
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                           "invalid config: cannot open '" + path + "'");
  }
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw json::type_error::create(302, "top level must be an object", &j);
    return j;
  } catch (const json::exception& e) {
    throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                           std::string("invalid config: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering, PT phase and CPA-laser analysis of a PT-symmetric lattice dimer"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "JSON file mirroring the command-line flags");

  Bindings bindings;
  pc::SweepConfig sweep_cfg;
  pc::HeatmapConfig heat_cfg;
  std::string sigma_mode = "cpa";
  double ep_U = 0.0;
  double ep_gamma = 0.0;
  double cpa_U = 0.0;
  ptscatter::VerifyOptions verify_opts;
  std::string out_path;
  std::string format;
  std::string fault = "none";

  auto* sweep = app.add_subcommand("sweep", "Frequency sweep at fixed U, gamma (CSV)");
  auto& sweep_u = bindings.add(sweep, "U", sweep_cfg.U, "real on-site potential");
  auto& sweep_gamma = bindings.add(sweep, "gamma", sweep_cfg.gamma, "gain/loss amplitude");
  bindings.add(sweep, "omega-min", sweep_cfg.omega_min, "lower end of the omega grid");
  bindings.add(sweep, "omega-max", sweep_cfg.omega_max, "upper end of the omega grid");
  bindings.add(sweep, "steps", sweep_cfg.steps, "number of omega grid points");
  bindings.add(sweep, "sigma-mode", sigma_mode, "cpa | fixed:<re>,<im>");
  bindings.add(sweep, "out", out_path, "output file (default stdout)");
  bindings.add(sweep, "format", format, "csv");

  auto* heatmap = app.add_subcommand("heatmap", "Eigenvalue moduli over (gamma, omega) (CSV)");
  auto& heat_u = bindings.add(heatmap, "U", heat_cfg.U, "real on-site potential");
  bindings.add(heatmap, "gamma-min", heat_cfg.gamma_min, "lower end of the gamma grid");
  bindings.add(heatmap, "gamma-max", heat_cfg.gamma_max, "upper end of the gamma grid");
  bindings.add(heatmap, "gamma-steps", heat_cfg.gamma_steps, "number of gamma grid points");
  bindings.add(heatmap, "omega-min", heat_cfg.omega_min, "lower end of the omega grid");
  bindings.add(heatmap, "omega-max", heat_cfg.omega_max, "upper end of the omega grid");
  bindings.add(heatmap, "steps", heat_cfg.omega_steps, "number of omega grid points");
  bindings.add(heatmap, "out", out_path, "output file (default stdout)");
  bindings.add(heatmap, "format", format, "csv");

  auto* ep = app.add_subcommand("ep", "Exceptional points for U, gamma");
  auto& ep_u = bindings.add(ep, "U", ep_U, "real on-site potential");
  auto& ep_g = bindings.add(ep, "gamma", ep_gamma, "gain/loss amplitude");
  bindings.add(ep, "format", format, "json | csv");
  bindings.add(ep, "out", out_path, "output file (default stdout)");

  auto* cpa = app.add_subcommand("cpa", "CPA-laser point for U");
  auto& cpa_u = bindings.add(cpa, "U", cpa_U, "real on-site potential");
  bindings.add(cpa, "format", format, "json | csv");
  bindings.add(cpa, "out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Closed forms versus lattice oracle");
  bindings.add(verify, "samples", verify_opts.samples, "number of random sample points");
  bindings.add(verify, "seed", verify_opts.seed, "RNG seed");
  bindings.add(verify, "format", format, "json | csv");
  bindings.add(verify, "out", out_path, "output file (default stdout)");
  verify->add_option("--inject-fault", fault, "none | negate-s12 (self-test of the suite)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) bindings.apply(load_config(config_path), active);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                               "invalid out: cannot write '" + out_path + "'");
      }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (active == sweep || active == heatmap) {
      if (!format.empty() && format != "csv") {
        throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                               "invalid format: bulk output is CSV only");
      }
    }

    if (active == sweep) {
      require(sweep_u);
      require(sweep_gamma);
      sweep_cfg.sigma_mode = pc::SigmaMode::parse(sigma_mode);
      pc::cmd_sweep(sweep_cfg, out);
    } else if (active == heatmap) {
      require(heat_u);
      pc::cmd_heatmap(heat_cfg, out);
    } else if (active == ep) {
      require(ep_u);
      require(ep_g);
      pc::cmd_ep(ep_U, ep_gamma, report_format(format.empty() ? "json" : format), out);
    } else if (active == cpa) {
      require(cpa_u);
      pc::cmd_cpa(cpa_U, report_format(format.empty() ? "json" : format), out);
    } else if (active == verify) {
      if (fault == "negate-s12") {
        verify_opts.fault = ptscatter::Fault::NegateS12;
      } else if (fault != "none") {
        throw ptscatter::Error(ptscatter::ErrorKind::InvalidConfig,
                               "invalid inject-fault: '" + fault + "'");
      }
      const int status =
          pc::cmd_verify(verify_opts, report_format(format.empty() ? "json" : format), out);
      if (status != 0) std::cerr << "verification FAILED\n";
      return status;
    }
  } catch (const ptscatter::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    // LaserPole and SingularSystem never escape the commands; everything else
    // that reaches here is bad input.
    return kExitUsage;
  }
  return 0;
}
