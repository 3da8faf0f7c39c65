#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "ptscatter/commands.hpp"
#include "ptscatter/csv_format.hpp"
#include "ptscatter/errors.hpp"

using namespace ptscatter;
using namespace ptscatter::cli;
using json = nlohmann::json;

namespace {

std::string config_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidConfig) return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(format_double(NAN) == "nan");
  for (double v : {1.0 / 3.0, 2.0 / 7.0, 1e-300, 6.02214076e23, -0.8228756555322954}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
    CHECK(s.size() <= 24);
  }
}

TEST_CASE("sigma mode parsing") {
  CHECK(SigmaMode::parse("cpa").kind == SigmaMode::Kind::CpaScan);
  const SigmaMode f = SigmaMode::parse("fixed:0.5,-1.25");
  CHECK(f.kind == SigmaMode::Kind::Fixed);
  CHECK(f.fixed == std::complex<double>(0.5, -1.25));
  for (const char* bad : {"fixed", "fixed:1", "fixed:a,b", "fixed:1,2x", "laser", ""}) {
    CHECK(config_error([&] { SigmaMode::parse(bad); }).find("sigma-mode") != std::string::npos);
  }
}

TEST_CASE("invalid sweep configs name the field") {
  SweepConfig c;
  c.steps = 1;
  CHECK(config_error([&] { validate(c); }).find("steps") != std::string::npos);
  c = {};
  c.omega_max = 2.0;
  CHECK(config_error([&] { validate(c); }).find("omega-max") != std::string::npos);
  c = {};
  c.omega_min = 1.0;
  c.omega_max = 0.0;
  CHECK(config_error([&] { validate(c); }).find("omega-max") != std::string::npos);
  c = {};
  c.U = NAN;
  CHECK(config_error([&] { validate(c); }).find("U") != std::string::npos);
}

TEST_CASE("invalid heatmap configs name the field") {
  HeatmapConfig c;
  c.gamma_min = -0.1;
  CHECK(config_error([&] { validate(c); }).find("gamma-min") != std::string::npos);
  c = {};
  c.gamma_steps = 0;
  CHECK(config_error([&] { validate(c); }).find("gamma-steps") != std::string::npos);
  c = {};
  c.omega_min = -2.5;
  CHECK(config_error([&] { validate(c); }).find("omega-min") != std::string::npos);
}

TEST_CASE("linear grid is inclusive and ascending") {
  const auto g = linear_grid(-1.99, 1.99, 4000);
  REQUIRE(g.size() == 4000);
  CHECK(g.front() == -1.99);
  CHECK(g.back() == 1.99);
  for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g[i] > g[i - 1]);
  CHECK(linear_grid(0.3, 0.3, 1) == std::vector<double>{0.3});
}

TEST_CASE("sweep columns and pole rows") {
  SweepConfig c;
  c.U = 0.5;
  c.gamma = std::sqrt(1.75);
  // 1.0 is on this grid exactly; k = acos(0.5) lands on the pole
  c.omega_min = 0.0;
  c.omega_max = 1.5;
  c.steps = 4;
  std::ostringstream out;
  cmd_sweep(c, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "omega,k,T,R_L,R_R,abs_s1_sq,abs_s2_sq,log10_abs_s1_sq,log10_abs_s2_sq,delta,phase,theta,"
        "flags");
  const auto rows = evaluate_sweep(c);
  REQUIRE(rows.size() == 4);
  bool saw_pole = false;
  for (const auto& r : rows) {
    if (r.flags.find("pole") != std::string::npos) {
      saw_pole = true;
      CHECK(r.omega == doctest::Approx(1.0));
      CHECK(std::isinf(r.T));
      CHECK(r.theta == 0.0);
      CHECK(r.flags == "pole;theta_limit");
    } else {
      CHECK(std::isfinite(r.T));
      CHECK(r.flags.empty());
    }
  }
  CHECK(saw_pole);
  CHECK(out.str().find(",inf,") != std::string::npos);

  c.sigma_mode = SigmaMode::parse("fixed:1,0");
  for (const auto& r : evaluate_sweep(c)) {
    if (r.flags == "pole") CHECK(std::isinf(r.theta));
  }
}

TEST_CASE("sweep marks the EP grid point") {
  SweepConfig c;
  c.U = 0.5;
  c.gamma = 0.5;
  c.steps = 4000;
  int eps = 0;
  for (const auto& r : evaluate_sweep(c)) {
    if (r.phase == "ep") {
      ++eps;
      const double w = r.omega;
      const double distance = std::min(std::abs(w - (0.5 + std::sqrt(1.75))),
                                       std::abs(w - (0.5 - std::sqrt(1.75))));
      CHECK(distance <= 3.98 / 3999);
    }
  }
  CHECK(eps >= 2);
  CHECK(eps <= 4);
}

TEST_CASE("single-cell heatmap of the free chain") {
  HeatmapConfig c;
  c.U = 0.0;
  c.gamma_min = c.gamma_max = 0.0;
  c.omega_min = c.omega_max = 0.0;
  c.gamma_steps = c.omega_steps = 1;
  const auto rows = evaluate_heatmap(c);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].log10_abs_s1_sq) < 1e-15);
  CHECK(std::abs(rows[0].log10_abs_s2_sq) < 1e-15);
}

TEST_CASE("heatmap away from the pole is finite and ordered row-major") {
  HeatmapConfig c;
  c.U = 0.5;
  c.gamma_min = 0.0;
  c.gamma_max = 1.0;
  c.gamma_steps = 11;
  c.omega_steps = 21;
  const auto rows = evaluate_heatmap(c);
  REQUIRE(rows.size() == 231);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(std::isfinite(rows[i].log10_abs_s1_sq));
    REQUIRE(rows[i].flags.empty());
    if (i % 21 != 0) REQUIRE(rows[i].omega > rows[i - 1].omega);
    if (i % 21 != 0) REQUIRE(rows[i].gamma == rows[i - 1].gamma);
  }
}

TEST_CASE("heatmap flags cells next to the CPA point") {
  HeatmapConfig c;
  c.U = 0.5;
  c.gamma_steps = 41;
  c.omega_steps = 41;
  int flagged = 0;
  for (const auto& r : evaluate_heatmap(c)) {
    if (!r.flags.empty()) {
      ++flagged;
      CHECK(std::abs(r.gamma - std::sqrt(1.75)) <= 0.05 + 1e-12);
      CHECK(std::abs(r.omega - 1.0) <= 0.095 + 1e-12);
    }
  }
  CHECK(flagged >= 1);
  CHECK(flagged <= 4);
}

TEST_CASE("ep report") {
  std::ostringstream out;
  cmd_ep(0.5, 0.5, ReportFormat::Json, out);
  const json j = json::parse(out.str());
  CHECK(j["exceptional_points"]["omega_minus"].get<double>() ==
        doctest::Approx(-0.822876).epsilon(1e-6));
  CHECK(j["exceptional_points"]["omega_plus"].get<double>() ==
        doctest::Approx(1.822876).epsilon(1e-6));
  CHECK(j["condition"].get<double>() == doctest::Approx(-3.5));
  REQUIRE(j["phase_map"].size() == 3);
  CHECK(j["phase_map"][1]["phase"] == "broken");

  std::ostringstream none;
  cmd_ep(0.5, 1.95, ReportFormat::Json, none);
  CHECK(json::parse(none.str())["exceptional_points"].is_null());

  std::ostringstream boundary;
  cmd_ep(0.0, 2.0, ReportFormat::Csv, boundary);
  CHECK(boundary.str() == "U,gamma,condition,omega_minus,omega_plus,degenerate\n0,2,0,none,none,false\n");
}

TEST_CASE("cpa report") {
  std::ostringstream a;
  cmd_cpa(0.5, ReportFormat::Json, a);
  const json j = json::parse(a.str());
  CHECK(j["exists"] == true);
  CHECK(j["omega0"].get<double>() == 1.0);
  CHECK(j["gamma_cpa"].get<double>() == doctest::Approx(std::sqrt(1.75)));

  std::ostringstream b;
  cmd_cpa(1.0, ReportFormat::Json, b);
  const json k = json::parse(b.str());
  CHECK(k["exists"] == false);
  CHECK(k["message"] == "no CPA-laser for this U");
  CHECK(k["bound"] == "|U| < 1");
}

TEST_CASE("verify passes and catches an injected fault") {
  VerifyOptions opts;
  opts.samples = 300;
  opts.seed = 9;
  std::ostringstream ok;
  CHECK(cmd_verify(opts, ReportFormat::Json, ok) == 0);

  opts.fault = Fault::NegateS12;
  std::ostringstream bad;
  CHECK(cmd_verify(opts, ReportFormat::Json, bad) == 1);
  const json j = json::parse(bad.str());
  bool names_pseudo_unitarity = false;
  for (const auto& f : j["failures"]) names_pseudo_unitarity |= f == "pseudo_unitarity_s";
  CHECK(names_pseudo_unitarity);
}

TEST_CASE("verify outcome does not depend on the seed") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    VerifyOptions opts;
    opts.samples = 200;
    opts.seed = seed;
    CHECK(run_verification(opts).passed());
  }
}
