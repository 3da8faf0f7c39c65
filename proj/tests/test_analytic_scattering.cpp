#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ptscatter/analytic_scattering.hpp"
#include "ptscatter/errors.hpp"

using namespace ptscatter;
using namespace std::complex_literals;

namespace {

const double kGammaCpa = std::sqrt(1.75);  // sqrt(2 - 0.5^2)

bool throws_pole(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::LaserPole;
  }
  return false;
}

double pair_distance(std::pair<cplx, cplx> a, std::pair<cplx, cplx> b) {
  const double same = std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
  const double swapped = std::max(std::abs(a.first - b.second), std::abs(a.second - b.first));
  return std::min(same, swapped);
}

}  // namespace

TEST_CASE("gamma_factor by direct evaluation") {
  // (U - e^{-ik})^2 + gamma^2 - 1 with e^{-i pi/2} = -i
  const cplx g1 = gamma_factor(validate_params(0.5, 0.5), omega_from_k(std::numbers::pi / 2));
  CHECK(std::abs(g1 - cplx(-1.5, 1.0)) < 1e-15);

  const cplx g2 = gamma_factor(validate_params(0.0, 0.0), omega_from_k(std::numbers::pi / 2));
  CHECK(std::abs(g2 - cplx(-2.0, 0.0)) < 1e-15);

  const cplx g3 =
      gamma_factor(validate_params(0.5, kGammaCpa), omega_from_k(std::numbers::pi / 3));
  CHECK(std::abs(g3) < 1e-15);
}

TEST_CASE("s_matrix of the free chain is pure transmission") {
  const ModelParams free = validate_params(0.0, 0.0);
  for (double k : {0.1, 0.7, std::numbers::pi / 2, 2.5, 3.0}) {
    const WavePoint wp = omega_from_k(k);
    const ScatteringMatrix s = s_matrix(free, wp);
    CHECK(std::abs(s.s12) < 1e-15);
    CHECK(std::abs(s.s21) < 1e-15);
    CHECK(std::abs(std::abs(s.s11) - 1.0) < 1e-15);
    CHECK(s.s11 == s.s22);
  }
}

TEST_CASE("s_matrix raises LaserPole at the CPA-laser point") {
  const ModelParams p = validate_params(0.5, kGammaCpa);
  CHECK(throws_pole([&] { s_matrix(p, omega_from_k(std::numbers::pi / 3)); }));
  CHECK(throws_pole([&] { scattering_coefficients(p, omega_from_k(std::numbers::pi / 3)); }));
  CHECK(throws_pole([&] { transmission_closed_form(p, 1.0); }));
  CHECK(throws_pole([&] { s_eigenvalues_closed(p, k_from_omega(1.0)); }));
  CHECK_NOTHROW(s_matrix(p, k_from_omega(1.0 + 1e-6)));
}

TEST_CASE("transmission values") {
  // gamma = 0 resonance: perfect transmission at omega = U
  const ModelParams herm = validate_params(0.5, 0.0);
  CHECK(transmission_closed_form(herm, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(scattering_coefficients(herm, k_from_omega(0.5)).T ==
        doctest::Approx(1.0).epsilon(1e-14));

  // (4 - 0) / ((0.25 + 1)^2 + (0.25 - 1)(0.5 + 0.25 - 3)) = 4 / 3.25
  const ModelParams p = validate_params(0.5, 0.5);
  CHECK(transmission_closed_form(p, 0.0) == doctest::Approx(4.0 / 3.25).epsilon(1e-14));
  CHECK(scattering_coefficients(p, k_from_omega(0.0)).T ==
        doctest::Approx(4.0 / 3.25).epsilon(1e-14));

  const ModelParams b = validate_params(0.5, 1.95);
  for (int i = 0; i <= 2000; ++i) {
    const double omega = -1.999 + 3.998 * i / 2000.0;
    REQUIRE(transmission_closed_form(b, omega) < 1.0);
  }
}

TEST_CASE("Hermitian chains conserve flux") {
  for (double U : {-1.5, -0.3, 0.0, 0.5, 1.7}) {
    const ModelParams p = validate_params(U, 0.0);
    for (double omega : {-1.9, -0.8, 0.0, 0.4, 1.3, 1.95}) {
      const auto c = scattering_coefficients(p, k_from_omega(omega));
      CHECK(c.R_L + c.T == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(c.R_R + c.T == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("coefficient identities at a broken-phase point") {
  const auto c = scattering_coefficients(validate_params(0.5, 0.5), k_from_omega(0.0));
  CHECK(c.T > 1.0);
  CHECK(std::abs(c.reflection_product() - (1.0 - c.T)) < 1e-12);
  CHECK(std::sqrt(c.R_L * c.R_R) == doctest::Approx(std::abs(c.T - 1.0)).epsilon(1e-12));
}

TEST_CASE("discriminant") {
  const ModelParams p = validate_params(0.5, 0.5);
  // 0 + 0.25 (0.5 - 4) / 0.5
  CHECK(discriminant(p, 0.5).value == doctest::Approx(-1.75).epsilon(1e-15));
  CHECK(std::abs(discriminant(p, 0.5 + std::sqrt(1.75)).value) < 1e-14);
  CHECK(std::abs(discriminant(p, 0.5 - std::sqrt(1.75)).value) < 1e-14);
  CHECK_FALSE(discriminant(p, 0.5).degenerate);

  const ModelParams herm = validate_params(0.8, 0.0);
  for (double omega : {-1.0, 0.0, 0.8, 1.5}) {
    CHECK(discriminant(herm, omega).value == doctest::Approx((omega - 0.8) * (omega - 0.8)));
  }

  const Discriminant d = discriminant(validate_params(0.0, 0.0), 0.3);
  CHECK(d.degenerate);
  CHECK(d.value == doctest::Approx(0.09));
}

TEST_CASE("eigenvalue closed form against the quadratic") {
  SUBCASE("exact phase: unimodular") {
    const ModelParams p = validate_params(0.5, 1.95);
    for (double omega : {-1.9, -1.0, 0.0, 0.5, 1.0, 1.9}) {
      const auto [s1, s2] = s_eigenvalues_closed(p, k_from_omega(omega));
      CHECK(std::abs(std::abs(s1) - 1.0) < 1e-10);
      CHECK(std::abs(std::abs(s2) - 1.0) < 1e-10);
    }
  }
  SUBCASE("broken phase: reciprocal moduli") {
    const ModelParams p = validate_params(0.5, 0.5);
    const WavePoint wp = k_from_omega(0.0);
    const auto closed = s_eigenvalues_closed(p, wp);
    CHECK(std::abs(closed.first) * std::abs(closed.second) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(closed.first) > 1.0 + 1e-3);
    CHECK(pair_distance(closed, s_eigenvalues_direct(s_matrix(p, wp))) < 1e-9);
  }
  SUBCASE("Hermitian resonance") {
    const ModelParams p = validate_params(0.5, 0.0);
    const WavePoint wp = k_from_omega(0.5);
    const auto [s1, s2] = s_eigenvalues_closed(p, wp);
    CHECK(std::abs(std::abs(s1) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(s2) - 1.0) < 1e-12);
    CHECK(scattering_coefficients(p, wp).T == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("s_eigenvalues_direct on diagonal matrices") {
  const auto id = s_eigenvalues_direct({1.0, 0.0, 0.0, 1.0});
  CHECK(std::abs(id.first - 1.0) < 1e-15);
  CHECK(std::abs(id.second - 1.0) < 1e-15);
  const auto d = s_eigenvalues_direct({2.0, 0.0, 0.0, 0.5});
  CHECK(std::abs(d.first - 2.0) < 1e-15);
  CHECK(std::abs(d.second - 0.5) < 1e-15);
  const auto z = s_eigenvalues_direct({0.0, 0.0, 0.0, 0.0});
  CHECK(std::abs(z.first) == 0.0);
}

TEST_CASE("eigenvalue ordering") {
  // descending modulus
  auto o = order_eigenvalues(0.5, 2.0);
  CHECK(o.first == cplx(2.0));
  // tie: ascending phase in (-pi, pi]
  o = order_eigenvalues(1.0i, -1.0i);
  CHECK(o.first == -1.0i);
  o = order_eigenvalues(cplx(-1.0, -0.0), cplx(0.0, 1.0));
  CHECK(o.first == cplx(0.0, 1.0));  // -1 sits at +pi
}

TEST_CASE("classify_phase") {
  const ModelParams a = validate_params(0.5, 0.5);
  const PhaseReport broken = classify_phase(a, 0.0);
  CHECK(broken.classification == PtPhase::Broken);
  CHECK(broken.T > 1.0);
  const PhaseReport exact = classify_phase(a, 1.9);
  CHECK(exact.classification == PtPhase::Exact);
  CHECK(exact.T < 1.0);
  CHECK(classify_phase(validate_params(0.5, 1.95), 0.0).classification == PtPhase::Exact);

  // gamma = 0 at resonance: Delta = 0 but S is unitary
  CHECK(classify_phase(validate_params(0.5, 0.0), 0.5).classification == PtPhase::Exact);

  // a generous band captures a point close to the EP
  const double near_ep = 0.5 + std::sqrt(1.75) + 1e-9;
  CHECK(classify_phase(a, near_ep, 1e-6).classification == PtPhase::ExceptionalPoint);
}

TEST_CASE("exceptional_points") {
  const auto a = exceptional_points(validate_params(0.5, 0.5));
  REQUIRE(a.has_value());
  CHECK(a->omega_minus == doctest::Approx(0.5 - std::sqrt(1.75)).epsilon(1e-15));
  CHECK(a->omega_plus == doctest::Approx(0.5 + std::sqrt(1.75)).epsilon(1e-15));
  CHECK(a->minus_in_band);
  CHECK(a->plus_in_band);
  CHECK_FALSE(a->degenerate);

  CHECK_FALSE(exceptional_points(validate_params(0.5, 1.95)).has_value());
  CHECK_FALSE(exceptional_points(validate_params(0.0, 2.0)).has_value());

  const auto h = exceptional_points(validate_params(0.5, 0.0));
  REQUIRE(h.has_value());
  CHECK(h->degenerate);
  CHECK(h->omega_minus == 0.5);
  CHECK(h->omega_plus == 0.5);
}

TEST_CASE("parity mirror leaves scalars unchanged and swaps reflections") {
  const ModelParams p = validate_params(0.3, 0.9);
  const ModelParams q = validate_params(0.3, -0.9);
  for (double omega : {-1.5, -0.2, 0.4, 1.1}) {
    const WavePoint wp = k_from_omega(omega);
    const auto a = scattering_coefficients(p, wp);
    const auto b = scattering_coefficients(q, wp);
    CHECK(a.T == doctest::Approx(b.T).epsilon(1e-13));
    CHECK(a.R_L == doctest::Approx(b.R_R).epsilon(1e-13));
    CHECK(a.R_R == doctest::Approx(b.R_L).epsilon(1e-13));
    CHECK(discriminant(p, omega).value == discriminant(q, omega).value);
    // with the mirror axis as phase reference the swap is exact
    const auto sa = recenter(s_matrix(p, wp), wp.k(), kDimerCenter);
    const auto sb = recenter(s_matrix(q, wp), wp.k(), kDimerCenter);
    CHECK(std::abs(sa.s12 - sb.s21) < 1e-13);
    CHECK(std::abs(sa.s21 - sb.s12) < 1e-13);
  }
}

TEST_CASE("eigenvalue moduli cross the upper EP continuously") {
  const ModelParams p = validate_params(0.5, 0.5);
  const double omega_plus = 0.5 + std::sqrt(1.75);
  double previous = -1.0;
  double max_jump = 0.0;
  for (double omega = omega_plus - 0.05; omega < omega_plus + 0.05; omega += 1e-4) {
    const auto [s1, s2] = s_eigenvalues_closed(p, k_from_omega(omega));
    const double top = std::max(std::abs(s1), std::abs(s2));
    if (previous >= 0.0) max_jump = std::max(max_jump, std::abs(top - previous));
    if (omega > omega_plus + 1e-9) CHECK(std::abs(top - 1.0) < 1e-9);
    if (omega < omega_plus - 1e-9) CHECK(top > 1.0);
    previous = top;
  }
  CHECK(max_jump < 0.1);
}
