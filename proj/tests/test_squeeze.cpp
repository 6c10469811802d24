#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "xyq/squeeze.hpp"

using namespace xyq;
namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtHalf = std::sqrt(0.5);
}

TEST_CASE("squeeze matrix special values") {
  const Eigen::Matrix2cd id = squeeze_matrix({0.0, 0.3});
  CHECK((id - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::Matrix2cd u = squeeze_matrix({kPi / 4, 0.0});
  CHECK(std::abs(u(0, 0) - kSqrtHalf) < 1e-15);
  CHECK(std::abs(u(0, 1) - kSqrtHalf) < 1e-15);
  CHECK(std::abs(u(1, 0) + kSqrtHalf) < 1e-15);
  CHECK(std::abs(u(1, 1) - kSqrtHalf) < 1e-15);

  for (double phi : {-2.0, 0.0, 1.3}) {
    const Eigen::Matrix2cd p = squeeze_matrix({2.0 * kPi, phi});
    CHECK((p - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("squeeze matrix is unitary with unit determinant") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> rd(0.0, 8.0), pd(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix2cd u = squeeze_matrix({rd(rng), pd(rng)});
    CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
  }
}

TEST_CASE("squeezed vacuum amplitudes") {
  const auto v0 = squeeze_vacuum({0.0, 1.1});
  CHECK(std::abs(v0.a0 - 1.0) < 1e-15);
  CHECK(std::abs(v0.a1) < 1e-15);

  const auto vu = squeeze_vacuum({kPi / 4, 0.0});
  CHECK(std::abs(vu.a0 - kSqrtHalf) < 1e-15);
  CHECK(std::abs(vu.a1 + kSqrtHalf) < 1e-15);

  // cos(pi/2) = 0, -e^{i pi} sin(pi/2) = 1
  const auto vp = squeeze_vacuum({kPi / 2, kPi});
  CHECK(std::abs(vp.a0) < 1e-15);
  CHECK(std::abs(vp.a1 - 1.0) < 1e-15);
}

TEST_CASE("squeezed vacuum is normalized and 2pi-periodic in r") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> rd(0.0, 2.0 * kPi), pd(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const double r = rd(rng), phi = pd(rng);
    const auto a = squeeze_vacuum({r, phi});
    CHECK(std::abs(std::norm(a.a0) + std::norm(a.a1) - 1.0) < 1e-12);
    const auto b = squeeze_vacuum({r + 2.0 * kPi, phi});
    CHECK(std::abs(a.a0 - b.a0) < 1e-14);
    CHECK(std::abs(a.a1 - b.a1) < 1e-14);
  }
}

TEST_CASE("negative squeezing strength canonicalizes via (r, phi) -> (-r, phi + pi)") {
  const auto a = squeeze_vacuum({-0.3, 0.2});
  const auto b = squeeze_vacuum({0.3, 0.2 + kPi});
  CHECK(std::abs(a.a0 - b.a0) < 1e-15);
  CHECK(std::abs(a.a1 - b.a1) < 1e-15);
  const auto c = SqueezeSpec{-1.0, -3.0}.canonical();
  CHECK(c.r == 1.0);
  CHECK(c.phi > -kPi);
  CHECK(c.phi <= kPi);
}

TEST_CASE("particle-hole conjugation flips the squeezing direction") {
  SUBCASE("real squeezing parameter is invariant") {
    for (double phi : {0.0, kPi}) {
      for (double r : {0.1, 0.7, 1.4}) {
        const Eigen::Matrix2cd diff = phs_conjugate_matrix({r, phi}) - squeeze_matrix({r, phi});
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
  SUBCASE("phi = pi/3 conjugates to phi = -pi/3") {
    const Eigen::Matrix2cd diff =
        phs_conjugate_matrix({0.5, kPi / 3}) - squeeze_matrix({0.5, -kPi / 3});
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("equality with the original holds iff sin phi sin r = 0") {
    const Eigen::Matrix2cd broken_diff =
        phs_conjugate_matrix({0.5, kPi / 3}) - squeeze_matrix({0.5, kPi / 3});
    const double broken = broken_diff.cwiseAbs().maxCoeff();
    CHECK(broken > 1e-3);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> rd(0.0, 3.0), pd(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
      const double r = rd(rng), phi = pd(rng);
      const Eigen::Matrix2cd diff = phs_conjugate_matrix({r, phi}) - squeeze_matrix({r, -phi});
      CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("pairing amplitude against the Ising-limit closed form") {
  // at h = 0, gamma = 1 the angle is k/2 exactly, so
  // J(d) = (1/4pi) Int_0^pi k sin(k d) dk = (-1)^{d+1} / (4 d)
  auto closed_form = [](int d) { return ((d % 2 == 1) ? 1.0 : -1.0) / (4.0 * d); };
  const XYParams ising{0.0, 1.0};
  CHECK(pairing_amplitude(1, ising) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(pairing_amplitude(2, ising) == doctest::Approx(-0.125).epsilon(1e-10));
  for (int d = 1; d <= 8; ++d) {
    CHECK(std::abs(pairing_amplitude(d, ising) - closed_form(d)) < 1e-10);
  }
}

TEST_CASE("pairing amplitude in the strong-field limit is small") {
  const double j = pairing_amplitude(1, {100.0, 1.0});
  CHECK(std::abs(j) < 3e-3);
}

TEST_CASE("pairing amplitude is bounded by the mean |theta|") {
  for (const XYParams p : {XYParams{0.5, 1.0}, XYParams{1.3, 0.4}, XYParams{0.0, 0.1}}) {
    // midpoint-rule bound (1/2pi) Int_0^pi |theta_k| dk
    const int n = 20000;
    double bound = 0.0;
    for (int i = 0; i < n; ++i) {
      const double k = kPi * (i + 0.5) / n;
      bound += std::abs(bogoliubov_angle(k, p));
    }
    bound *= kPi / n / (2.0 * kPi);
    for (int d = 1; d <= 6; ++d) {
      CHECK(std::abs(pairing_amplitude(d, p)) <= bound + 1e-9);
    }
  }
}

TEST_CASE("pairing amplitude rejects nonpositive separations") {
  CHECK_THROWS_AS(pairing_amplitude(0, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(pairing_amplitude(-3, {0.5, 1.0}), std::invalid_argument);
}
