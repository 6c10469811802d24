#include "xyq/squeeze.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double composite_simpson(int d, const XYParams& p, int panels) {
  // integrand theta_k sin(k d) on [0, pi]; endpoints contribute 0 exactly
  const double h = std::numbers::pi / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * h;
    const double mid = a + 0.5 * h;
    const double b = a + h;
    const double fa = (i == 0) ? 0.0 : bogoliubov_angle(a, p) * std::sin(a * d);
    const double fm = bogoliubov_angle(mid, p) * std::sin(mid * d);
    const double fb = (i == panels - 1) ? 0.0 : bogoliubov_angle(b, p) * std::sin(b * d);
    sum += (h / 6.0) * (fa + 4.0 * fm + fb);
  }
  return sum / kTwoPi;
}

}  // namespace

SqueezeSpec SqueezeSpec::canonical() const {
  double rc = r;
  double pc = phi;
  if (rc < 0.0) {
    rc = -rc;
    pc += std::numbers::pi;
  }
  pc = std::remainder(pc, kTwoPi);  // [-pi, pi]
  if (pc <= -std::numbers::pi) pc += kTwoPi;
  return SqueezeSpec{rc, pc};
}

Eigen::Matrix2cd squeeze_matrix(const SqueezeSpec& spec) {
  const SqueezeSpec s = spec.canonical();
  const double c = std::cos(s.r);
  const double sn = std::sin(s.r);
  const std::complex<double> eip = std::polar(1.0, s.phi);
  Eigen::Matrix2cd m;
  m << std::complex<double>(c, 0.0), eip * sn, -std::conj(eip) * sn,
      std::complex<double>(c, 0.0);
  return m;
}

ModePairState squeeze_vacuum(const SqueezeSpec& spec) {
  const SqueezeSpec s = spec.canonical();
  ModePairState state;
  state.a0 = std::complex<double>(std::cos(s.r), 0.0);
  state.a1 = -std::polar(1.0, s.phi) * std::sin(s.r);
  return state;
}

Eigen::Matrix2cd phs_conjugate_matrix(const SqueezeSpec& s) {
  return squeeze_matrix(s).conjugate();
}

double pairing_amplitude(int d, const XYParams& p) {
  if (d <= 0) {
    throw std::invalid_argument("pairing_amplitude: separation d must be >= 1");
  }
  constexpr double kTol = 1e-10;
  constexpr int kMaxPanels = 1 << 20;
  int panels = 4096;
  double prev = composite_simpson(d, p, panels);
  while (panels < kMaxPanels) {
    panels *= 2;
    const double next = composite_simpson(d, p, panels);
    if (std::abs(next - prev) < kTol) return next;
    prev = next;
  }
  return prev;  // near-critical parameters: return the finest estimate
}

}  // namespace xyq
