#include "xyq/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyq {

MomentumGrid build_grid(int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw std::invalid_argument("build_grid: n_sites must be even and >= 2");
  }
  MomentumGrid grid;
  grid.n_sites_ = n_sites;
  grid.momenta_.reserve(static_cast<std::size_t>(n_sites / 2));
  for (int m = 1; m <= n_sites / 2; ++m) {
    grid.momenta_.push_back((2 * m - 1) * std::numbers::pi / n_sites);
  }
  return grid;
}

double bogoliubov_angle(double k, const XYParams& p) {
  const double y = p.gamma * std::sin(k);
  const double x = p.h + std::cos(k);
  if (y == 0.0 && x == 0.0) {
    return 0.0;  // gapless mode; only reachable exactly at criticality
  }
  return 0.5 * std::atan2(y, x);
}

double quasiparticle_energy(double k, const XYParams& p) {
  return std::hypot(p.h + std::cos(k), p.gamma * std::sin(k));
}

Eigen::Matrix2cd bloch_matrix(double k, const XYParams& p) {
  const double z = p.h + std::cos(k);
  const double y = p.gamma * std::sin(k);
  Eigen::Matrix2cd m;
  // -z sigma^z - y sigma^y
  m << std::complex<double>(-z, 0.0), std::complex<double>(0.0, y),
      std::complex<double>(0.0, -y), std::complex<double>(z, 0.0);
  return m;
}

ModeStaticData mode_static(double k, const XYParams& p) {
  return ModeStaticData{k, bogoliubov_angle(k, p), quasiparticle_energy(k, p)};
}

}  // namespace xyq
