#pragma once

#include <Eigen/Core>
#include <vector>

namespace xyq {

/// Transverse-field XY chain parameters: field strength h and anisotropy gamma.
/// gamma = 1 is the quantum Ising limit, gamma -> 0 the XX limit.
struct XYParams {
  double h = 0.0;
  double gamma = 1.0;
};

/// Static single-particle data of one momentum mode.
struct ModeStaticData {
  double k = 0.0;        // momentum in (0, pi)
  double theta = 0.0;    // Bogoliubov angle, branch (-pi/2, pi/2]
  double epsilon = 0.0;  // quasiparticle energy, >= 0; 0 marks a gapless mode
};

/// Positive momenta of the even-fermion-parity (antiperiodic) sector,
/// k_m = (2m-1) pi / N for m = 1..N/2.  Strictly increasing, all in (0, pi).
class MomentumGrid {
 public:
  MomentumGrid() = default;

  int n_sites() const { return n_sites_; }
  const std::vector<double>& momenta() const& { return momenta_; }
  std::vector<double> momenta() && { return std::move(momenta_); }  // rvalue-safe
  std::size_t size() const { return momenta_.size(); }
  double operator[](std::size_t i) const { return momenta_[i]; }

  friend MomentumGrid build_grid(int n_sites);

 private:
  int n_sites_ = 0;
  std::vector<double> momenta_;
};

/// Momentum grid of the N-site chain in the even-parity sector.
/// Throws std::invalid_argument unless n_sites is even and >= 2.
MomentumGrid build_grid(int n_sites);

/// Bogoliubov angle theta_k = atan2(gamma sin k, h + cos k) / 2.
/// Continuous branch with theta in (-pi/2, pi/2]; returns 0 at the
/// degenerate point where both arguments vanish (gapless mode).
double bogoliubov_angle(double k, const XYParams& p);

/// Quasiparticle energy eps_k = sqrt((h + cos k)^2 + gamma^2 sin^2 k).
double quasiparticle_energy(double k, const XYParams& p);

/// 2x2 Bloch Hamiltonian H_k = -(h + cos k) sigma^z - gamma sin k sigma^y.
/// Hermitian with eigenvalues +- eps_k.
Eigen::Matrix2cd bloch_matrix(double k, const XYParams& p);

/// Angle and energy of one mode in a single evaluation.
ModeStaticData mode_static(double k, const XYParams& p);

}  // namespace xyq
