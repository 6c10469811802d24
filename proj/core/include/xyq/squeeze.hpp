#pragma once

#include <Eigen/Core>
#include <complex>

#include "xyq/model.hpp"

namespace xyq {

/// Double-mode squeezing parameter xi = r e^{i phi}.
/// r >= 0 and phi in (-pi, pi] after canonicalization; a negative r input is
/// folded via (r, phi) -> (-r, phi + pi).
struct SqueezeSpec {
  double r = 0.0;
  double phi = 0.0;

  /// Canonical form with r >= 0 and phi in (-pi, pi].
  SqueezeSpec canonical() const;
};

/// Amplitudes of a (k,-k) pair state a0 |0_k 0_-k> + a1 |1_k 1_-k>.
struct ModePairState {
  std::complex<double> a0{1.0, 0.0};
  std::complex<double> a1{0.0, 0.0};
};

/// 2x2 matrix of the double-mode squeeze acting on the quasiparticle pair,
/// [[cos r, e^{i phi} sin r], [-e^{-i phi} sin r, cos r]].
/// Unitary with unit determinant; the identity at r = 0 and r = 2 pi.
Eigen::Matrix2cd squeeze_matrix(const SqueezeSpec& s);

/// Squeezed vacuum cos r |0_k 0_-k> - e^{i phi} sin r |1_k 1_-k>.
ModePairState squeeze_vacuum(const SqueezeSpec& s);

/// Particle-hole conjugate of the squeeze matrix; equals squeeze_matrix with
/// phi -> -phi (i.e. S(xi*)), so it coincides with squeeze_matrix(s) itself
/// exactly when sin phi sin r = 0.
Eigen::Matrix2cd phs_conjugate_matrix(const SqueezeSpec& s);

/// Real-space pairing amplitude J(d) = (1/2pi) Int_0^pi theta_k sin(k d) dk
/// at site separation d >= 1, for the chain parameters p.  Adaptive composite
/// Simpson quadrature, absolute tolerance 1e-10.
/// Throws std::invalid_argument for d <= 0.
double pairing_amplitude(int d, const XYParams& p);

}  // namespace xyq
