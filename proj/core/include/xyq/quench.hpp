#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "xyq/model.hpp"
#include "xyq/squeeze.hpp"

namespace xyq {

/// Sudden quench (h0, gamma0) -> (h1, gamma1) at t = 0.
struct QuenchSpec {
  XYParams pre;
  XYParams post;
};

/// Per-momentum overlap cache for a squeezed quench: the angle mismatch
/// alpha_k = theta~_k - theta_k, the post-quench energy, the amplitudes
/// A_k, B_k of the squeezed state in the post-quench pair eigenbasis, and
/// the population imbalance delta = |A|^2 - |B|^2.
struct ModeQuenchData {
  double k = 0.0;
  double alpha = 0.0;
  double eps_post = 0.0;
  std::complex<double> A{1.0, 0.0};
  std::complex<double> B{0.0, 0.0};
  double delta = 1.0;
};

/// Post-quench pair amplitudes
///   A_k = cos r cos alpha + i e^{i phi} sin r sin alpha,
///   B_k = -i cos r sin alpha - e^{i phi} sin r cos alpha,
/// normalized |A|^2 + |B|^2 = 1.
std::pair<std::complex<double>, std::complex<double>> overlap_amplitudes(
    double k, const QuenchSpec& q, const SqueezeSpec& s);

/// Critical-condition scalar
///   Delta_k = cos 2r cos 2alpha_k - sin 2r sin 2alpha_k sin phi,
/// equal to |A_k|^2 - |B_k|^2.  Delta_k = 0 marks a critical mode.
double delta_k(double k, const QuenchSpec& q, const SqueezeSpec& s);

/// Per-mode Loschmidt amplitude
///   G_k(t) = |A_k|^2 e^{i eps~_k t} + |B_k|^2 e^{-i eps~_k t},
/// with |G_k| <= 1 and G_k(0) = 1.
std::complex<double> mode_loschmidt(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                    double t);

/// All per-mode quantities of one momentum in a single evaluation.
ModeQuenchData mode_quench_data(double k, const QuenchSpec& q, const SqueezeSpec& s);

/// Cache of mode_quench_data over a momentum grid; time evolution reuses it
/// (only the two phase factors depend on t).
std::vector<ModeQuenchData> build_mode_cache(const MomentumGrid& grid, const QuenchSpec& q,
                                             const SqueezeSpec& s);

/// Loschmidt amplitude of a cached mode at time t.
std::complex<double> mode_loschmidt(const ModeQuenchData& m, double t);

}  // namespace xyq
