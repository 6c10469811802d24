#pragma once

#include <vector>

#include "xyq/quench.hpp"

namespace xyq {

/// Phase decomposition of one mode's Loschmidt amplitude along a time series:
/// total = arg G_k unwrapped from 0, dynamical = Delta_k eps~_k t, geometric =
/// (total - dynamical) mod 2pi in [0, 2pi).  flagged[i] marks samples where
/// |G_k| < 1e-12 and the phase was bridged by neighbor interpolation.
struct PhaseSeries {
  double k = 0.0;
  std::vector<double> times;
  std::vector<double> phi_total;
  std::vector<double> phi_dyn;
  std::vector<double> phi_geo;
  std::vector<bool> flagged;
};

/// Integer winding of the geometric phase over the momentum grid, per time.
struct WindingSeries {
  std::vector<double> times;
  std::vector<int> nu;
};

/// Double-mode von Neumann entropy per grid momentum, in nats.
struct EntropyProfile {
  std::vector<double> momenta;
  std::vector<double> entropy;
};

/// Winding number with its rounding residue |nu_raw - nu|.
struct WindingResult {
  int nu = 0;
  double residue = 0.0;
};

/// Dynamical phase (|A_k|^2 - |B_k|^2) eps~_k t = Delta_k eps~_k t.
double dynamical_phase(double k, const QuenchSpec& q, const SqueezeSpec& s, double t);

/// arg G_k(t) unwrapped continuously along the series, starting from 0 at
/// t = 0.  Samples with |G_k| < 1e-12 are bridged by linear interpolation of
/// their unflagged neighbors.  Throws std::invalid_argument unless times
/// start at 0 and increase; throws numerical_guard_error when the sampling is
/// too coarse for unambiguous unwrapping (eps~_k dt >= pi), reporting the
/// required step.
std::vector<double> total_phase(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                const std::vector<double>& times);

/// Pancharatnam geometric phase (phi_total - phi_dyn) mod 2pi in [0, 2pi).
std::vector<double> geometric_phase(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                    const std::vector<double>& times);

/// Total/dynamical/geometric phases of one mode in one pass.
PhaseSeries phase_series(double k, const QuenchSpec& q, const SqueezeSpec& s,
                         const std::vector<double>& times);

/// Dynamical topological order parameter: winding of the geometric phase in k
/// across the grid, nu = (1/2pi) sum of principal-value increments, rounded.
/// Throws numerical_guard_error if the rounding residue exceeds 0.1.
WindingResult dtop_winding(const QuenchSpec& q, const SqueezeSpec& s, double t,
                           const MomentumGrid& grid);

/// dtop_winding evaluated at every time.
WindingSeries winding_series(const QuenchSpec& q, const SqueezeSpec& s,
                             const std::vector<double>& times, const MomentumGrid& grid);

/// Von Neumann entropy of one mode of a (k,-k) pair with population imbalance
/// delta: S = -sum_p p ln p over p = (1 +- delta)/2, with 0 ln 0 = 0.
/// Throws std::invalid_argument if |delta| > 1 + 1e-12.
double mode_entropy(double delta);

/// S_k = mode_entropy(Delta_k) over the grid momenta.
EntropyProfile entropy_profile(const QuenchSpec& q, const SqueezeSpec& s,
                               const MomentumGrid& grid);

}  // namespace xyq
