#pragma once

#include <utility>
#include <vector>

#include "xyq/quench.hpp"

namespace xyq {

/// Rate function lambda(t) = -(2/N) sum_{k>0} ln|G_k(t)| >= 0 with the
/// detected nonanalytic-peak locations.
struct RateSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> peak_times;
};

/// One sample of a Fisher-zero line z_n(k) = tau + i t.  Samples where the
/// post-quench mode is gapless or one of |A_k|, |B_k| vanishes are flagged
/// unbounded (tau -> +-inf) and carry no finite coordinates.
struct FisherZeroSample {
  double k = 0.0;
  double tau = 0.0;
  double t = 0.0;
  bool unbounded = false;
};

struct FisherZeroLine {
  int n = 0;
  std::vector<FisherZeroSample> samples;
};

/// Critical time t_c = (2n+1) pi / (2 eps~_{k'}) of branch n at momentum k'.
struct CriticalTime {
  double k = 0.0;
  int n = 0;
  double t = 0.0;
};

/// When every mode is critical the zeros fill whole real-time segments
/// [t_min^n, t_max^n] instead of isolated times.
struct CriticalBand {
  int n = 0;
  double t_min = 0.0;
  double t_max = 0.0;
};

struct CriticalSet {
  std::vector<double> momenta;       // roots k' of Delta_k on (0, pi)
  std::vector<CriticalTime> times;   // filled by critical_times
  std::vector<CriticalBand> bands;   // filled instead when all modes critical
  bool all_modes_critical = false;
};

/// min/max |Delta_k| map over a squeezing-parameter grid.
struct DeltaMap {
  std::vector<double> r_values;
  std::vector<double> phi_values;
  std::vector<double> delta;  // row-major, delta[i * phi_values.size() + j] >= 0

  double at(std::size_t i, std::size_t j) const { return delta[i * phi_values.size() + j]; }
};

/// Rate function over the given strictly increasing times.  Per-mode |G_k| is
/// floored at 1e-300 before the log so exact zeros of the amplitude produce a
/// large finite value rather than inf.  Peaks are detected at the given
/// prominence.  Throws std::invalid_argument for an empty grid or time list.
RateSeries rate_function(const QuenchSpec& q, const SqueezeSpec& s, const MomentumGrid& grid,
                         const std::vector<double>& times, double prominence = 1e-3);

/// Local maxima of the series whose topographic prominence (drop to the
/// deepest valley separating them from higher ground) exceeds the threshold,
/// in increasing time order.
std::vector<double> detect_peaks(const RateSeries& series, double prominence);

/// A detected peak with its height and topographic prominence.
struct Peak {
  double t = 0.0;
  double value = 0.0;
  double prominence = 0.0;
};

/// detect_peaks with the peak heights and prominences retained, for ranking.
std::vector<Peak> analyze_peaks(const RateSeries& series, double prominence);

/// Fisher-zero line z_n(k) = [ln(|B_k|^2/|A_k|^2) + i (2n+1) pi] / (2 eps~_k)
/// sampled at the given momenta.
FisherZeroLine fisher_zero_line(int n, const QuenchSpec& q, const SqueezeSpec& s,
                                const std::vector<double>& k_samples);

/// All isolated roots of Delta_k on (0, pi): sign-change scan on a uniform
/// grid of `resolution` interior points followed by bisection to interval
/// width < 1e-12.  If max_k |Delta_k| < 1e-10 on the scan the
/// all_modes_critical flag is set and no roots are listed.
CriticalSet critical_momenta(const QuenchSpec& q, const SqueezeSpec& s, int resolution = 4096);

/// Critical times t_c = (2n+1) pi / (2 eps~_{k'}) for every root and branch
/// n = 0..n_max; for the all-modes-critical case, the per-branch real-time
/// segments bounded by the extrema of the post-quench spectrum.
/// Throws numerical_guard_error if a critical mode is gapless.
CriticalSet critical_times(const CriticalSet& cs, const QuenchSpec& q, int n_max);

/// Scan criterion Delta(r, phi) = min_k |Delta_k|, via grid scan at
/// `resolution` points refined by golden-section minimization to 1e-12.
double delta_criterion(const QuenchSpec& q, const SqueezeSpec& s, int resolution = 4096);

/// Delta(r, phi) over the given sorted squeezing-parameter grids.  Cells are
/// independent; the result does not depend on evaluation order.
DeltaMap delta_scan(const QuenchSpec& q, const std::vector<double>& r_grid,
                    const std::vector<double>& phi_grid, int resolution = 4096);

/// Extrema {min, max} of the quasiparticle energy over k in [0, pi].
std::pair<double, double> energy_range(const XYParams& p, int resolution = 4096);

}  // namespace xyq
