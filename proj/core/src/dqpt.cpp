#include "xyq/dqpt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "xyq/errors.hpp"

namespace xyq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kModulusFloor = 1e-300;  // per-mode |G| floor before the log
constexpr double kAmplitudeTol = 1e-12;   // |A| or |B| below this: zero at tau -> inf
constexpr double kGaplessTol = 1e-12;
constexpr double kAllCriticalTol = 1e-10;
constexpr double kRefineWidth = 1e-12;

// golden-section minimization of f on [lo, hi] down to interval width `width`;
// returns the smallest sampled value
double golden_min(const std::function<double(double)>& f, double lo, double hi, double width) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double best = std::min({f(a), f(b), f1, f2});
  while (b - a > width) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
    best = std::min({best, f1, f2});
  }
  return best;
}

void check_times(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("time list is empty");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("times must be strictly increasing");
    }
  }
}

// Delta_k sampled from precomputed 2alpha tables: cos2r cos2a - sin2r sin2a sinphi
struct AlphaTable {
  std::vector<double> k;
  std::vector<double> cos2a;
  std::vector<double> sin2a;
};

AlphaTable build_alpha_table(const QuenchSpec& q, int resolution) {
  AlphaTable tab;
  tab.k.resize(resolution);
  tab.cos2a.resize(resolution);
  tab.sin2a.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double k = kPi * (i + 1) / (resolution + 1);
    const double a2 = 2.0 * (bogoliubov_angle(k, q.post) - bogoliubov_angle(k, q.pre));
    tab.k[i] = k;
    tab.cos2a[i] = std::cos(a2);
    tab.sin2a[i] = std::sin(a2);
  }
  return tab;
}

double refine_abs_min(const QuenchSpec& q, const SqueezeSpec& s, const AlphaTable& tab,
                      double cos2r, double sin2r, double sinphi) {
  double fmin = std::numeric_limits<double>::infinity();
  std::size_t imin = 0;
  for (std::size_t i = 0; i < tab.k.size(); ++i) {
    const double v = std::abs(cos2r * tab.cos2a[i] - sin2r * tab.sin2a[i] * sinphi);
    if (v < fmin) {
      fmin = v;
      imin = i;
    }
  }
  const double step = kPi / (tab.k.size() + 1);
  const double lo = std::max(tab.k[imin] - step, step * 1e-6);
  const double hi = std::min(tab.k[imin] + step, kPi - step * 1e-6);
  const double refined = golden_min([&](double k) { return std::abs(delta_k(k, q, s)); }, lo,
                                    hi, kRefineWidth);
  return std::min(fmin, refined);
}

}  // namespace

RateSeries rate_function(const QuenchSpec& q, const SqueezeSpec& s, const MomentumGrid& grid,
                         const std::vector<double>& times, double prominence) {
  if (grid.size() == 0) throw std::invalid_argument("rate_function: empty momentum grid");
  check_times(times);

  const auto cache = build_mode_cache(grid, q, s);
  RateSeries series;
  series.times = times;
  series.values.resize(times.size());
  const double norm = 2.0 / grid.n_sites();
  for (std::size_t it = 0; it < times.size(); ++it) {
    const double t = times[it];
    double logsum = 0.0;
    for (const auto& m : cache) {
      const double pa = std::norm(m.A);
      const double pb = std::norm(m.B);
      // |G|^2 = pa^2 + pb^2 + 2 pa pb cos(2 eps t)
      const double g2 = pa * pa + pb * pb + 2.0 * pa * pb * std::cos(2.0 * m.eps_post * t);
      const double g = std::max(std::sqrt(std::max(g2, 0.0)), kModulusFloor);
      logsum += std::log(g);
    }
    series.values[it] = -norm * logsum;
  }
  series.peak_times = detect_peaks(series, prominence);
  return series;
}

std::vector<Peak> analyze_peaks(const RateSeries& series, double prominence) {
  if (series.values.empty()) throw std::invalid_argument("detect_peaks: empty series");
  if (!(prominence > 0.0)) throw std::invalid_argument("detect_peaks: prominence must be > 0");

  const auto& v = series.values;
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
    // walk outward to the nearest higher ground, tracking the deepest valley
    double left_base = v[i];
    for (std::size_t j = i; j-- > 0;) {
      left_base = std::min(left_base, v[j]);
      if (v[j] > v[i]) break;
    }
    double right_base = v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      right_base = std::min(right_base, v[j]);
      if (v[j] > v[i]) break;
    }
    const double prom = v[i] - std::max(left_base, right_base);
    if (prom > prominence) {
      peaks.push_back(Peak{series.times[i], v[i], prom});
    }
  }
  return peaks;
}

std::vector<double> detect_peaks(const RateSeries& series, double prominence) {
  std::vector<double> times;
  for (const auto& p : analyze_peaks(series, prominence)) times.push_back(p.t);
  return times;
}

FisherZeroLine fisher_zero_line(int n, const QuenchSpec& q, const SqueezeSpec& s,
                                const std::vector<double>& k_samples) {
  FisherZeroLine line;
  line.n = n;
  line.samples.reserve(k_samples.size());
  for (double k : k_samples) {
    if (!(k > 0.0 && k < kPi)) {
      throw std::invalid_argument("fisher_zero_line: k samples must lie in (0, pi)");
    }
    FisherZeroSample sample;
    sample.k = k;
    const auto m = mode_quench_data(k, q, s);
    const double pa = std::norm(m.A);
    const double pb = std::norm(m.B);
    if (m.eps_post <= kGaplessTol || std::abs(m.A) < kAmplitudeTol ||
        std::abs(m.B) < kAmplitudeTol) {
      sample.unbounded = true;
      sample.tau = (pb < pa) ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
      sample.t = std::numeric_limits<double>::infinity();
    } else {
      sample.tau = std::log(pb / pa) / (2.0 * m.eps_post);
      sample.t = (2.0 * n + 1.0) * kPi / (2.0 * m.eps_post);
    }
    line.samples.push_back(sample);
  }
  return line;
}

CriticalSet critical_momenta(const QuenchSpec& q, const SqueezeSpec& s, int resolution) {
  if (resolution < 2) throw std::invalid_argument("critical_momenta: resolution must be >= 2");
  CriticalSet cs;

  std::vector<double> ks(resolution), dv(resolution);
  double max_abs = 0.0;
  for (int i = 0; i < resolution; ++i) {
    ks[i] = kPi * (i + 1) / (resolution + 1);
    dv[i] = delta_k(ks[i], q, s);
    max_abs = std::max(max_abs, std::abs(dv[i]));
  }
  if (max_abs < kAllCriticalTol) {
    cs.all_modes_critical = true;
    return cs;
  }

  auto f = [&](double k) { return delta_k(k, q, s); };
  for (int i = 0; i + 1 < resolution; ++i) {
    if (dv[i] == 0.0) {
      cs.momenta.push_back(ks[i]);
      continue;
    }
    if (dv[i] * dv[i + 1] < 0.0) {
      double a = ks[i], b = ks[i + 1];
      double fa = dv[i];
      while (b - a > kRefineWidth) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      cs.momenta.push_back(0.5 * (a + b));
    }
  }
  if (!dv.empty() && dv.back() == 0.0) cs.momenta.push_back(ks.back());
  return cs;
}

CriticalSet critical_times(const CriticalSet& cs, const QuenchSpec& q, int n_max) {
  if (n_max < 0) throw std::invalid_argument("critical_times: n_max must be >= 0");
  CriticalSet out = cs;
  out.times.clear();
  out.bands.clear();

  if (cs.all_modes_critical) {
    const auto [eps_min, eps_max] = energy_range(q.post);
    if (eps_min <= kGaplessTol) {
      throw numerical_guard_error("critical_times: gapless post-quench spectrum");
    }
    for (int n = 0; n <= n_max; ++n) {
      const double f = (2.0 * n + 1.0) * kPi / 2.0;
      out.bands.push_back(CriticalBand{n, f / eps_max, f / eps_min});
    }
    return out;
  }

  for (double kc : cs.momenta) {
    const double eps = quasiparticle_energy(kc, q.post);
    if (eps <= kGaplessTol) {
      throw numerical_guard_error("critical_times: gapless critical mode, t_c diverges");
    }
    for (int n = 0; n <= n_max; ++n) {
      out.times.push_back(CriticalTime{kc, n, (2.0 * n + 1.0) * kPi / (2.0 * eps)});
    }
  }
  return out;
}

double delta_criterion(const QuenchSpec& q, const SqueezeSpec& spec, int resolution) {
  if (resolution < 2) throw std::invalid_argument("delta_criterion: resolution must be >= 2");
  const SqueezeSpec s = spec.canonical();
  const AlphaTable tab = build_alpha_table(q, resolution);
  const double cos2r = std::cos(2.0 * s.r);
  const double sin2r = std::sin(2.0 * s.r);
  const double sinphi = std::sin(s.phi);
  return refine_abs_min(q, s, tab, cos2r, sin2r, sinphi);
}

DeltaMap delta_scan(const QuenchSpec& q, const std::vector<double>& r_grid,
                    const std::vector<double>& phi_grid, int resolution) {
  if (r_grid.empty() || phi_grid.empty()) {
    throw std::invalid_argument("delta_scan: parameter grids must be nonempty");
  }
  if (!std::is_sorted(r_grid.begin(), r_grid.end()) ||
      !std::is_sorted(phi_grid.begin(), phi_grid.end())) {
    throw std::invalid_argument("delta_scan: parameter grids must be sorted");
  }
  const AlphaTable tab = build_alpha_table(q, resolution);
  DeltaMap map;
  map.r_values = r_grid;
  map.phi_values = phi_grid;
  map.delta.resize(r_grid.size() * phi_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const SqueezeSpec sc = SqueezeSpec{r_grid[i], 0.0}.canonical();
    const double cos2r = std::cos(2.0 * sc.r);
    const double sin2r = std::sin(2.0 * sc.r);
    for (std::size_t j = 0; j < phi_grid.size(); ++j) {
      const SqueezeSpec s = SqueezeSpec{r_grid[i], phi_grid[j]}.canonical();
      map.delta[i * phi_grid.size() + j] =
          refine_abs_min(q, s, tab, cos2r, sin2r, std::sin(s.phi));
    }
  }
  return map;
}

std::pair<double, double> energy_range(const XYParams& p, int resolution) {
  auto f = [&](double k) { return quasiparticle_energy(k, p); };
  double fmin = std::numeric_limits<double>::infinity();
  double fmax = -std::numeric_limits<double>::infinity();
  std::size_t imin = 0, imax = 0;
  std::vector<double> ks(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    ks[i] = kPi * i / resolution;
    const double v = f(ks[i]);
    if (v < fmin) {
      fmin = v;
      imin = i;
    }
    if (v > fmax) {
      fmax = v;
      imax = i;
    }
  }
  const double step = kPi / resolution;
  const double lo_min = std::max(0.0, ks[imin] - step);
  const double hi_min = std::min(kPi, ks[imin] + step);
  fmin = std::min(fmin, golden_min(f, lo_min, hi_min, kRefineWidth));
  const double lo_max = std::max(0.0, ks[imax] - step);
  const double hi_max = std::min(kPi, ks[imax] + step);
  const double refined_max =
      -golden_min([&](double k) { return -f(k); }, lo_max, hi_max, kRefineWidth);
  fmax = std::max(fmax, refined_max);
  return {fmin, fmax};
}

}  // namespace xyq
