#include "xyq/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "xyq/errors.hpp"

namespace xyq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kModulusFlag = 1e-12;

double principal_increment(double x) {
  double d = std::remainder(x, kTwoPi);  // [-pi, pi]
  if (d <= -kPi) d += kTwoPi;            // (-pi, pi], pi-jumps unwrap upward
  return d;
}

double mod_two_pi(double x) {
  double m = std::fmod(x, kTwoPi);
  if (m < 0.0) m += kTwoPi;
  if (m >= kTwoPi) m = 0.0;
  return m;
}

// continuous arg G_k(t) from t = 0, exact in t.  For pa != pb the amplitude
// e^{+-i eps t} (pa + pb e^{-+2i eps t}) keeps the bracket in the right half
// plane, so the principal arg of the bracket is already continuous.
double continuous_total_phase(const ModeQuenchData& m, double t) {
  const double pa = std::norm(m.A);
  const double pb = std::norm(m.B);
  const double eps = m.eps_post;
  if (pa > pb) {
    const std::complex<double> w = pa + pb * std::polar(1.0, -2.0 * eps * t);
    return eps * t + std::arg(w);
  }
  if (pb > pa) {
    const std::complex<double> w = pb + pa * std::polar(1.0, 2.0 * eps * t);
    return -eps * t + std::arg(w);
  }
  // balanced mode: G = 2 pa cos(eps t); a pi step at every zero crossing
  return kPi * std::floor(eps * std::abs(t) / kPi + 0.5) * (t < 0.0 ? -1.0 : 1.0);
}

double geometric_phase_at(const ModeQuenchData& m, double t) {
  const double total = continuous_total_phase(m, t);
  const double dyn = m.delta * m.eps_post * t;
  return mod_two_pi(total - dyn);
}

void check_phase_times(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("phase series: empty time list");
  if (times.front() != 0.0) throw std::invalid_argument("phase series: times must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("phase series: times must be strictly increasing");
    }
  }
}

}  // namespace

double dynamical_phase(double k, const QuenchSpec& q, const SqueezeSpec& s, double t) {
  const auto m = mode_quench_data(k, q, s);
  return m.delta * m.eps_post * t;
}

PhaseSeries phase_series(double k, const QuenchSpec& q, const SqueezeSpec& s,
                         const std::vector<double>& times) {
  check_phase_times(times);
  const auto m = mode_quench_data(k, q, s);

  // density precheck: the carrier phase advances by eps~ dt per step
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double dt = times[i] - times[i - 1];
    if (m.eps_post * dt >= kPi) {
      std::ostringstream msg;
      msg << "phase series: time step " << dt << " too coarse for unambiguous unwrapping; "
          << "use dt < " << kPi / (2.0 * m.eps_post);
      throw numerical_guard_error(msg.str());
    }
  }

  PhaseSeries out;
  out.k = k;
  out.times = times;
  const std::size_t n = times.size();
  out.phi_total.assign(n, 0.0);
  out.phi_dyn.assign(n, 0.0);
  out.phi_geo.assign(n, 0.0);
  out.flagged.assign(n, false);

  std::vector<double> args(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> g = mode_loschmidt(m, times[i]);
    out.flagged[i] = std::abs(g) < kModulusFlag;
    args[i] = std::arg(g);
  }

  // unwrap across unflagged samples, then bridge flagged runs linearly
  double last_phase = 0.0;
  std::size_t last_idx = 0;
  out.phi_total[0] = 0.0;  // G(0) = 1
  for (std::size_t i = 1; i < n; ++i) {
    if (out.flagged[i]) continue;
    const double inc = principal_increment(args[i] - args[last_idx]);
    const double phase = last_phase + inc;
    out.phi_total[i] = phase;
    if (i - last_idx > 1) {
      for (std::size_t j = last_idx + 1; j < i; ++j) {
        const double w = static_cast<double>(j - last_idx) / static_cast<double>(i - last_idx);
        out.phi_total[j] = (1.0 - w) * last_phase + w * phase;
      }
    }
    last_phase = phase;
    last_idx = i;
  }
  for (std::size_t j = last_idx + 1; j < n; ++j) out.phi_total[j] = last_phase;

  for (std::size_t i = 0; i < n; ++i) {
    out.phi_dyn[i] = m.delta * m.eps_post * times[i];
    out.phi_geo[i] = mod_two_pi(out.phi_total[i] - out.phi_dyn[i]);
  }
  return out;
}

std::vector<double> total_phase(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                const std::vector<double>& times) {
  return phase_series(k, q, s, times).phi_total;
}

std::vector<double> geometric_phase(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                    const std::vector<double>& times) {
  return phase_series(k, q, s, times).phi_geo;
}

WindingResult dtop_winding(const QuenchSpec& q, const SqueezeSpec& s, double t,
                           const MomentumGrid& grid) {
  if (grid.size() < 2) throw std::invalid_argument("dtop_winding: grid too small");
  const auto cache = build_mode_cache(grid, q, s);

  double prev = geometric_phase_at(cache.front(), t);
  double winding = 0.0;
  for (std::size_t i = 1; i < cache.size(); ++i) {
    const double cur = geometric_phase_at(cache[i], t);
    winding += principal_increment(cur - prev);
    prev = cur;
  }
  const double nu_raw = winding / kTwoPi;
  const long nu = std::lround(nu_raw);
  const double residue = std::abs(nu_raw - static_cast<double>(nu));
  if (residue > 0.1) {
    std::ostringstream msg;
    msg << "dtop_winding: winding " << nu_raw << " not integer-quantized (residue " << residue
        << "); refine the momentum grid";
    throw numerical_guard_error(msg.str());
  }
  return WindingResult{static_cast<int>(nu), residue};
}

WindingSeries winding_series(const QuenchSpec& q, const SqueezeSpec& s,
                             const std::vector<double>& times, const MomentumGrid& grid) {
  WindingSeries out;
  out.times = times;
  out.nu.reserve(times.size());
  for (double t : times) {
    out.nu.push_back(dtop_winding(q, s, t, grid).nu);
  }
  return out;
}

double mode_entropy(double delta) {
  if (std::abs(delta) > 1.0 + 1e-12) {
    throw std::invalid_argument("mode_entropy: |delta| must be <= 1");
  }
  const double d = std::clamp(delta, -1.0, 1.0);
  const double p = 0.5 * (1.0 + d);
  const double q = 0.5 * (1.0 - d);
  double s = 0.0;
  if (p > 0.0) s -= p * std::log(p);
  if (q > 0.0) s -= q * std::log(q);
  return s;
}

EntropyProfile entropy_profile(const QuenchSpec& q, const SqueezeSpec& s,
                               const MomentumGrid& grid) {
  EntropyProfile prof;
  prof.momenta = grid.momenta();
  prof.entropy.reserve(grid.size());
  for (double k : grid.momenta()) {
    prof.entropy.push_back(mode_entropy(delta_k(k, q, s)));
  }
  return prof;
}

}  // namespace xyq
