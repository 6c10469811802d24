#include "xyq/quench.hpp"

#include <cmath>

namespace xyq {

namespace {

std::pair<std::complex<double>, std::complex<double>> amplitudes_from_alpha(
    double alpha, const SqueezeSpec& spec) {
  const SqueezeSpec s = spec.canonical();
  const double cr = std::cos(s.r);
  const double sr = std::sin(s.r);
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const std::complex<double> eip = std::polar(1.0, s.phi);
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> A = cr * ca + i * eip * (sr * sa);
  const std::complex<double> B = -i * (cr * sa) - eip * (sr * ca);
  return {A, B};
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> overlap_amplitudes(
    double k, const QuenchSpec& q, const SqueezeSpec& s) {
  const double alpha = bogoliubov_angle(k, q.post) - bogoliubov_angle(k, q.pre);
  return amplitudes_from_alpha(alpha, s);
}

double delta_k(double k, const QuenchSpec& q, const SqueezeSpec& spec) {
  const SqueezeSpec s = spec.canonical();
  const double alpha = bogoliubov_angle(k, q.post) - bogoliubov_angle(k, q.pre);
  return std::cos(2.0 * s.r) * std::cos(2.0 * alpha) -
         std::sin(2.0 * s.r) * std::sin(2.0 * alpha) * std::sin(s.phi);
}

ModeQuenchData mode_quench_data(double k, const QuenchSpec& q, const SqueezeSpec& s) {
  ModeQuenchData m;
  m.k = k;
  m.alpha = bogoliubov_angle(k, q.post) - bogoliubov_angle(k, q.pre);
  m.eps_post = quasiparticle_energy(k, q.post);
  std::tie(m.A, m.B) = amplitudes_from_alpha(m.alpha, s);
  m.delta = std::norm(m.A) - std::norm(m.B);
  return m;
}

std::complex<double> mode_loschmidt(const ModeQuenchData& m, double t) {
  const double pa = std::norm(m.A);
  const double pb = std::norm(m.B);
  const double ph = m.eps_post * t;
  return pa * std::polar(1.0, ph) + pb * std::polar(1.0, -ph);
}

std::complex<double> mode_loschmidt(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                    double t) {
  return mode_loschmidt(mode_quench_data(k, q, s), t);
}

std::vector<ModeQuenchData> build_mode_cache(const MomentumGrid& grid, const QuenchSpec& q,
                                             const SqueezeSpec& s) {
  std::vector<ModeQuenchData> cache;
  cache.reserve(grid.size());
  const SqueezeSpec sc = s.canonical();
  for (double k : grid.momenta()) {
    cache.push_back(mode_quench_data(k, q, sc));
  }
  return cache;
}

}  // namespace xyq
