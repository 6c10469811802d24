// Command-line front end for squeezed-quench dynamics of the transverse-field
// XY chain: rate functions, Fisher zeros, the Delta(r, phi) scan, phase /
// winding series, double-mode entropy, pairing amplitudes, and the
// brute-force validation report.

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Dense>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "xyq/dqpt.hpp"
#include "xyq/errors.hpp"
#include "xyq/io.hpp"
#include "xyq/model.hpp"
#include "xyq/observables.hpp"
#include "xyq/oracle.hpp"
#include "xyq/quench.hpp"
#include "xyq/squeeze.hpp"

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;

struct RunConfig {
  xyq::QuenchSpec quench{{1.5, 1.0}, {0.5, 1.0}};
  xyq::SqueezeSpec squeeze{0.0, 0.0};
  int n_sites = 2000;
  double t_max = 0.0;  // 0: pick a window covering three critical times
  int n_steps = 0;     // 0: per-subcommand default
  std::string out = "-";
  std::string format;  // csv for series output, json for validate
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--h0", cfg.quench.pre.h, "Pre-quench transverse field");
  cmd->add_option("--gamma0", cfg.quench.pre.gamma, "Pre-quench anisotropy");
  cmd->add_option("--h1", cfg.quench.post.h, "Post-quench transverse field");
  cmd->add_option("--gamma1", cfg.quench.post.gamma, "Post-quench anisotropy");
  cmd->add_option("--r", cfg.squeeze.r, "Squeezing strength r");
  cmd->add_option("--phi", cfg.squeeze.phi, "Squeezing direction phi (radians)");
  cmd->add_option("--sites", cfg.n_sites, "Number of chain sites N (even)");
  cmd->add_option("--out,-o", cfg.out, "Output path ('-' for stdout)");
}

void add_time_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tmax", cfg.t_max, "Time window end (default: covers three critical times)");
  cmd->add_option("--steps", cfg.n_steps, "Number of time samples")->check(CLI::Range(2, 100000000));
}

void check_config(const RunConfig& cfg, bool needs_times) {
  if (cfg.n_sites < 2 || cfg.n_sites % 2 != 0) {
    throw std::invalid_argument("--sites must be even and >= 2");
  }
  if (needs_times) {
    if (!(cfg.t_max > 0.0)) throw std::invalid_argument("--tmax must be > 0");
    if (cfg.n_steps < 2) throw std::invalid_argument("--steps must be >= 2");
  }
}

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> t(steps);
  for (int i = 0; i < steps; ++i) t[i] = t_max * i / (steps - 1.0);
  return t;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = (n == 1) ? lo : lo + (hi - lo) * i / (n - 1.0);
  return v;
}

// default window: three critical times of the first critical momentum, or of
// the zero band when every mode is critical; a spectral scale otherwise
double default_t_max(const RunConfig& cfg) {
  const auto cs = xyq::critical_momenta(cfg.quench, cfg.squeeze);
  const auto [eps_min, eps_max] = xyq::energy_range(cfg.quench.post);
  if (cs.all_modes_critical) {
    return eps_min > 1e-12 ? 1.25 * kPi / (2.0 * eps_min) : 10.0;
  }
  if (!cs.momenta.empty()) {
    double eps_first = xyq::quasiparticle_energy(cs.momenta.front(), cfg.quench.post);
    for (double k : cs.momenta) {
      eps_first = std::max(eps_first, xyq::quasiparticle_energy(k, cfg.quench.post));
    }
    if (eps_first > 1e-12) return 5.5 * kPi / (2.0 * eps_first);
  }
  return eps_max > 1e-12 ? 5.5 * kPi / (2.0 * eps_max) : 10.0;
}

int write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out == "-") {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
    return kExitUsage;
  }
  os << payload;
  return kExitOk;
}

int run_rate(const RunConfig& cfg0, double prominence, bool flip_sign) {
  RunConfig cfg = cfg0;
  if (cfg.t_max == 0.0) cfg.t_max = default_t_max(cfg);
  if (cfg.n_steps == 0) cfg.n_steps = 2000;
  check_config(cfg, true);
  auto series = xyq::rate_function(cfg.quench, cfg.squeeze, xyq::build_grid(cfg.n_sites),
                                   time_grid(cfg.t_max, cfg.n_steps), prominence);
  if (flip_sign) {
    for (double& v : series.values) v = -v;
  }
  std::ostringstream os;
  xyq::write_rate_csv(os, series);
  return write_output(cfg, os.str());
}

int run_zeros(const RunConfig& cfg, int n_max, int k_samples) {
  check_config(cfg, false);
  std::vector<double> ks;
  if (k_samples <= 0) {
    ks = xyq::build_grid(cfg.n_sites).momenta();
  } else {
    ks.resize(k_samples);
    for (int i = 0; i < k_samples; ++i) ks[i] = kPi * (i + 1) / (k_samples + 1.0);
  }
  std::vector<xyq::FisherZeroLine> lines;
  for (int n = 0; n <= n_max; ++n) {
    lines.push_back(xyq::fisher_zero_line(n, cfg.quench, cfg.squeeze, ks));
  }
  std::ostringstream os;
  xyq::write_zeros_csv(os, lines);
  return write_output(cfg, os.str());
}

int run_scan(const RunConfig& cfg, int r_steps, int phi_steps, double r_min, double r_max,
             double phi_min, double phi_max, int resolution) {
  check_config(cfg, false);
  const auto map = xyq::delta_scan(cfg.quench, uniform_grid(r_min, r_max, r_steps),
                                   uniform_grid(phi_min, phi_max, phi_steps), resolution);
  std::ostringstream os;
  xyq::write_scan_csv(os, map);
  return write_output(cfg, os.str());
}

int run_phase(const RunConfig& cfg0, double k_request) {
  RunConfig cfg = cfg0;
  if (cfg.t_max == 0.0) cfg.t_max = default_t_max(cfg);
  if (cfg.n_steps == 0) cfg.n_steps = 2000;
  check_config(cfg, true);
  const auto grid = xyq::build_grid(cfg.n_sites);
  double k = grid[0];
  for (double kk : grid.momenta()) {
    if (std::abs(kk - k_request) < std::abs(k - k_request)) k = kk;
  }
  const auto times = time_grid(cfg.t_max, cfg.n_steps);
  const auto phases = xyq::phase_series(k, cfg.quench, cfg.squeeze, times);
  const auto winding = xyq::winding_series(cfg.quench, cfg.squeeze, times, grid);
  std::ostringstream os;
  xyq::write_phase_csv(os, phases, winding);
  return write_output(cfg, os.str());
}

int run_entropy(const RunConfig& cfg) {
  check_config(cfg, false);
  const auto prof = xyq::entropy_profile(cfg.quench, cfg.squeeze, xyq::build_grid(cfg.n_sites));
  std::ostringstream os;
  xyq::write_entropy_csv(os, prof);
  return write_output(cfg, os.str());
}

int run_pairing(const RunConfig& cfg, int d_max) {
  if (d_max < 1) throw std::invalid_argument("--dmax must be >= 1");
  std::vector<std::pair<int, double>> table;
  for (int d = 1; d <= d_max; ++d) {
    table.emplace_back(d, xyq::pairing_amplitude(d, cfg.quench.pre));
  }
  std::ostringstream os;
  xyq::write_pairing_csv(os, table);
  return write_output(cfg, os.str());
}

struct CheckResult {
  std::string name;
  double max_abs_error;
  double tolerance;
  bool pass;
};

double rate_mismatch(const xyq::RateSeries& a, const xyq::RateSeries& b,
                     const std::vector<bool>& mask) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!mask[i]) continue;
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

int run_validate(const RunConfig& cfg0, int fock_samples, std::uint64_t seed,
                 const std::string& jxy_mode) {
  RunConfig cfg = cfg0;
  if (cfg.t_max == 0.0) cfg.t_max = 3.0;
  if (cfg.n_steps == 0) cfg.n_steps = 151;
  check_config(cfg, true);
  if (cfg.n_sites < 4 || cfg.n_sites > 12) {
    throw std::invalid_argument("validate: --sites must be in [4, 12]");
  }

  std::vector<CheckResult> checks;

  // 1) per-mode propagator oracle against the analytic amplitude
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> kd(1e-3, kPi - 1e-3), hd(0.1, 2.0), gd(0.1, 1.0),
        rd(0.0, 2.0), pd(-kPi, kPi), td(0.0, 12.0);
    double worst = 0.0;
    for (int i = 0; i < fock_samples; ++i) {
      const double k = kd(rng);
      const xyq::QuenchSpec q{{hd(rng), gd(rng)}, {hd(rng), gd(rng)}};
      const xyq::SqueezeSpec s{rd(rng), pd(rng)};
      const double t = td(rng);
      worst = std::max(worst, std::abs(xyq::fock_mode_oracle(k, q, s, t) -
                                       xyq::mode_loschmidt(k, q, s, t)));
    }
    checks.push_back({"fock_vs_analytic", worst, 1e-10, worst < 1e-10});
  }

  const auto times = time_grid(cfg.t_max, cfg.n_steps);
  const auto grid = xyq::build_grid(cfg.n_sites);

  // mask out times next to a per-mode log singularity
  auto singular_mask = [&](const xyq::SqueezeSpec& s) {
    const auto cache = xyq::build_mode_cache(grid, cfg.quench, s);
    std::vector<bool> mask(times.size(), true);
    for (std::size_t i = 0; i < times.size(); ++i) {
      for (const auto& m : cache) {
        if (std::abs(xyq::mode_loschmidt(m, times[i])) < 1e-3) {
          mask[i] = false;
          break;
        }
      }
    }
    return mask;
  };

  // 2) unsqueezed chain against the momentum-space rate
  {
    const auto ed = xyq::spin_ed_rate(cfg.quench, {0.0, 0.0}, times, cfg.n_sites);
    const auto mom = xyq::rate_function(cfg.quench, {0.0, 0.0}, grid, times);
    const double worst = rate_mismatch(ed, mom, singular_mask({0.0, 0.0}));
    checks.push_back({"spin_ed_rate_unsqueezed", worst, 1e-8, worst < 1e-8});
  }

  // 3) squeezed chain; the discrete kernel is the exact finite-N squeeze
  double err_discrete = 0.0, err_integral = -1.0;
  {
    const auto mom = xyq::rate_function(cfg.quench, cfg.squeeze, grid, times);
    const auto mask = singular_mask(cfg.squeeze);
    if (jxy_mode == "discrete" || jxy_mode == "both") {
      const auto ed = xyq::spin_ed_rate(cfg.quench, cfg.squeeze, times, cfg.n_sites,
                                        xyq::PairingKernel::discrete);
      err_discrete = rate_mismatch(ed, mom, mask);
      checks.push_back(
          {"spin_ed_rate_squeezed_discrete", err_discrete, 1e-6, err_discrete < 1e-6});
    }
    if (jxy_mode == "integral" || jxy_mode == "both") {
      const auto ed = xyq::spin_ed_rate(cfg.quench, cfg.squeeze, times, cfg.n_sites,
                                        xyq::PairingKernel::integral);
      err_integral = rate_mismatch(ed, mom, mask);
      checks.push_back(
          {"spin_ed_rate_squeezed_integral", err_integral, 3.0, err_integral < 3.0});
    }
  }

  // 4) parity sector and generator structure
  const auto frame =
      xyq::build_spin_chain_frame(cfg.quench, cfg.squeeze, cfg.n_sites,
                                  jxy_mode == "integral" ? xyq::PairingKernel::integral
                                                         : xyq::PairingKernel::discrete);
  {
    const auto report = xyq::parity_sector_check(frame);
    const double dev = std::abs(report.ground_parity - 1.0);
    checks.push_back({"ground_state_even_parity", dev, 1e-10, dev < 1e-10});
    checks.push_back({"generator_parity_commutator", report.generator_parity_comm, 1e-10,
                      report.generator_parity_comm < 1e-10});
  }

  // 5) spin-frame squeeze unitarity
  {
    const Eigen::MatrixXcd herm = std::complex<double>(0.0, -1.0) * frame.squeeze_generator;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    Eigen::VectorXcd ph(herm.rows());
    for (Eigen::Index i = 0; i < herm.rows(); ++i) {
      ph(i) = std::polar(1.0, es.eigenvalues()(i));
    }
    const Eigen::MatrixXcd u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    const double dev = (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    checks.push_back({"squeeze_unitarity", dev, 1e-10, dev < 1e-10});
  }

  bool overall = true;
  json per_check = json::array();
  for (const auto& c : checks) {
    overall = overall && c.pass;
    per_check.push_back({{"name", c.name},
                         {"max_abs_error", c.max_abs_error},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}});
  }
  json report{
      {"config",
       {{"h0", cfg.quench.pre.h},
        {"gamma0", cfg.quench.pre.gamma},
        {"h1", cfg.quench.post.h},
        {"gamma1", cfg.quench.post.gamma},
        {"r", cfg.squeeze.r},
        {"phi", cfg.squeeze.phi},
        {"sites", cfg.n_sites},
        {"tmax", cfg.t_max},
        {"steps", cfg.n_steps},
        {"fock_samples", fock_samples},
        {"seed", seed},
        {"jxy_mode", jxy_mode}}},
      {"per_check", per_check},
      {"overall_pass", overall}};
  if (jxy_mode == "both") {
    report["closer_jxy_mode"] = (err_discrete <= err_integral) ? "discrete" : "integral";
  }

  const int rc = write_output(cfg, report.dump(2) + "\n");
  if (rc != kExitOk) return rc;
  return overall ? kExitOk : kExitGuard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezed-quench dynamics of the transverse-field XY chain"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  double prominence = 1e-3;
  bool flip_sign = false;
  int n_max = 2, k_samples = 256;
  int r_steps = 128, phi_steps = 128, resolution = 4096;
  double r_min = 0.0, r_max = kPi / 2, phi_min = -kPi, phi_max = kPi;
  double k_request = kPi / 2;
  int d_max = 32, fock_samples = 10000;
  std::uint64_t seed = 20250808;
  std::string jxy_mode = "discrete";

  auto* rate = app.add_subcommand("rate", "Rate function lambda(t) -> CSV t,lambda");
  add_common_options(rate, cfg);
  add_time_options(rate, cfg);
  rate->add_option("--prominence", prominence, "Peak-detection prominence");
  rate->add_flag("--flip-sign", flip_sign,
                 "Emit the opposite-sign convention (peaks become dips)");

  auto* zeros = app.add_subcommand("zeros", "Fisher-zero lines -> CSV n,k,tau,t,flag");
  add_common_options(zeros, cfg);
  zeros->add_option("--n-max", n_max, "Largest branch index n")->check(CLI::NonNegativeNumber);
  zeros->add_option("--k-samples", k_samples, "Momentum samples (0: use the N-site grid)");

  auto* scan = app.add_subcommand("scan", "Delta(r, phi) map -> CSV r,phi,delta");
  add_common_options(scan, cfg);
  scan->add_option("--r-steps", r_steps, "Grid points in r")->check(CLI::PositiveNumber);
  scan->add_option("--phi-steps", phi_steps, "Grid points in phi")->check(CLI::PositiveNumber);
  scan->add_option("--r-min", r_min, "Lower r bound");
  scan->add_option("--r-max", r_max, "Upper r bound");
  scan->add_option("--phi-min", phi_min, "Lower phi bound");
  scan->add_option("--phi-max", phi_max, "Upper phi bound");
  scan->add_option("--resolution", resolution, "Momentum scan resolution for min_k");

  auto* phase = app.add_subcommand(
      "phase", "Phase decomposition and DTOP -> CSV t,phi_total,phi_dyn,phi_geo,nu");
  add_common_options(phase, cfg);
  add_time_options(phase, cfg);
  phase->add_option("--k", k_request, "Momentum of the displayed mode (nearest grid value)");

  auto* entropy = app.add_subcommand("entropy", "Double-mode entropy profile -> CSV k,entropy");
  add_common_options(entropy, cfg);

  auto* pairing = app.add_subcommand("pairing", "Pairing amplitude table -> CSV d,J");
  add_common_options(pairing, cfg);
  pairing->add_option("--dmax", d_max, "Largest site separation");

  auto* validate = app.add_subcommand("validate", "Brute-force oracle comparison -> JSON");
  add_common_options(validate, cfg);
  add_time_options(validate, cfg);
  validate->add_option("--fock-samples", fock_samples, "Random samples for the mode oracle");
  validate->add_option("--seed", seed, "RNG seed");
  validate->add_option("--jxy-mode", jxy_mode, "Squeeze kernel: discrete | integral | both")
      ->check(CLI::IsMember({"discrete", "integral", "both"}));

  // output format tags; the series subcommands emit CSV, validate emits JSON
  for (auto* cmd : {rate, zeros, scan, phase, entropy, pairing}) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv"}));
  }
  validate->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints usage or help
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rate->parsed()) return run_rate(cfg, prominence, flip_sign);
    if (zeros->parsed()) return run_zeros(cfg, n_max, k_samples);
    if (scan->parsed()) {
      return run_scan(cfg, r_steps, phi_steps, r_min, r_max, phi_min, phi_max, resolution);
    }
    if (phase->parsed()) return run_phase(cfg, k_request);
    if (entropy->parsed()) return run_entropy(cfg);
    if (pairing->parsed()) return run_pairing(cfg, d_max);
    if (validate->parsed()) return run_validate(cfg, fock_samples, seed, jxy_mode);
  } catch (const xyq::numerical_guard_error& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
