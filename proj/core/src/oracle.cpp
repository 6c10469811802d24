#include "xyq/oracle.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "xyq/errors.hpp"

namespace xyq {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// ---------------------------------------------------------------- fock (2x2)

Eigen::Matrix2cd even_block(double k, const XYParams& p) {
  const double z = p.h + std::cos(k);
  const double y = p.gamma * std::sin(k);
  Eigen::Matrix2cd m;
  m << cplx(z, 0.0), cplx(0.0, -y), cplx(0.0, y), cplx(-z, 0.0);
  return m;
}

// ------------------------------------------------------- spin chain (2^N dim)

// basis: bit n of the index = 1 when spin n is up (fermion mode occupied)

Eigen::MatrixXd build_chain_hamiltonian(int n_sites, const XYParams& p) {
  const int dim = 1 << n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const int up = std::popcount(static_cast<std::uint32_t>(s));
    h(s, s) += -0.5 * p.h * (2 * up - n_sites);
    for (int n = 0; n < n_sites; ++n) {
      const int m = (n + 1) % n_sites;
      const int bn = (s >> n) & 1;
      const int bm = (s >> m) & 1;
      const int sp = s ^ (1 << n) ^ (1 << m);
      // sigma^x sigma^x and sigma^y sigma^y both flip the bond's two spins;
      // their amplitudes combine to -gamma/2 (equal bits) or -1/2 (unequal)
      h(sp, s) += (bn == bm) ? -0.5 * p.gamma : -0.5;
    }
  }
  return h;
}

// amplitude list over basis states; duplicates allowed, they accumulate
using SparseVec = std::vector<std::pair<std::uint32_t, cplx>>;

// one-body operator sum_n (a_n c_n + b_n c_n^dag) with Jordan-Wigner strings
struct OneBody {
  std::vector<cplx> annihilate;  // a_n
  std::vector<cplx> create;      // b_n
};

double jw_sign(std::uint32_t s, int n) {
  return (std::popcount(s & ((1u << n) - 1u)) & 1) ? -1.0 : 1.0;
}

void apply_one_body(const OneBody& op, const SparseVec& in, int n_sites, SparseVec& out) {
  out.clear();
  for (const auto& [s, amp] : in) {
    for (int n = 0; n < n_sites; ++n) {
      const bool occ = (s >> n) & 1u;
      const double sign = jw_sign(s, n);
      if (occ) {
        if (op.annihilate[n] != 0.0) {
          out.emplace_back(s ^ (1u << n), amp * op.annihilate[n] * sign);
        }
      } else if (op.create[n] != 0.0) {
        out.emplace_back(s | (1u << n), amp * op.create[n] * sign);
      }
    }
  }
}

OneBody dagger(const OneBody& op) {
  OneBody d;
  d.annihilate.resize(op.create.size());
  d.create.resize(op.annihilate.size());
  for (std::size_t n = 0; n < op.annihilate.size(); ++n) {
    d.annihilate[n] = std::conj(op.create[n]);
    d.create[n] = std::conj(op.annihilate[n]);
  }
  return d;
}

// momentum-space fermion c_{k} = (1/sqrt N) sum_n e^{i k n} c_n
OneBody momentum_annihilator(double k, int n_sites) {
  OneBody op;
  op.annihilate.resize(n_sites);
  op.create.assign(n_sites, cplx{0.0, 0.0});
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_sites));
  for (int n = 0; n < n_sites; ++n) {
    op.annihilate[n] = std::polar(norm, k * n);
  }
  return op;
}

// quasiparticle annihilator of the chain at signed momentum +-k; the branch
// theta + pi/2 makes eta annihilate the many-body ground state
OneBody quasiparticle_annihilator(double k_signed, const XYParams& p, int n_sites) {
  const double k = std::abs(k_signed);
  const double th = bogoliubov_angle(k, p) + 0.5 * kPi;
  const double c = std::cos(th);
  const double s = std::sin(th);
  OneBody op;
  op.annihilate.resize(n_sites);
  op.create.resize(n_sites);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_sites));
  for (int n = 0; n < n_sites; ++n) {
    const cplx phase = std::polar(norm, k_signed * n);
    op.annihilate[n] = phase * c;
    op.create[n] = phase * ((k_signed > 0.0) ? -kI * s : kI * s);
  }
  return op;
}

// accumulate coeff * (second . first) applied to every basis column into m
void accumulate_quadratic(Eigen::MatrixXcd& m, const OneBody& first, const OneBody& second,
                          cplx coeff, int n_sites) {
  if (coeff == 0.0) return;
  const int dim = 1 << n_sites;
  SparseVec seed(1), mid, out;
  for (int col = 0; col < dim; ++col) {
    seed[0] = {static_cast<std::uint32_t>(col), cplx{1.0, 0.0}};
    apply_one_body(first, seed, n_sites, mid);
    apply_one_body(second, mid, n_sites, out);
    for (const auto& [s, amp] : out) m(s, col) += coeff * amp;
  }
}

cplx simpson_complex(const std::function<cplx(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  cplx sum{0.0, 0.0};
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    sum += (h / 6.0) * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
  }
  return sum;
}

// pair and density coefficient functions of the squeeze generator in the
// c-fermion basis:  M = sum_{k>0} [ g(k) c_k^dag c_-k^dag - g(k)* c_-k c_k
//                                   + f(k) (n_k + n_-k - 1) ]
cplx pair_coeff(double k, const XYParams& pre, const SqueezeSpec& s) {
  const double th = bogoliubov_angle(k, pre) + 0.5 * kPi;
  const cplx xi = std::polar(s.r, s.phi);
  const double sn = std::sin(th);
  const double cs = std::cos(th);
  return std::conj(xi) * (sn * sn) - xi * (cs * cs);
}

cplx density_coeff(double k, const XYParams& pre, const SqueezeSpec& s) {
  const double th = bogoliubov_angle(k, pre) + 0.5 * kPi;
  const cplx xi = std::polar(s.r, s.phi);
  return kI * std::sin(th) * std::cos(th) * (xi + std::conj(xi));
}

// discrete kernel: quasiparticle pair operators at the exact grid momenta
void add_discrete_generator(Eigen::MatrixXcd& m, const QuenchSpec& q, const SqueezeSpec& s,
                            int n_sites) {
  const cplx xi = std::polar(s.r, s.phi);
  const auto grid = build_grid(n_sites);
  for (double k : grid.momenta()) {
    const OneBody eta_k = quasiparticle_annihilator(k, q.pre, n_sites);
    const OneBody eta_mk = quasiparticle_annihilator(-k, q.pre, n_sites);
    // xi* eta_-k eta_k  -  xi eta_k^dag eta_-k^dag
    accumulate_quadratic(m, eta_k, eta_mk, std::conj(xi), n_sites);
    accumulate_quadratic(m, dagger(eta_mk), dagger(eta_k), -xi, n_sites);
  }
}

// integral kernel: thermodynamic-limit Fourier coefficients of the pair and
// density functions, truncated to separations d < N, resampled at the grid
void add_integral_generator(Eigen::MatrixXcd& m, const QuenchSpec& q, const SqueezeSpec& s,
                            int n_sites) {
  constexpr int kPanels = 16384;
  std::vector<cplx> pair_fourier(n_sites, cplx{0.0, 0.0});     // s_d, d = 1..N-1
  std::vector<cplx> density_fourier(n_sites, cplx{0.0, 0.0});  // a_d, d = 0..N-1
  for (int d = 1; d < n_sites; ++d) {
    pair_fourier[d] =
        (2.0 / kPi) * simpson_complex(
                          [&](double k) { return pair_coeff(k, q.pre, s) * std::sin(k * d); },
                          0.0, kPi, kPanels);
  }
  for (int d = 0; d < n_sites; ++d) {
    density_fourier[d] =
        (2.0 / kPi) *
        simpson_complex([&](double k) { return density_coeff(k, q.pre, s) * std::cos(k * d); },
                        0.0, kPi, kPanels);
  }

  const auto grid = build_grid(n_sites);
  const int dim = 1 << n_sites;
  for (double k : grid.momenta()) {
    cplx g{0.0, 0.0};
    for (int d = 1; d < n_sites; ++d) g += pair_fourier[d] * std::sin(k * d);
    cplx f = 0.5 * density_fourier[0];
    for (int d = 1; d < n_sites; ++d) f += density_fourier[d] * std::cos(k * d);

    const OneBody c_k = momentum_annihilator(k, n_sites);
    const OneBody c_mk = momentum_annihilator(-k, n_sites);
    accumulate_quadratic(m, dagger(c_mk), dagger(c_k), g, n_sites);    // g c_k^dag c_-k^dag
    accumulate_quadratic(m, c_k, c_mk, -std::conj(g), n_sites);        // -g* c_-k c_k
    accumulate_quadratic(m, c_k, dagger(c_k), f, n_sites);             // f n_k
    accumulate_quadratic(m, c_mk, dagger(c_mk), f, n_sites);           // f n_-k
    for (int col = 0; col < dim; ++col) m(col, col) -= f;
  }
}

double parity_sign(std::uint32_t s) {
  // even n_sites: prod_n sigma_n^z = (-1)^{occupied modes}
  return (std::popcount(s) & 1) ? -1.0 : 1.0;
}

Eigen::VectorXd chain_ground_state(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvectors().col(0);
}

}  // namespace

ModeFockFrame mode_fock_frame(double k, const QuenchSpec& q) {
  return ModeFockFrame{k, even_block(k, q.pre), even_block(k, q.post)};
}

std::complex<double> fock_mode_oracle(double k, const QuenchSpec& q, const SqueezeSpec& spec,
                                      double t) {
  const SqueezeSpec s = spec.canonical();
  const ModeFockFrame frame = mode_fock_frame(k, q);

  // pre-quench pair ground state (i sin th, cos th) and its occupied partner
  // (cos th, i sin th); the relative phase is fixed by the pair-creation
  // convention of the quasiparticle basis
  const double th = bogoliubov_angle(k, q.pre);
  Eigen::Vector2cd ground, partner;
  ground << cplx(0.0, std::sin(th)), cplx(std::cos(th), 0.0);
  partner << cplx(std::cos(th), 0.0), cplx(0.0, std::sin(th));

  const Eigen::Vector2cd psi =
      std::cos(s.r) * ground - std::polar(1.0, s.phi) * std::sin(s.r) * partner;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(frame.h_even_post);
  const Eigen::Vector2cd coeffs = es.eigenvectors().adjoint() * psi;
  Eigen::Vector2cd evolved;
  evolved = es.eigenvectors() *
            (Eigen::Vector2cd() << coeffs(0) * std::polar(1.0, -es.eigenvalues()(0) * t),
             coeffs(1) * std::polar(1.0, -es.eigenvalues()(1) * t))
                .finished();
  return psi.dot(evolved);  // Eigen dot conjugates the left argument
}

SpinChainFrame build_spin_chain_frame(const QuenchSpec& q, const SqueezeSpec& spec,
                                      int n_sites, PairingKernel kernel) {
  if (n_sites < 4 || n_sites > 12 || n_sites % 2 != 0) {
    throw std::invalid_argument("build_spin_chain_frame: n_sites must be even, in [4, 12]");
  }
  const SqueezeSpec s = spec.canonical();
  SpinChainFrame frame;
  frame.n_sites = n_sites;
  frame.h_pre = build_chain_hamiltonian(n_sites, q.pre);
  frame.h_post = build_chain_hamiltonian(n_sites, q.post);
  const int dim = 1 << n_sites;
  frame.squeeze_generator = Eigen::MatrixXcd::Zero(dim, dim);
  if (kernel == PairingKernel::discrete) {
    add_discrete_generator(frame.squeeze_generator, q, s, n_sites);
  } else {
    add_integral_generator(frame.squeeze_generator, q, s, n_sites);
  }
  return frame;
}

ParityReport parity_sector_check(const SpinChainFrame& frame) {
  const Eigen::VectorXd gs = chain_ground_state(frame.h_pre);
  const int dim = 1 << frame.n_sites;

  ParityReport report;
  report.ground_parity = 0.0;
  for (int i = 0; i < dim; ++i) {
    report.ground_parity += parity_sign(i) * gs(i) * gs(i);
  }

  double comm = 0.0;
  for (int j = 0; j < dim; ++j) {
    const double pj = parity_sign(j);
    for (int i = 0; i < dim; ++i) {
      const double diff = parity_sign(i) - pj;
      if (diff != 0.0) {
        comm = std::max(comm, std::abs(frame.squeeze_generator(i, j) * diff));
      }
    }
  }
  report.generator_parity_comm = comm;

  if (report.ground_parity < 0.9) {
    throw numerical_guard_error(
        "parity_sector_check: ground state not in the even fermion-parity sector");
  }
  return report;
}

RateSeries spin_ed_rate(const QuenchSpec& q, const SqueezeSpec& spec,
                        const std::vector<double>& times, int n_sites, PairingKernel kernel) {
  if (times.empty()) throw std::invalid_argument("spin_ed_rate: empty time list");
  const SqueezeSpec s = spec.canonical();
  const SpinChainFrame frame = build_spin_chain_frame(q, s, n_sites, kernel);
  parity_sector_check(frame);

  const Eigen::VectorXd gs = chain_ground_state(frame.h_pre);

  // squeeze: e^{M} = e^{iK} through the Hermitian eigendecomposition of K = -iM
  const Eigen::MatrixXcd herm = -kI * frame.squeeze_generator;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ks(herm);
  const int dim = 1 << n_sites;
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, ks.eigenvalues()(i));
  const Eigen::VectorXcd psi_s =
      ks.eigenvectors() * phases.asDiagonal() * (ks.eigenvectors().adjoint() * gs.cast<cplx>());

  // spectral weights of the squeezed state in the post-quench eigenbasis
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(frame.h_post);
  const Eigen::VectorXcd u = es.eigenvectors().transpose() * psi_s;
  Eigen::VectorXd weights(dim);
  for (int i = 0; i < dim; ++i) weights(i) = std::norm(u(i));

  RateSeries series;
  series.times = times;
  series.values.resize(times.size());
  const double norm = 2.0 / n_sites;
  for (std::size_t it = 0; it < times.size(); ++it) {
    cplx g{0.0, 0.0};
    for (int i = 0; i < dim; ++i) {
      g += weights(i) * std::polar(1.0, -es.eigenvalues()(i) * times[it]);
    }
    series.values[it] = -norm * std::log(std::max(std::abs(g), 1e-300));
  }
  series.peak_times = detect_peaks(series, 1e-3);
  return series;
}

}  // namespace xyq
