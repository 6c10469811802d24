#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "xyq/dqpt.hpp"
#include "xyq/quench.hpp"

namespace xyq {

/// Even-parity 2x2 blocks of the pre/post Hamiltonians of one (k,-k) pair in
/// the c-fermion basis {|0_k 0_-k>, c_k^dag c_-k^dag |0_k 0_-k>}:
///   H^even = [[h + cos k, -i gamma sin k], [i gamma sin k, -(h + cos k)]],
/// with eigenvalues +- eps_k.
struct ModeFockFrame {
  double k = 0.0;
  Eigen::Matrix2cd h_even_pre;
  Eigen::Matrix2cd h_even_post;
};

/// Dense spin-chain frame for the exact-diagonalization validator: the full
/// 2^N x 2^N chain Hamiltonians (real symmetric in the sigma^z product basis)
/// and the anti-Hermitian squeeze generator in the same basis.
struct SpinChainFrame {
  int n_sites = 0;
  Eigen::MatrixXd h_pre;
  Eigen::MatrixXd h_post;
  Eigen::MatrixXcd squeeze_generator;
};

/// Result of the fermion-parity sector check on a spin-chain frame.
struct ParityReport {
  double ground_parity = 0.0;         // <ground| prod_n sigma_n^z |ground>
  double generator_parity_comm = 0.0; // max-abs entry of [generator, parity]
};

/// How the squeeze generator's real-space kernel is obtained: from the exact
/// discrete momentum sums of the N-site grid, or from the thermodynamic-limit
/// integral kernel truncated to the chain.
enum class PairingKernel { discrete, integral };

/// Even-parity pair-block Hamiltonians of mode k for both quench endpoints.
ModeFockFrame mode_fock_frame(double k, const QuenchSpec& q);

/// Brute-force per-mode Loschmidt amplitude: squeezes the analytic ground
/// pair state of the pre-quench block, evolves with the matrix exponential of
/// -i H^even_post t via eigendecomposition, and returns the overlap with the
/// unevolved squeezed state.  Validates mode_loschmidt.
std::complex<double> fock_mode_oracle(double k, const QuenchSpec& q, const SqueezeSpec& s,
                                      double t);

/// Dense spin-chain frame for n_sites in [4, 12], even.  The squeeze
/// generator is assembled from quasiparticle pair operators of the pre-quench
/// chain through the Jordan-Wigner string representation, with the pairing
/// kernel chosen by `kernel`.
SpinChainFrame build_spin_chain_frame(const QuenchSpec& q, const SqueezeSpec& s, int n_sites,
                                      PairingKernel kernel = PairingKernel::discrete);

/// Full many-body rate function -(2/N) ln |<psi^s| e^{-i H_post t} |psi^s>|
/// from dense exact diagonalization of the spin chain.  Validates the
/// momentum-space rate on the matching N-site grid.
/// Throws std::invalid_argument for odd or out-of-range n_sites and
/// numerical_guard_error if the ground state is not in the even sector.
RateSeries spin_ed_rate(const QuenchSpec& q, const SqueezeSpec& s,
                        const std::vector<double>& times, int n_sites,
                        PairingKernel kernel = PairingKernel::discrete);

/// Verifies that the frame's ground state carries even fermion parity and
/// that the squeeze generator commutes with the parity operator.
/// Throws numerical_guard_error on an odd-parity ground state (the
/// comparison against the antiperiodic momentum grid would be invalid).
ParityReport parity_sector_check(const SpinChainFrame& frame);

}  // namespace xyq
