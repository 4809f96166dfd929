#pragma once

// The P^2 = Pi_1^2 + Pi_2^2 operator, its gauge/polar-Laplacian oracle,
// plane-wave generalized eigenfunctions, and wavepacket superpositions.

#include <ostream>

#include "indrep/momentum_ops.hpp"

namespace indrep {

/// Pi_1(Pi_1 f) + Pi_2(Pi_2 f) = -(B1^2 + B2^2) f. Requires exact_order >= 2.
AnalyticTestFunction apply_p_squared(const AnalyticTestFunction& f);

/// Independent route: -|z|^2 Laplacian(psi) with psi = f/|z|^2 and the
/// Laplacian written in polar coordinates, d_rr + (1/r) d_r + (1/r^2) d_tt.
/// Value-only result; agrees with apply_p_squared on the probe class.
AnalyticTestFunction polar_p_squared_oracle(const AnalyticTestFunction& f);

/// phi_k(z) = |z|^2 e^{i(k1 x + k2 y)}: simultaneous generalized
/// eigenfunction with Pi_i phi = -k_i phi and P^2 phi = (k1^2+k2^2) phi.
struct PlaneWaveState {
  double k1 = 0.0;
  double k2 = 0.0;

  AnalyticTestFunction state() const { return make_plane_wave(k1, k2); }
  double p2_eigenvalue() const { return k1 * k1 + k2 * k2; }
};

struct EigencheckResult {
  double res_pi1;
  double res_pi2;
  double res_p2;
};

/// Max-norm grid residuals of Pi_1 phi + k1 phi, Pi_2 phi + k2 phi and
/// P^2 phi - (k1^2+k2^2) phi.
EigencheckResult eigencheck(double k1, double k2, std::shared_ptr<const Grid> grid);

struct WavepacketSpec {
  double k0_1 = 2.0;
  double k0_2 = 0.0;
  double sigma_k = 0.5;
  int n_k = 24;
  /// Amplitude profile a(k); empty means the default Gaussian
  /// exp(-|k-k0|^2 / (2 sigma_k^2)).
  std::function<Complex(double, double)> amplitude;

  void validate() const;
};

struct WavepacketNode {
  double k1;
  double k2;
  Complex amplitude;  // a(k), without the cell measure
  double cell;        // tensor quadrature weight dk1 * dk2
};

/// Gauss-Legendre tensor grid over |k - k0|_inf <= 4 sigma_k; the node cells
/// carry the quadrature weights, so refinement in n_k converges fast.
std::vector<WavepacketNode> wavepacket_nodes(const WavepacketSpec& spec);

/// phi(z) = |z|^2 sum_k a(k) e^{i k.x} dk with exact partials obtained by
/// differentiating under the finite sum. Throws EmptySpectrum when every
/// amplitude is below 1e-300.
AnalyticTestFunction build_wavepacket(const WavepacketSpec& spec);

/// Max-norm over grid nodes of V(U(beta) phi)(z) - psi_packet(z + beta):
/// transport by U is a rigid shift of the reduced profile.
double packet_transport_residual(const WavepacketSpec& spec, Complex beta,
                                 std::shared_ptr<const Grid> grid);

/// CSV rows k1,k2,re_a,im_a for the packet's spectrum nodes.
void write_spectrum_csv(const WavepacketSpec& spec, std::ostream& out);

/// f = |z|^2 J0(lambda r): reduced part solves the radial Helmholtz problem.
AnalyticTestFunction make_bessel_mode(double lambda);

/// Independent radial ODE oracle: samples J0(lambda r) on a uniform r-grid in
/// [1, 4] and returns the max residual of psi'' + psi'/r + lambda^2 psi = 0
/// under 4th-order central differences with step h.
double bessel_equation_fd_residual(double lambda, double h);

}  // namespace indrep
