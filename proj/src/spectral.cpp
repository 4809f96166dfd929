#include "indrep/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace indrep {

AnalyticTestFunction apply_p_squared(const AnalyticTestFunction& f) {
  const AnalyticTestFunction p1 = apply_pi(1, apply_pi(1, f));
  const AnalyticTestFunction p2 = apply_pi(2, apply_pi(2, f));
  return AnalyticTestFunction::combination(Complex(1.0), p1, Complex(1.0), p2);
}

AnalyticTestFunction polar_p_squared_oracle(const AnalyticTestFunction& f) {
  if (!f.has_reduced()) {
    throw UnremovablePole("polar_p_squared_oracle: probe lacks the vanishing factor");
  }
  AnalyticTestFunction::ValueFn value = [f](double x, double y) {
    const Jet psi = f.reduced_jet(x, y);
    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    const double c = x / r;
    const double s = y / r;
    const Complex psi_r = c * psi.dx + s * psi.dy;
    const Complex psi_rr =
        c * c * psi.dxx + 2.0 * c * s * psi.dxy + s * s * psi.dyy;
    const Complex psi_tt =
        r2 * (s * s * psi.dxx - 2.0 * c * s * psi.dxy + c * c * psi.dyy) -
        r * (c * psi.dx + s * psi.dy);
    const Complex laplacian = psi_rr + psi_r / r + psi_tt / r2;
    return -r2 * laplacian;
  };
  return AnalyticTestFunction::plain(
      [value](double x, double y) { return Jet::constant(value(x, y)); }, value,
      f.support(), 0, true);
}

EigencheckResult eigencheck(double k1, double k2, std::shared_ptr<const Grid> grid) {
  const PlaneWaveState wave{k1, k2};
  const AnalyticTestFunction phi = wave.state();
  const AnalyticTestFunction pi1 = apply_pi(1, phi);
  const AnalyticTestFunction pi2 = apply_pi(2, phi);
  const AnalyticTestFunction p2 = apply_p_squared(phi);
  const double lam2 = wave.p2_eigenvalue();

  EigencheckResult res{0.0, 0.0, 0.0};
  for (int j = 0; j < grid->n_theta(); ++j) {
    for (int i = 0; i < grid->n_r(); ++i) {
      const Complex z = grid->node(i, j);
      const Complex phi_v = phi.value(z);
      res.res_pi1 = std::max(res.res_pi1, std::abs(pi1.value(z) + k1 * phi_v));
      res.res_pi2 = std::max(res.res_pi2, std::abs(pi2.value(z) + k2 * phi_v));
      res.res_p2 = std::max(res.res_p2, std::abs(p2.value(z) - lam2 * phi_v));
    }
  }
  return res;
}

void WavepacketSpec::validate() const {
  if (!(sigma_k > 0.0)) {
    throw ConfigError("WavepacketSpec: sigma_k must be positive");
  }
  if (n_k < 2) {
    throw ConfigError("WavepacketSpec: n_k must be at least 2");
  }
}

std::vector<WavepacketNode> wavepacket_nodes(const WavepacketSpec& spec) {
  spec.validate();
  const double half_span = 4.0 * spec.sigma_k;
  const auto [k1_nodes, k1_weights] =
      gauss_legendre(spec.n_k, spec.k0_1 - half_span, spec.k0_1 + half_span);
  const auto [k2_nodes, k2_weights] =
      gauss_legendre(spec.n_k, spec.k0_2 - half_span, spec.k0_2 + half_span);
  const double inv_2s2 = 1.0 / (2.0 * spec.sigma_k * spec.sigma_k);
  std::vector<WavepacketNode> nodes;
  nodes.reserve(static_cast<size_t>(spec.n_k) * spec.n_k);
  for (int a = 0; a < spec.n_k; ++a) {
    for (int b = 0; b < spec.n_k; ++b) {
      const double k1 = k1_nodes[a];
      const double k2 = k2_nodes[b];
      Complex amp;
      if (spec.amplitude) {
        amp = spec.amplitude(k1, k2);
      } else {
        const double d1 = k1 - spec.k0_1;
        const double d2 = k2 - spec.k0_2;
        amp = std::exp(-(d1 * d1 + d2 * d2) * inv_2s2);
      }
      nodes.push_back(WavepacketNode{k1, k2, amp, k1_weights[a] * k2_weights[b]});
    }
  }
  return nodes;
}

AnalyticTestFunction build_wavepacket(const WavepacketSpec& spec) {
  auto nodes = std::make_shared<const std::vector<WavepacketNode>>(
      wavepacket_nodes(spec));
  double peak = 0.0;
  for (const auto& n : *nodes) {
    peak = std::max(peak, std::abs(n.amplitude));
  }
  if (peak < 1e-300) {
    throw EmptySpectrum("build_wavepacket: all amplitudes numerically zero");
  }

  AnalyticTestFunction::JetFn psi = [nodes](double x, double y) {
    const Complex i1(0.0, 1.0);
    Jet acc;
    for (const auto& n : *nodes) {
      const Complex w = n.amplitude * n.cell *
                        std::exp(Complex(0.0, n.k1 * x + n.k2 * y));
      const Complex wk1 = i1 * n.k1 * w;
      const Complex wk2 = i1 * n.k2 * w;
      acc.v += w;
      acc.dx += wk1;
      acc.dy += wk2;
      acc.dxx += i1 * n.k1 * wk1;
      acc.dxy += i1 * n.k2 * wk1;
      acc.dyy += i1 * n.k2 * wk2;
      acc.dxxx += -n.k1 * n.k1 * wk1;
      acc.dxxy += -n.k1 * n.k2 * wk1;
      acc.dxyy += -n.k2 * n.k2 * wk1;
      acc.dyyy += -n.k2 * n.k2 * wk2;
    }
    return acc;
  };
  AnalyticTestFunction::ValueFn psi_value = [nodes](double x, double y) {
    Complex acc(0.0);
    for (const auto& n : *nodes) {
      acc += n.amplitude * n.cell * std::exp(Complex(0.0, n.k1 * x + n.k2 * y));
    }
    return acc;
  };
  // The reduced profile is a Gaussian-like envelope of width ~ 1/sigma_k.
  SupportHint support{SupportKind::GaussianDecay, 0.0, 6.0 / spec.sigma_k};
  return AnalyticTestFunction::from_reduced(std::move(psi), std::move(psi_value),
                                            support, 3);
}

double packet_transport_residual(const WavepacketSpec& spec, Complex beta,
                                 std::shared_ptr<const Grid> grid) {
  const AnalyticTestFunction phi = build_wavepacket(spec);
  const AnalyticTestFunction moved = apply_u(TranslationParameter{beta}, phi);
  const AnalyticTestFunction profile = intertwiner_v(moved);
  double worst = 0.0;
  for (int j = 0; j < grid->n_theta(); ++j) {
    for (int i = 0; i < grid->n_r(); ++i) {
      const Complex z = grid->node(i, j);
      const Complex lhs = profile.value(z);
      const Complex rhs = phi.reduced_value(z.real() + beta.real(),
                                            z.imag() + beta.imag());
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

void write_spectrum_csv(const WavepacketSpec& spec, std::ostream& out) {
  out << "k1,k2,re_a,im_a\n";
  char line[128];
  for (const auto& n : wavepacket_nodes(spec)) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", n.k1, n.k2,
                  n.amplitude.real(), n.amplitude.imag());
    out << line;
  }
}

namespace {

// J0, J1 and the first three derivatives of u -> J0(lambda u).
void bessel_j0_derivatives(double lambda, double u, double& h, double& h1,
                           double& h2, double& h3) {
  const double t = lambda * u;
  const double j0 = std::cyl_bessel_j(0, t);
  const double j1 = std::cyl_bessel_j(1, t);
  h = j0;
  h1 = -lambda * j1;
  // J0''(t) = -J0 + J1/t and J0''' = -J1''(t) = J1 + J0/t - 2 J1/t^2
  h2 = lambda * lambda * (-j0 + j1 / t);
  h3 = lambda * lambda * lambda * (j1 + j0 / t - 2.0 * j1 / (t * t));
}

}  // namespace

AnalyticTestFunction make_bessel_mode(double lambda) {
  if (!(lambda > 0.0)) {
    throw DegenerateParameter("make_bessel_mode: lambda must be positive");
  }
  AnalyticTestFunction::JetFn psi = [lambda](double x, double y) {
    const Jet r = jet_sqrt(jet_radius_sq(x, y));
    double h, h1, h2, h3;
    bessel_j0_derivatives(lambda, r.v.real(), h, h1, h2, h3);
    return jet_compose1d(h, h1, h2, h3, r);
  };
  AnalyticTestFunction::ValueFn psi_value = [lambda](double x, double y) {
    return Complex(std::cyl_bessel_j(0, lambda * std::hypot(x, y)), 0.0);
  };
  SupportHint support{SupportKind::Unbounded, 0.0,
                      std::numeric_limits<double>::infinity()};
  return AnalyticTestFunction::from_reduced(std::move(psi), std::move(psi_value),
                                            support, 3);
}

double bessel_equation_fd_residual(double lambda, double h) {
  const double a = 1.0;
  const double b = 4.0;
  const int n = static_cast<int>(std::ceil((b - a) / h)) + 1;
  std::vector<double> psi(n);
  for (int i = 0; i < n; ++i) {
    psi[i] = std::cyl_bessel_j(0, lambda * (a + i * h));
  }
  double worst = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    const double r = a + i * h;
    const double d1 = (psi[i - 2] - 8.0 * psi[i - 1] + 8.0 * psi[i + 1] -
                       psi[i + 2]) /
                      (12.0 * h);
    const double d2 = (-psi[i - 2] + 16.0 * psi[i - 1] - 30.0 * psi[i] +
                       16.0 * psi[i + 1] - psi[i + 2]) /
                      (12.0 * h * h);
    worst = std::max(worst,
                     std::abs(d2 + d1 / r + lambda * lambda * psi[i]));
  }
  return worst;
}

}  // namespace indrep
