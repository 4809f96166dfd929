#include "indrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "indrep/coset_calculus.hpp"
#include "indrep/induced_rep.hpp"
#include "indrep/rng.hpp"

namespace indrep {

namespace {

constexpr double kPi = std::numbers::pi;

struct CheckContext {
  const RunConfig& config;
  std::shared_ptr<const Grid> grid;
};

AnalyticTestFunction draw_probe(Rng& rng, const ProbeFamilyConfig& pf) {
  const Complex center = rng.disk(pf.center_radius);
  const double width = rng.uniform(pf.width_min, pf.width_max);
  const int m = rng.uniform_int(-pf.m_max, pf.m_max);
  return make_gaussian_probe(center, width, m);
}

// Angular-index-zero draw. The m != 0 probes are only C^{m-1} at the origin
// (phase vortex); checks that translate them off-center or fit convergence
// orders need smooth instruments, so they draw from this subfamily.
AnalyticTestFunction draw_smooth_probe(Rng& rng, const ProbeFamilyConfig& pf) {
  const Complex center = rng.disk(pf.center_radius);
  const double width = rng.uniform(pf.width_min, pf.width_max);
  return make_gaussian_probe(center, width, 0);
}

double max_node_difference(const AnalyticTestFunction& a,
                           const AnalyticTestFunction& b, const Grid& grid) {
  double worst = 0.0;
  for (int j = 0; j < grid.n_theta(); ++j) {
    for (int i = 0; i < grid.n_r(); ++i) {
      const Complex z = grid.node(i, j);
      worst = std::max(worst, std::abs(a.value(z) - b.value(z)));
    }
  }
  return worst;
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --------------------------------------------------------------------------
// group_core checks
// --------------------------------------------------------------------------

double check_isotropy_membership(const CheckContext&, Rng& rng) {
  const HermitianMomentumMatrix p0 = standard_lightlike_momentum();
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double theta = rng.uniform(-kPi, kPi);
    const Complex b(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0));
    worst = std::max(worst, isotropy_residual(make_isotropy(theta, b), p0));
  }
  return worst;
}

double check_isotropy_rejection(const CheckContext&, Rng& rng) {
  const HermitianMomentumMatrix p0 = standard_lightlike_momentum();
  int accepted = 0;
  for (int n = 0; n < 1000; ++n) {
    double s = rng.uniform(0.3, 3.0);
    while (std::abs(s - 1.0) <= 1e-3) {
      s = rng.uniform(0.3, 3.0);
    }
    const Complex lambda = std::polar(s, rng.uniform(-kPi, kPi));
    const Complex mu = rng.disk(5.0);
    if (is_isotropy_element(make_h1(lambda, mu), p0)) {
      ++accepted;
    }
  }
  return static_cast<double>(accepted);
}

double check_group_closure(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  auto h2_defect = [](const GroupElement& g) {
    return std::max({std::abs(g.g21()), std::abs(g.g11() - 1.0),
                     std::abs(g.g22() - 1.0)});
  };
  for (int n = 0; n < 1000; ++n) {
    // H1 under product and inverse
    const GroupElement a = make_h1(rng.annulus(0.2, 3.0), rng.disk(5.0));
    const GroupElement b = make_h1(rng.annulus(0.2, 3.0), rng.disk(5.0));
    worst = std::max(worst, std::abs((a * b).g21()));
    worst = std::max(worst, std::abs(a.inverse().g21()));
    // H2 under product and inverse
    const GroupElement t1 = make_h2(rng.disk(5.0));
    const GroupElement t2 = make_h2(rng.disk(5.0));
    worst = std::max(worst, h2_defect(t1 * t2));
    worst = std::max(worst, h2_defect(t1.inverse()));
    // IS(P) under product and inverse
    const GroupElement u1 = make_isotropy(rng.uniform(-kPi, kPi), rng.disk(5.0));
    const GroupElement u2 = make_isotropy(rng.uniform(-kPi, kPi), rng.disk(5.0));
    const GroupElement u12 = u1 * u2;
    worst = std::max(worst, std::abs(u12.g21()));
    worst = std::max(worst, std::abs(std::abs(u12.g11()) - 1.0));
    const GroupElement ui = u1.inverse();
    worst = std::max(worst, std::abs(ui.g21()));
    worst = std::max(worst, std::abs(std::abs(ui.g11()) - 1.0));
    // the translation subgroup is normal in IS(P)
    worst = std::max(worst, h2_defect(u1 * t1 * u1.inverse()));
  }
  return worst;
}

double check_vector_matrix_det(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const FourVector p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                       rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    const HermitianMomentumMatrix m = vector_to_matrix(p);
    worst = std::max(worst, std::abs(m.det() - minkowski_norm(p)));
    worst = std::max(worst, m.hermiticity_defect());
  }
  return worst;
}

double check_sd_conjugation(const CheckContext&, Rng& rng) {
  const GroupElement d = coset_representative_d();
  const GroupElement d_inv = d.inverse();
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Complex beta = rng.disk(5.0);
    const GroupElement conj = d_inv * make_h2(beta) * d;
    worst = std::max({worst, std::abs(conj.g11() - (1.0 + beta)),
                      std::abs(conj.g12() - beta), std::abs(conj.g21() + beta),
                      std::abs(conj.g22() - (1.0 - beta))});
  }
  return worst;
}

// --------------------------------------------------------------------------
// coset_calculus checks
// --------------------------------------------------------------------------

double big_cell_margin(Complex z, const GroupElement& g) {
  return std::abs(g.g12() * z + g.g22());
}

double check_cocycle_identity(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    Complex z;
    GroupElement g1, g2, g12;
    while (true) {
      z = rng.disk(2.0);
      g1 = rng.random_sl2();
      g2 = rng.random_sl2();
      g12 = g1 * g2;
      if (big_cell_margin(z, g1) < 0.1 || big_cell_margin(z, g12) < 0.1) {
        continue;
      }
      const Complex z1 = coset_action(CosetLabel{z}, g1).label.z;
      if (big_cell_margin(z1, g2) < 0.1) {
        continue;
      }
      break;
    }
    const double lhs = cocycle(CosetLabel{z}, g12).value;
    const Complex z1 = coset_action(CosetLabel{z}, g1).label.z;
    const double rhs =
        cocycle(CosetLabel{z}, g1).value * cocycle(CosetLabel{z1}, g2).value;
    worst = std::max(worst, std::abs(lhs - rhs) / lhs);
  }
  return worst;
}

void draw_jacobian_point(Rng& rng, Complex& z, GroupElement& g) {
  while (true) {
    z = rng.disk(1.5);
    g = rng.random_sl2();
    if (std::abs(g.g12()) <= 2.0 && big_cell_margin(z, g) >= 1.0) {
      return;
    }
  }
}

double check_jacobian_match(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    Complex z;
    GroupElement g;
    draw_jacobian_point(rng, z, g);
    const double analytic = cocycle(CosetLabel{z}, g).value;
    const double numeric = numeric_jacobian(CosetLabel{z}, g, 1e-4);
    worst = std::max(worst, std::abs(analytic - numeric));
  }
  return worst;
}

double check_jacobian_order(const CheckContext&, Rng& rng) {
  // The label action is holomorphic, so the Cauchy-Riemann pairing cancels
  // the O(h^2) stencil term in the determinant and the measured rate is ~4.
  // The contract |numeric - analytic| <= C h^2 is verified as order >= 2.
  const std::vector<double> steps{1.6e-2, 8e-3, 4e-3};
  std::vector<Complex> zs(20);
  std::vector<GroupElement> gs(20);
  for (int n = 0; n < 20; ++n) {
    draw_jacobian_point(rng, zs[n], gs[n]);
  }
  std::vector<double> ln_step, ln_err;
  for (double s : steps) {
    double err = 0.0;
    for (int n = 0; n < 20; ++n) {
      const double analytic = cocycle(CosetLabel{zs[n]}, gs[n]).value;
      err = std::max(err,
                     std::abs(numeric_jacobian(CosetLabel{zs[n]}, gs[n], s) -
                              analytic));
    }
    ln_step.push_back(std::log(s));
    ln_err.push_back(std::log(err));
  }
  return std::max(0.0, 2.0 - lsq_slope(ln_step, ln_err));
}

double check_transitivity(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Complex z = rng.annulus(0.05, 2.0);
    const Complex z_prime = rng.annulus(0.05, 2.0);
    const Complex beta = double_coset_link(z, z_prime);
    // beta carries z' back to z through the right action
    const Complex reached = coset_action(CosetLabel{z_prime}, make_h2(beta)).label.z;
    worst = std::max(worst, std::abs(reached - z));
  }
  return worst;
}

double check_sd_triviality(const CheckContext&, Rng& rng) {
  const GroupElement d = coset_representative_d();
  const GroupElement d_inv = d.inverse();
  int violations = 0;
  // beta = 0 must conjugate into H1 (it is the identity)
  if (!is_in_h1(d_inv * make_h2(0.0) * d)) {
    ++violations;
  }
  for (int n = 0; n < 1000; ++n) {
    const double mag = std::exp(rng.uniform(std::log(1e-6), std::log(5.0)));
    const Complex beta = std::polar(mag, rng.uniform(-kPi, kPi));
    if (is_in_h1(d_inv * make_h2(beta) * d)) {
      ++violations;
    }
  }
  return static_cast<double>(violations);
}

double check_classification_agreement(const CheckContext&, Rng& rng) {
  int mismatches = 0;
  for (int n = 0; n < 1000; ++n) {
    GroupElement g;
    switch (n % 3) {
      case 0:
        g = rng.random_sl2();
        break;
      case 1:
        g = make_h1(rng.annulus(0.2, 3.0), rng.disk(3.0)) * make_h2(rng.disk(3.0));
        break;
      default:
        g = make_h1(rng.annulus(0.2, 3.0), rng.disk(3.0)) *
            coset_representative_d() * make_h2(rng.disk(3.0));
        break;
    }
    const bool triangular = is_in_h1(g);
    const auto witness = classify_double_coset(g);
    const bool classified_identity =
        witness.tag == DoubleCosetClass::IdentityCoset;
    if (triangular != classified_identity) {
      ++mismatches;
    }
  }
  return static_cast<double>(mismatches);
}

double check_factorization_witness(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  const GroupElement d = coset_representative_d();
  for (int n = 0; n < 500; ++n) {
    GroupElement g = rng.random_sl2();
    while (std::abs(g.g21()) < 1e-3) {
      g = rng.random_sl2();
    }
    const auto witness = classify_double_coset(g);
    if (witness.tag != DoubleCosetClass::GenericCoset) {
      return 1e300;  // a macroscopic lower-left entry must classify generic
    }
    const GroupElement rebuilt = (*witness.h1) * d * (*witness.h2);
    worst = std::max(worst, rebuilt.max_norm_distance(g));
  }
  return worst;
}

double check_step4_specialization(const CheckContext&, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 500; ++n) {
    Complex z_prime, beta;
    while (true) {
      z_prime = rng.disk(3.0);
      beta = rng.disk(3.0);
      if (std::abs(1.0 + z_prime) < 0.3) {
        continue;
      }
      if (std::abs(1.0 + beta / (1.0 + z_prime)) < 0.4) {
        continue;
      }
      break;
    }
    const Complex w = 1.0 / (1.0 + z_prime);
    const double lhs = cocycle(CosetLabel{w}, make_h2(beta)).value;
    const double ratio = std::abs((1.0 + z_prime + beta) / (1.0 + z_prime));
    const double rhs = 1.0 / (ratio * ratio * ratio * ratio);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// --------------------------------------------------------------------------
// function_space checks
// --------------------------------------------------------------------------

double check_reference_integral(const CheckContext& ctx, Rng&) {
  return quadrature_self_test(ctx.config.grid);
}

double check_probe_derivatives(const CheckContext& ctx, Rng& rng) {
  const double h = 1e-5;
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    for (int q = 0; q < 10; ++q) {
      const Complex z = rng.annulus(0.4, 4.0);
      const double x = z.real();
      const double y = z.imag();
      const Jet j = f.jet(x, y);
      const Jet jxp = f.jet(x + h, y), jxm = f.jet(x - h, y);
      const Jet jyp = f.jet(x, y + h), jym = f.jet(x, y - h);
      const double inv2h = 1.0 / (2.0 * h);
      // first partials against value differences
      worst = std::max(worst, std::abs((jxp.v - jxm.v) * inv2h - j.dx));
      worst = std::max(worst, std::abs((jyp.v - jym.v) * inv2h - j.dy));
      // second partials against differences of exact first partials
      worst = std::max(worst, std::abs((jxp.dx - jxm.dx) * inv2h - j.dxx));
      worst = std::max(worst, std::abs((jxp.dy - jxm.dy) * inv2h - j.dxy));
      worst = std::max(worst, std::abs((jyp.dy - jym.dy) * inv2h - j.dyy));
      // third partials against differences of exact second partials
      worst = std::max(worst, std::abs((jxp.dxx - jxm.dxx) * inv2h - j.dxxx));
      worst = std::max(worst, std::abs((jxp.dxy - jxm.dxy) * inv2h - j.dxxy));
      worst = std::max(worst, std::abs((jxp.dyy - jxm.dyy) * inv2h - j.dxyy));
      worst = std::max(worst, std::abs((jyp.dyy - jym.dyy) * inv2h - j.dyyy));
    }
  }
  return worst;
}

double check_positive_definite(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 20; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const Complex ip = inner_product(sample(f, ctx.grid), sample(f, ctx.grid));
    worst = std::max(worst, std::abs(ip.imag()));
    worst = std::max(worst, -ip.real());
    if (!(ip.real() > 0.0)) {
      return 1e300;  // a nonzero probe must have positive norm
    }
  }
  const GridFunction zero = zero_grid_function(ctx.grid);
  worst = std::max(worst, std::abs(inner_product(zero, zero)));
  return worst;
}

double check_measure_change_of_variables(const CheckContext& ctx, Rng& rng) {
  // Same product integral computed (a) as the shifted-coordinate annulus
  // quadrature and (b) as a Cartesian tensor rule in unshifted coordinates
  // with the weight |1+z'|^{-4}.
  const int n_1d = 96;
  const double span = 8.0;
  const auto [nx, wx] = gauss_legendre(n_1d, -1.0 - span, -1.0 + span);
  const auto [ny, wy] = gauss_legendre(n_1d, -span, span);
  double worst = 0.0;
  for (int p = 0; p < 5; ++p) {
    const AnalyticTestFunction f = draw_smooth_probe(rng, ctx.config.probes);
    const AnalyticTestFunction g = draw_smooth_probe(rng, ctx.config.probes);
    const Complex shifted =
        inner_product(sample(f, ctx.grid), sample(g, ctx.grid));
    Complex unshifted(0.0);
    for (int a = 0; a < n_1d; ++a) {
      for (int b = 0; b < n_1d; ++b) {
        const Complex z_prime(nx[a], ny[b]);
        const Complex w = 1.0 + z_prime;
        const double w2 = std::norm(w);
        const Complex fv = f.value(w);
        const Complex gv = g.value(w);
        unshifted += wx[a] * wy[b] * std::conj(fv) * gv / (w2 * w2);
      }
    }
    worst = std::max(worst,
                     std::abs(shifted - unshifted) / (1.0 + std::abs(shifted)));
  }
  return worst;
}

// --------------------------------------------------------------------------
// induced_rep checks
// --------------------------------------------------------------------------

double check_unitarity(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 50; ++p) {
    const AnalyticTestFunction f1 = draw_smooth_probe(rng, ctx.config.probes);
    const AnalyticTestFunction f2 = draw_smooth_probe(rng, ctx.config.probes);
    const Complex base =
        inner_product(sample(f1, ctx.grid), sample(f2, ctx.grid));
    for (int t = 0; t < 20; ++t) {
      const TranslationParameter beta{rng.disk(2.0)};
      const Complex moved = inner_product(sample(apply_u(beta, f1), ctx.grid),
                                          sample(apply_u(beta, f2), ctx.grid));
      worst = std::max(worst, std::abs(moved - base) / (1.0 + std::abs(base)));
    }
  }
  return worst;
}

double check_group_law(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 20; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const TranslationParameter b1{rng.disk(2.0)};
    const TranslationParameter b2{rng.disk(2.0)};
    const AnalyticTestFunction lhs = apply_u(b1, apply_u(b2, f));
    const AnalyticTestFunction rhs =
        apply_u(TranslationParameter{b1.beta + b2.beta}, f);
    for (int q = 0; q < 100; ++q) {
      const Complex z = rng.annulus(0.1, 6.0);
      worst = std::max(worst, std::abs(lhs.value(z) - rhs.value(z)));
    }
  }
  return worst;
}

double check_intertwiner(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    for (int t = 0; t < 5; ++t) {
      const TranslationParameter beta{rng.disk(2.0)};
      const AnalyticTestFunction lhs = intertwiner_v(apply_u(beta, f));
      const AnalyticTestFunction rhs =
          regular_translation(beta, intertwiner_v(f));
      worst = std::max(worst, max_node_difference(lhs, rhs, *ctx.grid));
    }
  }
  return worst;
}

double check_cocycle_path_agreement(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    for (int t = 0; t < 5; ++t) {
      const TranslationParameter beta{rng.disk(2.0)};
      const AnalyticTestFunction direct = apply_u(beta, f);
      const AnalyticTestFunction via_cocycle =
          induced_action_from_cocycle(beta, f);
      worst = std::max(worst, max_node_difference(direct, via_cocycle, *ctx.grid));
    }
  }
  return worst;
}

// --------------------------------------------------------------------------
// momentum_ops checks
// --------------------------------------------------------------------------

std::vector<double> limit_oracle_errors(const CheckContext& ctx,
                                        const AnalyticTestFunction& f, int i,
                                        const std::vector<double>& etas) {
  const GridFunction exact = sample(apply_b(i, f), ctx.grid);
  std::vector<double> errors;
  for (double eta : etas) {
    const GridFunction approx = generator_limit_oracle(i, f, eta, ctx.grid);
    double err = 0.0;
    for (size_t n = 0; n < exact.samples.size(); ++n) {
      err = std::max(err, std::abs(approx.samples[n] - exact.samples[n]));
    }
    errors.push_back(err);
  }
  return errors;
}

double check_generator_limit_order(const CheckContext& ctx, Rng& rng) {
  const std::vector<double> etas{1e-2, 5e-3, 2.5e-3};
  std::vector<double> ln_eta;
  for (double e : etas) {
    ln_eta.push_back(std::log(e));
  }
  double worst = 0.0;
  for (int p = 0; p < 5; ++p) {
    const AnalyticTestFunction f = draw_smooth_probe(rng, ctx.config.probes);
    for (int i = 1; i <= 2; ++i) {
      const auto errors = limit_oracle_errors(ctx, f, i, etas);
      std::vector<double> ln_err;
      for (double e : errors) {
        ln_err.push_back(std::log(e));
      }
      worst = std::max(worst, std::abs(lsq_slope(ln_eta, ln_err) - 1.0));
    }
  }
  return worst;
}

double check_richardson_order(const CheckContext& ctx, Rng& rng) {
  const std::vector<double> etas{1e-2, 5e-3, 2.5e-3};
  double worst = 0.0;
  for (int p = 0; p < 5; ++p) {
    const AnalyticTestFunction f = draw_smooth_probe(rng, ctx.config.probes);
    for (int i = 1; i <= 2; ++i) {
      const GridFunction exact = sample(apply_b(i, f), ctx.grid);
      std::vector<GridFunction> d;
      for (double eta : etas) {
        d.push_back(generator_limit_oracle(i, f, eta, ctx.grid));
      }
      double err_big = 0.0, err_small = 0.0;
      for (size_t n = 0; n < exact.samples.size(); ++n) {
        const Complex r_big = 2.0 * d[1].samples[n] - d[0].samples[n];
        const Complex r_small = 2.0 * d[2].samples[n] - d[1].samples[n];
        err_big = std::max(err_big, std::abs(r_big - exact.samples[n]));
        err_small = std::max(err_small, std::abs(r_small - exact.samples[n]));
      }
      const double slope = std::log2(err_big / err_small);
      worst = std::max(worst, std::abs(slope - 2.0));
    }
  }
  return worst;
}

double check_commutator(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 9; ++p) {
    worst = std::max(worst,
                     commutator_residual(draw_probe(rng, ctx.config.probes), ctx.grid));
  }
  // explicitly include a non-radial probe
  worst = std::max(
      worst, commutator_residual(make_gaussian_probe(Complex(0.5, 0.2), 1.0, 3),
                                 ctx.grid));
  return worst;
}

double check_antisymmetry(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const AnalyticTestFunction g = draw_probe(rng, ctx.config.probes);
    const double scale = norm(sample(f, ctx.grid)) * norm(sample(g, ctx.grid));
    for (int i = 1; i <= 2; ++i) {
      worst = std::max(worst, antisymmetry_residual(i, f, g, ctx.grid) / scale);
    }
  }
  return worst;
}

double check_pi_symmetry(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const AnalyticTestFunction g = draw_probe(rng, ctx.config.probes);
    const double scale = norm(sample(f, ctx.grid)) * norm(sample(g, ctx.grid));
    for (int i = 1; i <= 2; ++i) {
      worst = std::max(worst,
                       momentum_symmetry_residual(i, f, g, ctx.grid) / scale);
    }
  }
  return worst;
}

double check_shift_equivalence(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 5; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const AnalyticTestFunction g = f.translated(Complex(1.0));  // g(z) = f(z+1)
    for (int i = 1; i <= 2; ++i) {
      const AnalyticTestFunction lhs = unshifted_generator(i).apply(g);
      const AnalyticTestFunction rhs = apply_b(i, f);
      for (int q = 0; q < 100; ++q) {
        Complex z_prime = rng.disk(4.0);
        while (std::abs(z_prime + 1.0) < 0.05) {
          z_prime = rng.disk(4.0);
        }
        const Complex shifted_point = z_prime + 1.0;
        worst = std::max(worst,
                         std::abs(lhs.value(z_prime) - rhs.value(shifted_point)));
      }
    }
  }
  return worst;
}

double check_gauge_form(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const AnalyticTestFunction b1 = apply_b(1, f);
    const AnalyticTestFunction b2 = apply_b(2, f);
    for (int q = 0; q < 200; ++q) {
      const Complex z = rng.annulus(0.05, 6.0);
      const double r2 = std::norm(z);
      const Jet psi = f.reduced_jet(z.real(), z.imag());
      worst = std::max(worst, std::abs(b1.value(z) - r2 * psi.dx));
      worst = std::max(worst, std::abs(b2.value(z) - r2 * psi.dy));
    }
  }
  return worst;
}

// --------------------------------------------------------------------------
// spectral checks
// --------------------------------------------------------------------------

double check_p2_oracle_match(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 20; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    worst = std::max(worst, max_node_difference(apply_p_squared(f),
                                                polar_p_squared_oracle(f),
                                                *ctx.grid));
  }
  return worst;
}

double check_p2_pi_commute(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const AnalyticTestFunction f = draw_probe(rng, ctx.config.probes);
    const AnalyticTestFunction p2f = apply_p_squared(f);
    for (int i = 1; i <= 2; ++i) {
      const AnalyticTestFunction lhs = apply_pi(i, p2f);
      const AnalyticTestFunction rhs = apply_p_squared(apply_pi(i, f));
      worst = std::max(worst, max_node_difference(lhs, rhs, *ctx.grid));
    }
  }
  return worst;
}

double check_eigen_residuals(const CheckContext& ctx, Rng& rng) {
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const Complex k = rng.disk(10.0);
    const EigencheckResult res = eigencheck(k.real(), k.imag(), ctx.grid);
    worst = std::max({worst, res.res_pi1, res.res_pi2, res.res_p2});
  }
  return worst;
}

double check_bessel_mode(const CheckContext& ctx, Rng&) {
  double worst = 0.0;
  for (double lambda : {1.0, 2.0}) {
    worst = std::max(worst, bessel_equation_fd_residual(lambda, 2.5e-3));
    // polar oracle against the analytic eigenvalue on mid-annulus nodes
    const AnalyticTestFunction f = make_bessel_mode(lambda);
    const AnalyticTestFunction p2f = polar_p_squared_oracle(f);
    const Grid& grid = *ctx.grid;
    for (int j = 0; j < grid.n_theta(); ++j) {
      for (int i = 0; i < grid.n_r(); ++i) {
        if (grid.r(i) < 1.0 || grid.r(i) > 4.0) {
          continue;
        }
        const Complex z = grid.node(i, j);
        worst = std::max(worst, std::abs(p2f.value(z) -
                                         lambda * lambda * f.value(z)));
      }
    }
  }
  return worst;
}

double check_packet_transport(const CheckContext& ctx, Rng&) {
  double worst = 0.0;
  for (const Complex beta : {Complex(1.0, 0.0), Complex(0.5, -0.25)}) {
    worst = std::max(worst,
                     packet_transport_residual(ctx.config.packet, beta, ctx.grid));
  }
  return worst;
}

double check_packet_norm_stability(const CheckContext& ctx, Rng&) {
  WavepacketSpec a = ctx.config.packet;
  WavepacketSpec b = a;
  b.k0_1 += 0.3;
  b.k0_2 -= 0.2;
  WavepacketSpec a_fine = a;
  a_fine.n_k *= 2;
  WavepacketSpec b_fine = b;
  b_fine.n_k *= 2;

  const GridFunction fa = sample(build_wavepacket(a), ctx.grid);
  const GridFunction fb = sample(build_wavepacket(b), ctx.grid);
  const GridFunction fa2 = sample(build_wavepacket(a_fine), ctx.grid);
  const GridFunction fb2 = sample(build_wavepacket(b_fine), ctx.grid);

  const Complex cross = inner_product(fa, fb);
  const Complex cross_fine = inner_product(fa2, fb2);
  const Complex norm_a = inner_product(fa, fa);
  const Complex norm_a_fine = inner_product(fa2, fa2);

  double worst = std::abs(cross - std::conj(inner_product(fb, fa)));
  worst = std::max(worst,
                   std::abs(cross_fine - cross) / (1.0 + std::abs(cross)));
  worst = std::max(worst,
                   std::abs(norm_a_fine - norm_a) / (1.0 + std::abs(norm_a)));

  // spectral mass sum |a(k)|^2 dk is refinement-stable as well
  auto mass = [](const WavepacketSpec& spec) {
    double m = 0.0;
    for (const auto& node : wavepacket_nodes(spec)) {
      m += std::norm(node.amplitude) * node.cell;
    }
    return m;
  };
  const double m_coarse = mass(a);
  const double m_fine = mass(a_fine);
  worst = std::max(worst, std::abs(m_fine - m_coarse) / (1.0 + m_coarse));
  return worst;
}

// --------------------------------------------------------------------------
// registry
// --------------------------------------------------------------------------

using CheckFn = double (*)(const CheckContext&, Rng&);

struct CheckDef {
  const char* id;
  const char* anchor;
  double tolerance;
  CheckFn fn;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"group.isotropy_membership", "Eq.3 isotropy APA+=P", 1e-10,
       check_isotropy_membership},
      {"group.isotropy_rejection", "Eq.3 characterization |a|^2=1, c=0", 0.5,
       check_isotropy_rejection},
      {"group.closure", "Eq.4/Eq.6 subgroup closure", 1e-10, check_group_closure},
      {"group.vector_matrix_det", "Eq.2 det equals Minkowski norm", 1e-10,
       check_vector_matrix_det},
      {"group.sd_conjugation", "Step 2 d^-1 H2 d", 1e-12, check_sd_conjugation},
      {"coset.cocycle_identity", "Eq.14 cocycle multiplicativity", 1e-9,
       check_cocycle_identity},
      {"coset.jacobian_match", "Eq.13 vs Eq.14 area Jacobian", 1e-6,
       check_jacobian_match},
      {"coset.jacobian_order", "Eq.13 convergence at least second order", 0.35,
       check_jacobian_order},
      {"coset.transitivity", "Eq.9 transitivity on C minus 0", 1e-10,
       check_transitivity},
      {"coset.sd_triviality", "Step 2 S_d = {e}", 0.5, check_sd_triviality},
      {"coset.classification_agreement", "Step 1 classification vs membership",
       0.5, check_classification_agreement},
      {"coset.factorization_witness", "Step 1 g = h1 d h2", 1e-10,
       check_factorization_witness},
      {"coset.step4_specialization", "Eq.16 cocycle on H2/S_d", 1e-10,
       check_step4_specialization},
      {"space.reference_integral", "Eq.23 reference integral pi/2", 1e-8,
       check_reference_integral},
      {"space.probe_derivatives", "probe exact partials vs finite differences",
       1e-6, check_probe_derivatives},
      {"space.positive_definite", "Eq.23 positive definiteness", 1e-12,
       check_positive_definite},
      {"space.measure_change_of_variables", "Step 7 dxdy = dx'dy'/|1+z'|^4",
       1e-7, check_measure_change_of_variables},
      {"rep.unitarity", "Eq.23 unitarity", 1e-7, check_unitarity},
      {"rep.group_law", "Eq.18 group law", 1e-12, check_group_law},
      {"rep.intertwiner", "Eq.10 regular representation of H2", 1e-12,
       check_intertwiner},
      {"rep.cocycle_path_agreement", "Eq.17 vs Eq.18", 1e-12,
       check_cocycle_path_agreement},
      {"ops.generator_limit_order", "Eq.19 limit order one", 0.1,
       check_generator_limit_order},
      {"ops.richardson_order", "Eq.19 Richardson order two", 0.2,
       check_richardson_order},
      {"ops.commutator", "[B1,B2] = 0", 1e-10, check_commutator},
      {"ops.antisymmetry", "Step 7 (B_i f,g) = -(f,B_i g)", 1e-7,
       check_antisymmetry},
      {"ops.pi_symmetry", "Eq.24 momentum symmetry", 1e-7, check_pi_symmetry},
      {"ops.shift_equivalence", "Eqs.20-21 vs Eq.22 relabeling", 1e-12,
       check_shift_equivalence},
      {"ops.gauge_form", "B_i f = |z|^2 d_i(f/|z|^2)", 1e-12, check_gauge_form},
      {"spectral.p2_oracle_match", "Eq.25 vs polar Laplacian route", 1e-9,
       check_p2_oracle_match},
      {"spectral.p2_pi_commute", "[P^2,Pi_i] = 0", 1e-9, check_p2_pi_commute},
      {"spectral.eigen_residuals", "Eq.26 P^2 phi = lambda^2 phi", 1e-10,
       check_eigen_residuals},
      {"spectral.bessel_mode", "Eq.26 radial Helmholtz mode", 1e-8,
       check_bessel_mode},
      {"spectral.packet_transport", "superposition transport by U(beta)", 1e-10,
       check_packet_transport},
      {"spectral.packet_norm_stability", "superposition norm refinement", 1e-6,
       check_packet_norm_stability},
  };
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& def : registry()) {
    if (id == def.id) {
      return &def;
    }
  }
  return nullptr;
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["grid"] = {{"r_min", config.grid.r_min},
               {"r_max", config.grid.r_max},
               {"n_r", config.grid.n_r},
               {"n_theta", config.grid.n_theta}};
  j["seed"] = config.seed;
  nlohmann::ordered_json tols = nlohmann::ordered_json::object();
  for (const auto& [id, tol] : config.tolerance_overrides) {
    tols[id] = tol;
  }
  j["tolerances"] = tols;
  j["probes"] = {{"count", config.probes.count},
                 {"width_min", config.probes.width_min},
                 {"width_max", config.probes.width_max},
                 {"center_radius", config.probes.center_radius},
                 {"m_max", config.probes.m_max}};
  j["packet"] = {{"k0", {config.packet.k0_1, config.packet.k0_2}},
                 {"sigma_k", config.packet.sigma_k},
                 {"n_k", config.packet.n_k}};
  j["out_dir"] = config.out_dir;
  if (config.checks.has_value()) {
    j["checks"] = *config.checks;
  }
  return j;
}

}  // namespace

void ProbeFamilyConfig::validate() const {
  if (count < 1) {
    throw ConfigError("probes.count must be at least 1");
  }
  if (!(width_min > 0.0) || !(width_max >= width_min)) {
    throw ConfigError("probes: need 0 < width_min <= width_max");
  }
  if (!(center_radius >= 0.0)) {
    throw ConfigError("probes.center_radius must be nonnegative");
  }
  if (m_max < 0) {
    throw ConfigError("probes.m_max must be nonnegative");
  }
}

void RunConfig::validate() const {
  grid.validate();
  probes.validate();
  packet.validate();
  for (const auto& [id, tol] : tolerance_overrides) {
    if (find_check(id) == nullptr) {
      throw ConfigError("unknown check id in tolerances: " + id);
    }
    if (!(tol > 0.0)) {
      throw ConfigError("tolerance for " + id + " must be positive");
    }
  }
  if (checks.has_value()) {
    for (const std::string& id : *checks) {
      if (find_check(id) == nullptr) {
        throw ConfigError("unknown check id: " + id);
      }
    }
  }
  if (out_dir.empty()) {
    throw ConfigError("out_dir must not be empty");
  }
}

std::vector<std::string> registered_check_ids() {
  std::vector<std::string> ids;
  for (const CheckDef& def : registry()) {
    ids.push_back(def.id);
  }
  return ids;
}

double default_tolerance(const std::string& check_id) {
  const CheckDef* def = find_check(check_id);
  if (def == nullptr) {
    throw ConfigError("unknown check id: " + check_id);
  }
  return def->tolerance;
}

std::string check_anchor(const std::string& check_id) {
  const CheckDef* def = find_check(check_id);
  if (def == nullptr) {
    throw ConfigError("unknown check id: " + check_id);
  }
  return def->anchor;
}

std::string config_digest(const RunConfig& config) {
  const std::string canonical = config_to_json(config).dump();
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));
  return buf;
}

VerificationReport run_verification(const RunConfig& config) {
  config.validate();

  VerificationReport report;
  report.seed = config.seed;
  report.config_digest = config_digest(config);

  CheckContext ctx{config, std::make_shared<Grid>(config.grid)};

  for (const CheckDef& def : registry()) {
    if (config.checks.has_value()) {
      const auto& wanted = *config.checks;
      if (std::find(wanted.begin(), wanted.end(), def.id) == wanted.end()) {
        continue;
      }
    }
    double tolerance = def.tolerance;
    if (auto it = config.tolerance_overrides.find(def.id);
        it != config.tolerance_overrides.end()) {
      tolerance = it->second;
    }
    Rng rng(config.seed, def.id);
    const double residual = def.fn(ctx, rng);
    const bool pass = residual <= tolerance;
    report.records.push_back(CheckRecord{def.id, def.anchor, tolerance, residual, pass});
  }

  report.total = static_cast<int>(report.records.size());
  for (const CheckRecord& rec : report.records) {
    if (rec.pass) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["config_digest"] = report.config_digest;
  j["total"] = report.total;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& rec : report.records) {
    checks.push_back({{"check_id", rec.check_id},
                      {"paper_anchor", rec.paper_anchor},
                      {"tolerance", rec.tolerance},
                      {"residual", rec.residual},
                      {"pass", rec.pass}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

namespace {

void reject_unknown_keys(const nlohmann::json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  RunConfig config;
  try {
    reject_unknown_keys(
        j, {"grid", "seed", "tolerances", "probes", "packet", "out_dir", "checks"},
        "config");
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      reject_unknown_keys(g, {"r_min", "r_max", "n_r", "n_theta"}, "grid");
      config.grid.r_min = g.value("r_min", config.grid.r_min);
      config.grid.r_max = g.value("r_max", config.grid.r_max);
      config.grid.n_r = g.value("n_r", config.grid.n_r);
      config.grid.n_theta = g.value("n_theta", config.grid.n_theta);
    }
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) {
        throw ConfigError("seed must be an unsigned 64-bit integer");
      }
      config.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerances")) {
      for (auto it = j.at("tolerances").begin(); it != j.at("tolerances").end();
           ++it) {
        config.tolerance_overrides[it.key()] = it.value().get<double>();
      }
    }
    if (j.contains("probes")) {
      const auto& p = j.at("probes");
      reject_unknown_keys(
          p, {"count", "width_min", "width_max", "center_radius", "m_max"},
          "probes");
      config.probes.count = p.value("count", config.probes.count);
      config.probes.width_min = p.value("width_min", config.probes.width_min);
      config.probes.width_max = p.value("width_max", config.probes.width_max);
      config.probes.center_radius =
          p.value("center_radius", config.probes.center_radius);
      config.probes.m_max = p.value("m_max", config.probes.m_max);
    }
    if (j.contains("packet")) {
      const auto& p = j.at("packet");
      reject_unknown_keys(p, {"k0", "sigma_k", "n_k"}, "packet");
      if (p.contains("k0")) {
        const auto& k0 = p.at("k0");
        if (!k0.is_array() || k0.size() != 2) {
          throw ConfigError("packet.k0 must be an array of two numbers");
        }
        config.packet.k0_1 = k0.at(0).get<double>();
        config.packet.k0_2 = k0.at(1).get<double>();
      }
      config.packet.sigma_k = p.value("sigma_k", config.packet.sigma_k);
      config.packet.n_k = p.value("n_k", config.packet.n_k);
    }
    if (j.contains("out_dir")) {
      config.out_dir = j.at("out_dir").get<std::string>();
    }
    if (j.contains("checks")) {
      config.checks = j.at("checks").get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  config.validate();
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace indrep
