#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "indrep/rng.hpp"
#include "indrep/spectral.hpp"

using namespace indrep;

namespace {

std::shared_ptr<const Grid> test_grid() {
  static auto grid = std::make_shared<Grid>(GridSpec{});
  return grid;
}

}  // namespace

TEST_CASE("P^2 of zero is zero") {
  const auto p = apply_p_squared(AnalyticTestFunction::zero());
  CHECK(std::abs(p.value(0.7, -0.4)) == 0.0);
}

TEST_CASE("plane waves are simultaneous eigenfunctions") {
  auto grid = test_grid();

  // k = 0: the bare weight function, every residual vanishes
  const EigencheckResult zero = eigencheck(0.0, 0.0, grid);
  CHECK(zero.res_pi1 <= 1e-14);
  CHECK(zero.res_pi2 <= 1e-14);
  CHECK(zero.res_p2 <= 1e-13);

  // k = (1,0): Pi1 phi = -phi, Pi2 phi = 0, P^2 phi = phi
  const EigencheckResult unit = eigencheck(1.0, 0.0, grid);
  CHECK(unit.res_pi1 <= 1e-12);
  CHECK(unit.res_pi2 <= 1e-12);
  CHECK(unit.res_p2 <= 1e-11);
  const auto phi = PlaneWaveState{1.0, 0.0}.state();
  const auto pi1 = apply_pi(1, phi);
  const Complex at(1.3, 0.4);
  CHECK(std::abs(pi1.value(at) + phi.value(at)) < 1e-13);

  // k = (3,4): P^2 eigenvalue 25
  CHECK(PlaneWaveState{3.0, 4.0}.p2_eigenvalue() == 25.0);
  const EigencheckResult both = eigencheck(3.0, 4.0, grid);
  CHECK(both.res_p2 <= 1e-10);

  Rng rng(101);
  for (int n = 0; n < 10; ++n) {
    const Complex k = rng.disk(10.0);
    const EigencheckResult res = eigencheck(k.real(), k.imag(), grid);
    CHECK(res.res_pi1 <= 1e-10);
    CHECK(res.res_pi2 <= 1e-10);
    CHECK(res.res_p2 <= 1e-10);
  }
}

TEST_CASE("operator route equals the polar-Laplacian route") {
  auto grid = test_grid();
  Rng rng(103);
  for (int n = 0; n < 5; ++n) {
    const auto f = make_gaussian_probe(rng.disk(0.8), rng.uniform(1.0, 1.4),
                                       rng.uniform_int(-3, 3));
    const auto a = apply_p_squared(f);
    const auto b = polar_p_squared_oracle(f);
    double worst = 0.0;
    for (int j = 0; j < grid->n_theta(); ++j) {
      for (int i = 0; i < grid->n_r(); ++i) {
        const Complex z = grid->node(i, j);
        worst = std::max(worst, std::abs(a.value(z) - b.value(z)));
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("polar oracle kills a constant reduced profile") {
  // f = |z|^2 * bump: psi = bump is 1 on the plateau, so the output vanishes
  const auto bump = make_annular_bump(1.0, 4.0, 0.5);
  const auto weighted = AnalyticTestFunction::from_reduced(
      [bump](double x, double y) { return bump.jet(x, y); },
      [bump](double x, double y) { return bump.value(x, y); }, bump.support(), 3);
  const auto p = polar_p_squared_oracle(weighted);
  CHECK(std::abs(p.value(2.5, 0.0)) < 1e-12);
  CHECK(std::abs(p.value(0.0, 2.0)) < 1e-12);
  // off the plateau the bump curves and the output is nonzero
  CHECK(std::abs(p.value(1.2, 0.0)) > 1e-3);
}

TEST_CASE("P^2 commutes with the momenta on probes") {
  auto grid = test_grid();
  const auto f = make_gaussian_probe(Complex(0.3, -0.3), 1.1, 2);
  const auto p2f = apply_p_squared(f);
  for (int i : {1, 2}) {
    const auto lhs = apply_pi(i, p2f);
    const auto rhs = apply_p_squared(apply_pi(i, f));
    double worst = 0.0;
    for (int j = 0; j < grid->n_theta(); ++j) {
      for (int ir = 0; ir < grid->n_r(); ++ir) {
        const Complex z = grid->node(ir, j);
        worst = std::max(worst, std::abs(lhs.value(z) - rhs.value(z)));
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("bessel radial mode solves the reduced Helmholtz problem") {
  for (double lambda : {1.0, 2.0}) {
    CHECK(bessel_equation_fd_residual(lambda, 2.5e-3) <= 1e-8);
    const auto f = make_bessel_mode(lambda);
    const auto p = polar_p_squared_oracle(f);
    // eigenvalue lambda^2 on mid-annulus points
    Rng rng(107);
    for (int n = 0; n < 50; ++n) {
      const Complex z = rng.annulus(1.0, 4.0);
      CHECK(std::abs(p.value(z) - lambda * lambda * f.value(z)) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(make_bessel_mode(-1.0), DegenerateParameter);
}

TEST_CASE("wavepacket spectrum and nodes") {
  WavepacketSpec spec;  // defaults: k0 = (2,0), sigma_k = 0.5, n_k = 24
  const auto nodes = wavepacket_nodes(spec);
  CHECK(nodes.size() == 24u * 24u);
  // nodes stay inside the stated cutoff |k - k0|_inf <= 4 sigma
  for (const auto& n : nodes) {
    CHECK(std::abs(n.k1 - spec.k0_1) <= 4.0 * spec.sigma_k + 1e-12);
    CHECK(std::abs(n.k2 - spec.k0_2) <= 4.0 * spec.sigma_k + 1e-12);
    CHECK(n.cell > 0.0);
  }

  WavepacketSpec bad = spec;
  bad.sigma_k = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = spec;
  bad.n_k = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  WavepacketSpec empty = spec;
  empty.amplitude = [](double, double) { return Complex(0.0); };
  CHECK_THROWS_AS(build_wavepacket(empty), EmptySpectrum);
}

TEST_CASE("single-point spectrum reproduces a plane wave up to scale") {
  WavepacketSpec spec;
  spec.n_k = 8;
  // amplitude concentrated on the node nearest k0 picks out one plane wave
  const auto nodes = wavepacket_nodes(spec);
  double best = 1e300;
  double bk1 = 0.0, bk2 = 0.0;
  for (const auto& n : nodes) {
    const double d = std::hypot(n.k1 - spec.k0_1, n.k2 - spec.k0_2);
    if (d < best) {
      best = d;
      bk1 = n.k1;
      bk2 = n.k2;
    }
  }
  WavepacketSpec delta = spec;
  delta.amplitude = [bk1, bk2](double k1, double k2) {
    return (std::abs(k1 - bk1) < 1e-9 && std::abs(k2 - bk2) < 1e-9)
               ? Complex(1.0)
               : Complex(0.0);
  };
  const auto packet = build_wavepacket(delta);
  const auto wave = make_plane_wave(bk1, bk2);
  // proportional to the plane wave: compare normalized values
  const Complex z1(1.2, 0.5), z2(-0.7, 1.9);
  const Complex ratio1 = packet.value(z1) / wave.value(z1);
  const Complex ratio2 = packet.value(z2) / wave.value(z2);
  CHECK(std::abs(ratio1 - ratio2) < 1e-12 * std::abs(ratio1));
}

TEST_CASE("gaussian packet envelope has width 1/sigma_k") {
  WavepacketSpec spec;  // k0 = (2,0), sigma_k = 0.5
  const auto packet = build_wavepacket(spec);
  // |psi(x,0)| ~ e^{-sigma^2 x^2 / 2}: at x = 2 the log-ratio is -sigma^2 * 2
  const double a0 = std::abs(packet.reduced_value(0.0, 0.0));
  const double a2 = std::abs(packet.reduced_value(2.0, 0.0));
  const double measured = std::log(a2 / a0);
  const double expected = -0.25 * 4.0 / 2.0;
  CHECK(std::abs(measured - expected) < 1e-3);
  // carrier oscillates as e^{2ix}
  const Complex phase = packet.reduced_value(1.0, 0.0) /
                        std::abs(packet.reduced_value(1.0, 0.0));
  CHECK(std::abs(phase - std::exp(Complex(0.0, 2.0))) < 1e-2);
}

TEST_CASE("packet norm is finite and refinement-stable") {
  auto grid = test_grid();
  WavepacketSpec spec;
  const Complex n1 = inner_product(sample(build_wavepacket(spec), grid),
                                   sample(build_wavepacket(spec), grid));
  WavepacketSpec fine = spec;
  fine.n_k *= 2;
  const Complex n2 = inner_product(sample(build_wavepacket(fine), grid),
                                   sample(build_wavepacket(fine), grid));
  CHECK(n1.real() > 0.0);
  CHECK(std::isfinite(n1.real()));
  CHECK(std::abs(n2 - n1) <= 1e-6 * (1.0 + std::abs(n1)));
}

TEST_CASE("transport under U is a rigid shift of the reduced profile") {
  auto grid = test_grid();
  WavepacketSpec spec;
  CHECK(packet_transport_residual(spec, Complex(1.0, 0.0), grid) <= 1e-10);
  CHECK(packet_transport_residual(spec, Complex(0.5, -0.25), grid) <= 1e-10);
}

TEST_CASE("spectrum csv format") {
  WavepacketSpec spec;
  spec.n_k = 4;
  std::ostringstream out;
  write_spectrum_csv(spec, out);
  const std::string text = out.str();
  CHECK(text.rfind("k1,k2,re_a,im_a\n", 0) == 0);
  int lines = 0;
  for (char c : text) {
    lines += (c == '\n');
  }
  CHECK(lines == 1 + 4 * 4);
}
