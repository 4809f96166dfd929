#include <doctest.h>

#include <cmath>

#include "indrep/momentum_ops.hpp"
#include "indrep/rng.hpp"

using namespace indrep;

namespace {

std::shared_ptr<const Grid> test_grid() {
  static auto grid = std::make_shared<Grid>(GridSpec{});
  return grid;
}

}  // namespace

TEST_CASE("generator on the reference gaussian: hand values") {
  const auto f = make_gaussian_probe(Complex(0.0), 1.0, 0);
  // B1 f = -2x |z|^2 e^{-|z|^2}: at z = 1 this is -2/e
  const auto b1f = apply_b(1, f);
  CHECK(std::abs(b1f.value(1.0, 0.0) - (-2.0 * std::exp(-1.0))) < 1e-14);
  // mirror case for B2 at z = i
  const auto b2f = apply_b(2, f);
  CHECK(std::abs(b2f.value(0.0, 1.0) - (-2.0 * std::exp(-1.0))) < 1e-14);
  // and the momentum operators are i times the generators
  const auto p1f = apply_pi(1, f);
  CHECK(std::abs(p1f.value(1.0, 0.0) - Complex(0.0, -2.0 * std::exp(-1.0))) <
        1e-14);
}

TEST_CASE("on a plateau only the multiplier survives") {
  const auto bump = make_annular_bump(1.0, 4.0, 0.5);
  const auto b1 = apply_b(1, bump);
  const double x = 2.2, y = 0.7;  // plateau point
  const double expected = -2.0 * x / (x * x + y * y);  // times f = 1
  CHECK(std::abs(b1.value(x, y) - expected) < 1e-14);
}

TEST_CASE("zero goes to zero") {
  const auto z = AnalyticTestFunction::zero();
  const auto bz = apply_b(1, z);
  CHECK(std::abs(bz.value(0.3, 0.8)) == 0.0);
  const auto pz = apply_pi(2, z);
  CHECK(std::abs(pz.value(0.3, 0.8)) == 0.0);
}

TEST_CASE("operators demand the probe class") {
  const auto plain_one = AnalyticTestFunction::plain(
      [](double, double) { return Jet::constant(Complex(1.0)); },
      [](double, double) { return Complex(1.0); },
      SupportHint{SupportKind::Unbounded, 0.0, 1e300}, 3, false);
  CHECK_THROWS_AS(apply_b(1, plain_one), UnremovablePole);
  CHECK_THROWS_AS(apply_pi(2, plain_one), UnremovablePole);
}

TEST_CASE("limit oracle converges to the generator at first order") {
  const auto f = make_gaussian_probe(Complex(0.2, -0.1), 1.1, 0);
  auto grid = test_grid();
  for (int i : {1, 2}) {
    const GridFunction exact = sample(apply_b(i, f), grid);
    double prev = 1e300;
    for (double eta : {1e-2, 5e-3, 2.5e-3}) {
      const GridFunction approx = generator_limit_oracle(i, f, eta, grid);
      double err = 0.0;
      for (size_t n = 0; n < exact.samples.size(); ++n) {
        err = std::max(err, std::abs(approx.samples[n] - exact.samples[n]));
      }
      CHECK(err < 0.75 * prev);  // roughly halves with eta
      prev = err;
    }
  }
}

TEST_CASE("limit oracle pointwise value near the hand derivative") {
  // (U(eta) f - f)/eta at z = 1 approaches -2/e within ~eta
  const auto f = make_gaussian_probe(Complex(0.0), 1.0, 0);
  GridSpec spec;
  spec.n_r = 16;
  spec.n_theta = 8;
  spec.r_min = 0.999;
  spec.r_max = 1.001;
  auto tight = std::make_shared<Grid>(spec);
  const GridFunction d = generator_limit_oracle(1, f, 1e-3, tight);
  const GridFunction exact = sample(apply_b(1, f), tight);
  // node 0 of the theta = 0 column sits at r ~ 1
  const Complex z0 = tight->node(0, 0);
  (void)z0;
  double worst = 0.0;
  for (int i = 0; i < spec.n_r; ++i) {
    worst = std::max(worst, std::abs(d.samples[tight->index(i, 0)] -
                                     exact.samples[tight->index(i, 0)]));
  }
  CHECK(worst < 5e-3);
  CHECK(std::abs(exact.samples[tight->index(0, 0)] - (-2.0 * std::exp(-1.0))) <
        2e-2);

  CHECK_THROWS_AS(generator_limit_oracle(1, f, 0.0, tight), DegenerateParameter);

  // the zero probe differences to zero at every eta
  const GridFunction z1 = generator_limit_oracle(1, AnalyticTestFunction::zero(),
                                                 1e-2, tight);
  const GridFunction z2 = generator_limit_oracle(2, AnalyticTestFunction::zero(),
                                                 1e-3, tight);
  CHECK(max_abs(z1) == 0.0);
  CHECK(max_abs(z2) == 0.0);
}

TEST_CASE("richardson combination gains an order") {
  const auto f = make_gaussian_probe(Complex(0.1, 0.3), 1.2, 0);
  auto grid = test_grid();
  const GridFunction exact = sample(apply_b(1, f), grid);
  const GridFunction d1 = generator_limit_oracle(1, f, 1e-2, grid);
  const GridFunction d2 = generator_limit_oracle(1, f, 5e-3, grid);
  const GridFunction d3 = generator_limit_oracle(1, f, 2.5e-3, grid);
  double e_big = 0.0, e_small = 0.0;
  for (size_t n = 0; n < exact.samples.size(); ++n) {
    e_big = std::max(e_big, std::abs(2.0 * d2.samples[n] - d1.samples[n] -
                                     exact.samples[n]));
    e_small = std::max(e_small, std::abs(2.0 * d3.samples[n] - d2.samples[n] -
                                         exact.samples[n]));
  }
  const double order = std::log2(e_big / e_small);
  CHECK(std::abs(order - 2.0) < 0.2);
}

TEST_CASE("generators commute") {
  auto grid = test_grid();
  CHECK(commutator_residual(make_gaussian_probe(Complex(0.4, 0.1), 1.0, 0), grid) <=
        1e-10);
  CHECK(commutator_residual(make_gaussian_probe(Complex(-0.2, 0.5), 1.2, 3), grid) <=
        1e-10);
  CHECK(commutator_residual(AnalyticTestFunction::zero(), grid) == 0.0);
}

TEST_CASE("antisymmetry and momentum symmetry under the weighted product") {
  auto grid = test_grid();
  Rng rng(83);
  for (int n = 0; n < 4; ++n) {
    const auto f = make_gaussian_probe(rng.disk(0.8), rng.uniform(1.0, 1.4),
                                       rng.uniform_int(-3, 3));
    const auto g = make_gaussian_probe(rng.disk(0.8), rng.uniform(1.0, 1.4),
                                       rng.uniform_int(-3, 3));
    const double scale =
        norm(sample(f, grid)) * norm(sample(g, grid));
    for (int i : {1, 2}) {
      CHECK(antisymmetry_residual(i, f, g, grid) <= 1e-7 * scale);
      CHECK(momentum_symmetry_residual(i, f, g, grid) <= 1e-7 * scale);
    }
  }
}

TEST_CASE("antisymmetry trivial cases") {
  auto grid = test_grid();
  const auto zero = AnalyticTestFunction::zero();
  const auto g = make_gaussian_probe(Complex(0.5, 0.0), 1.0, 0);
  CHECK(antisymmetry_residual(1, zero, zero, grid) == 0.0);

  // disjoint supports: both pairings vanish individually
  const auto inner = make_annular_bump(0.5, 1.5, 0.3);
  const auto outer = make_annular_bump(3.0, 6.0, 0.5);
  const GridFunction bi = sample(apply_b(1, inner), grid);
  const GridFunction bo = sample(apply_b(1, outer), grid);
  const GridFunction si = sample(inner, grid);
  const GridFunction so = sample(outer, grid);
  CHECK(std::abs(inner_product(bi, so)) < 1e-12);
  CHECK(std::abs(inner_product(si, bo)) < 1e-12);
}

TEST_CASE("unshifted generator is the shifted one relabeled") {
  Rng rng(89);
  const auto f = make_gaussian_probe(Complex(0.3, -0.2), 1.1, 1);
  const auto g = f.translated(Complex(1.0));  // g(z) = f(z + 1)
  for (int i : {1, 2}) {
    const auto lhs = unshifted_generator(i).apply(g);
    const auto rhs = apply_b(i, f);
    for (int n = 0; n < 100; ++n) {
      Complex zp = rng.disk(4.0);
      while (std::abs(zp + 1.0) < 0.05) {
        zp = rng.disk(4.0);
      }
      CHECK(std::abs(lhs.value(zp) - rhs.value(zp + 1.0)) <= 1e-12);
    }
  }
}

TEST_CASE("gauge form of the generators") {
  Rng rng(97);
  const auto f = make_gaussian_probe(Complex(0.2, 0.6), 1.0, 2);
  const auto b1 = apply_b(1, f);
  const auto b2 = apply_b(2, f);
  for (int n = 0; n < 200; ++n) {
    const Complex z = rng.annulus(0.05, 6.0);
    const double r2 = std::norm(z);
    const Jet psi = f.reduced_jet(z.real(), z.imag());
    CHECK(std::abs(b1.value(z) - r2 * psi.dx) <= 1e-12);
    CHECK(std::abs(b2.value(z) - r2 * psi.dy) <= 1e-12);
  }
}
