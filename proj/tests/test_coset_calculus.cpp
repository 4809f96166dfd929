#include <doctest.h>

#include <cmath>

#include "indrep/coset_calculus.hpp"
#include "indrep/rng.hpp"

using namespace indrep;

TEST_CASE("embed has exact unit determinant") {
  const GroupElement z = embed(CosetLabel{Complex(3.0, -7.5)});
  CHECK(z.det() == Complex(1.0));
  CHECK(z.g11() == Complex(1.0));
  CHECK(z.g12() == Complex(0.0));
}

TEST_CASE("coset action fixed points and hand values") {
  // identity fixes every label and returns the identity in H1
  const CosetActionResult id = coset_action(CosetLabel{Complex(0.3, 1.2)},
                                            GroupElement::identity());
  CHECK(std::abs(id.label.z - Complex(0.3, 1.2)) == 0.0);
  CHECK(id.h.max_norm_distance(GroupElement::identity()) == 0.0);

  // z = 0.5 moved by the translation beta=1: 0.5/(0.5+1) = 1/3
  const CosetActionResult t = coset_action(CosetLabel{0.5}, make_h2(1.0));
  CHECK(std::abs(t.label.z - Complex(1.0 / 3.0)) < 1e-15);

  // z = 1 under the lower-triangular representative: lands on 2 with h = e
  const CosetActionResult d = coset_action(CosetLabel{1.0}, coset_representative_d());
  CHECK(std::abs(d.label.z - 2.0) < 1e-15);
  CHECK(d.h.max_norm_distance(GroupElement::identity()) < 1e-15);
}

TEST_CASE("coset action factorization identity is self-certifying") {
  Rng rng(23);
  for (int n = 0; n < 300; ++n) {
    const Complex z = rng.disk(2.0);
    const GroupElement g = rng.random_sl2();
    if (std::abs(g.g12() * z + g.g22()) < 0.05) {
      continue;
    }
    const CosetActionResult res = coset_action(CosetLabel{z}, g);
    CHECK(is_in_h1(res.h));
    const GroupElement lhs = embed(CosetLabel{z}) * g;
    const GroupElement rhs = res.h * embed(res.label);
    CHECK(lhs.max_norm_distance(rhs) < 1e-12);
  }
}

TEST_CASE("coset action rejects the coset at infinity") {
  // denominator g12 z + g22 = 0 for z = -1 under [[1,1],[0,1]]
  const GroupElement g(1.0, 1.0, 0.0, 1.0);
  CHECK_THROWS_AS(coset_action(CosetLabel{-1.0}, g), BigCellViolation);
}

TEST_CASE("double coset link") {
  CHECK(std::abs(double_coset_link(1.0, 1.0)) == 0.0);
  // z = 0.5 joined to z' = 1 by beta = 1, and 0.5/(1 - 1*0.5) = 1
  const Complex beta = double_coset_link(0.5, 1.0);
  CHECK(std::abs(beta - 1.0) < 1e-15);
  CHECK(std::abs(0.5 / (1.0 - beta * 0.5) - 1.0) < 1e-15);

  const Complex b2 = double_coset_link(Complex(0.0, 2.0), -1.0);
  CHECK(std::abs(b2 - Complex(1.0, -0.5)) < 1e-15);
  const Complex z = Complex(0.0, 2.0);
  CHECK(std::abs(z / (1.0 - b2 * z) - (-1.0)) < 1e-14);

  CHECK_THROWS_AS(double_coset_link(0.0, 1.0), ZeroLabel);
  CHECK_THROWS_AS(double_coset_link(1.0, 0.0), ZeroLabel);
}

TEST_CASE("link round trips through the label action") {
  Rng rng(29);
  for (int n = 0; n < 500; ++n) {
    const Complex z = rng.annulus(0.05, 2.0);
    const Complex z_prime = rng.annulus(0.05, 2.0);
    const Complex beta = double_coset_link(z, z_prime);
    const Complex reached = coset_action(CosetLabel{z_prime}, make_h2(beta)).label.z;
    CHECK(std::abs(reached - z) < 1e-10);
  }
}

TEST_CASE("double coset classification") {
  // the representative itself is generic
  CHECK(classify_double_coset(coset_representative_d()).tag ==
        DoubleCosetClass::GenericCoset);
  // upper triangular stays with the identity coset
  CHECK(classify_double_coset(make_h1(2.0, 1.0)).tag ==
        DoubleCosetClass::IdentityCoset);

  // generic witness re-multiplies: g = [[1,1],[1,2]] factors with h1 = e
  const GroupElement g(1.0, 1.0, 1.0, 2.0);
  const DoubleCosetWitness w = classify_double_coset(g);
  REQUIRE(w.tag == DoubleCosetClass::GenericCoset);
  REQUIRE(w.h1.has_value());
  REQUIRE(w.h2.has_value());
  CHECK(is_in_h1(*w.h1));
  CHECK(is_in_h2(*w.h2));
  const GroupElement rebuilt = (*w.h1) * coset_representative_d() * (*w.h2);
  CHECK(rebuilt.max_norm_distance(g) < 1e-10);
  CHECK(w.h1->max_norm_distance(GroupElement::identity()) < 1e-14);
  CHECK(std::abs(w.h2->g12() - 1.0) < 1e-14);
}

TEST_CASE("witness re-multiplication over random generic draws") {
  Rng rng(31);
  const GroupElement d = coset_representative_d();
  for (int n = 0; n < 300; ++n) {
    GroupElement g = rng.random_sl2();
    while (std::abs(g.g21()) < 1e-3) {
      g = rng.random_sl2();
    }
    const DoubleCosetWitness w = classify_double_coset(g);
    REQUIRE(w.tag == DoubleCosetClass::GenericCoset);
    CHECK(((*w.h1) * d * (*w.h2)).max_norm_distance(g) < 1e-10);
  }
}

TEST_CASE("H1-Z decomposition") {
  const GroupElement k(1.0, 1.0, 1.0, 2.0);  // dZ' at z' = 1
  const H1ZDecomposition dec = decompose_h1z(k);
  CHECK(std::abs(dec.z.z - 0.5) < 1e-15);
  CHECK(std::abs(dec.h.g11() - 0.5) < 1e-15);
  CHECK(std::abs(dec.h.g12() - 1.0) < 1e-15);
  CHECK(std::abs(dec.h.g22() - 2.0) < 1e-15);
  CHECK((dec.h * embed(dec.z)).max_norm_distance(k) < 1e-12);

  const H1ZDecomposition id = decompose_h1z(GroupElement::identity());
  CHECK(std::abs(id.z.z) == 0.0);
  CHECK(id.h.max_norm_distance(GroupElement::identity()) == 0.0);

  const GroupElement lower(1.0, 0.0, Complex(3.0, -1.0), 1.0);
  const H1ZDecomposition low = decompose_h1z(lower);
  CHECK(std::abs(low.z.z - Complex(3.0, -1.0)) == 0.0);
  CHECK(low.h.max_norm_distance(GroupElement::identity()) == 0.0);

  const GroupElement no_cell(0.0, 1.0, -1.0, 0.0);
  CHECK_THROWS_AS(decompose_h1z(no_cell), BigCellViolation);
}

TEST_CASE("cocycle values") {
  CHECK(cocycle(CosetLabel{Complex(0.7, -0.3)}, GroupElement::identity()).value ==
        1.0);
  CHECK(std::abs(cocycle(CosetLabel{1.0}, make_h2(1.0)).value - 0.0625) < 1e-15);
  // specialized at z = 1/(1+z'), z' = 1, beta = 2: |2/2 + 1|^-4 = 1/16
  CHECK(std::abs(cocycle(CosetLabel{0.5}, make_h2(2.0)).value - 0.0625) < 1e-15);
}

TEST_CASE("cocycle multiplicativity") {
  Rng rng(37);
  for (int n = 0; n < 300; ++n) {
    const Complex z = rng.disk(2.0);
    const GroupElement g1 = rng.random_sl2();
    const GroupElement g2 = rng.random_sl2();
    const GroupElement g12 = g1 * g2;
    if (std::abs(g1.g12() * z + g1.g22()) < 0.1 ||
        std::abs(g12.g12() * z + g12.g22()) < 0.1) {
      continue;
    }
    const Complex z1 = coset_action(CosetLabel{z}, g1).label.z;
    if (std::abs(g2.g12() * z1 + g2.g22()) < 0.1) {
      continue;
    }
    const double lhs = cocycle(CosetLabel{z}, g12).value;
    const double rhs =
        cocycle(CosetLabel{z}, g1).value * cocycle(CosetLabel{z1}, g2).value;
    CHECK(std::abs(lhs - rhs) <= 1e-9 * lhs);
  }
}

TEST_CASE("numeric jacobian cross-check") {
  // identity: area preserved up to stencil noise
  CHECK(std::abs(numeric_jacobian(CosetLabel{Complex(0.2, 0.4)},
                                  GroupElement::identity(), 1e-4) -
                 1.0) < 1e-10);

  // hand value at z = 1 under beta = 1
  CHECK(std::abs(numeric_jacobian(CosetLabel{1.0}, make_h2(1.0), 1e-4) - 0.0625) <
        1e-7);

  Rng rng(41);
  for (int n = 0; n < 50; ++n) {
    Complex z = rng.disk(1.5);
    GroupElement g = rng.random_sl2();
    while (std::abs(g.g12()) > 2.0 || std::abs(g.g12() * z + g.g22()) < 1.0) {
      z = rng.disk(1.5);
      g = rng.random_sl2();
    }
    CHECK(std::abs(numeric_jacobian(CosetLabel{z}, g, 1e-4) -
                   cocycle(CosetLabel{z}, g).value) < 1e-6);
  }
}

TEST_CASE("S_d is trivial") {
  Rng rng(43);
  const GroupElement d = coset_representative_d();
  const GroupElement d_inv = d.inverse();
  CHECK(is_in_h1(d_inv * make_h2(0.0) * d));
  for (int n = 0; n < 300; ++n) {
    const double mag = std::exp(rng.uniform(std::log(1e-6), std::log(5.0)));
    const Complex beta = std::polar(mag, rng.uniform(-3.14, 3.14));
    const GroupElement conj = d_inv * make_h2(beta) * d;
    CHECK_FALSE(is_in_h1(conj));
    // entrywise form (1+beta, beta; -beta, 1-beta)
    CHECK(std::abs(conj.g21() + beta) < 1e-12);
  }
}

TEST_CASE("Step 4 specialization of the cocycle") {
  Rng rng(47);
  for (int n = 0; n < 300; ++n) {
    const Complex z_prime = rng.disk(3.0);
    const Complex beta = rng.disk(3.0);
    if (std::abs(1.0 + z_prime) < 0.3 ||
        std::abs(1.0 + beta / (1.0 + z_prime)) < 0.4) {
      continue;
    }
    const double lhs =
        cocycle(CosetLabel{1.0 / (1.0 + z_prime)}, make_h2(beta)).value;
    const double ratio = std::abs((1.0 + z_prime + beta) / (1.0 + z_prime));
    CHECK(std::abs(lhs - std::pow(ratio, -4.0)) < 1e-10);
  }
}
