#include "indrep/coset_calculus.hpp"

#include <cmath>

namespace indrep {

GroupElement embed(const CosetLabel& label) {
  return GroupElement(1.0, 0.0, label.z, 1.0);
}

CosetActionResult coset_action(const CosetLabel& label, const GroupElement& g) {
  const Complex den = g.g12() * label.z + g.g22();
  if (std::abs(den) < kBigCellCutoff) {
    throw BigCellViolation("coset_action: label leaves the big cell");
  }
  const Complex z_out = (g.g11() * label.z + g.g21()) / den;
  // Matching entries of embed(z) * g = h * embed(z_out) gives
  // h = [[1/den, g12], [0, den]]; the product identity is then exact.
  const GroupElement h = make_h1(1.0 / den, g.g12());
  return CosetActionResult{CosetLabel{z_out}, h};
}

Complex double_coset_link(Complex z, Complex z_prime) {
  if (std::abs(z) < kBigCellCutoff || std::abs(z_prime) < kBigCellCutoff) {
    throw ZeroLabel("double_coset_link: the origin is its own double coset");
  }
  return 1.0 / z - 1.0 / z_prime;
}

DoubleCosetWitness classify_double_coset(const GroupElement& g) {
  if (std::abs(g.g21()) <= kTriangularTol) {
    return DoubleCosetWitness{DoubleCosetClass::IdentityCoset, std::nullopt,
                              std::nullopt};
  }
  // Solve h1 * d * h2 = g entrywise: the lower row fixes lambda = 1/g21 and
  // beta = g22/g21 - 1; the remaining entry matches because det g = 1.
  const Complex lambda = 1.0 / g.g21();
  const GroupElement h1 = make_h1(lambda, g.g11() - lambda);
  const GroupElement h2 = make_h2(g.g22() / g.g21() - 1.0);
  return DoubleCosetWitness{DoubleCosetClass::GenericCoset, h1, h2};
}

H1ZDecomposition decompose_h1z(const GroupElement& g) {
  if (std::abs(g.g22()) < kBigCellCutoff) {
    throw BigCellViolation("decompose_h1z: g22 numerically zero");
  }
  const Complex z = g.g21() / g.g22();
  const GroupElement h = make_h1(1.0 / g.g22(), g.g12());
  return H1ZDecomposition{h, CosetLabel{z}};
}

CocycleValue cocycle(const CosetLabel& label, const GroupElement& g) {
  const Complex den = label.z * g.g12() + g.g22();
  const double mag = std::abs(den);
  if (mag < kBigCellCutoff) {
    throw BigCellViolation("cocycle: label leaves the big cell");
  }
  const double m2 = mag * mag;
  return CocycleValue{1.0 / (m2 * m2)};
}

double numeric_jacobian(const CosetLabel& label, const GroupElement& g,
                        double step) {
  const auto moved = [&g](Complex z) {
    return coset_action(CosetLabel{z}, g).label.z;
  };
  const Complex z = label.z;
  const Complex xp = moved(z + step);
  const Complex xm = moved(z - step);
  const Complex yp = moved(z + Complex(0.0, step));
  const Complex ym = moved(z + Complex(0.0, -step));
  const double inv2h = 1.0 / (2.0 * step);
  const double dxdx = (xp.real() - xm.real()) * inv2h;
  const double dydx = (xp.imag() - xm.imag()) * inv2h;
  const double dxdy = (yp.real() - ym.real()) * inv2h;
  const double dydy = (yp.imag() - ym.imag()) * inv2h;
  return dxdx * dydy - dxdy * dydx;
}

}  // namespace indrep
