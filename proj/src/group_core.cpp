#include "indrep/group_core.hpp"

#include <algorithm>
#include <cmath>

namespace indrep {

namespace {

double max4(double a, double b, double c, double d) {
  return std::max(std::max(a, b), std::max(c, d));
}

}  // namespace

double minkowski_norm(const FourVector& p) {
  return p.p0 * p.p0 - p.p1 * p.p1 - p.p2 * p.p2 - p.p3 * p.p3;
}

double HermitianMomentumMatrix::hermiticity_defect() const {
  const double d11 = std::abs(m11 - std::conj(m11));
  const double d22 = std::abs(m22 - std::conj(m22));
  const double d12 = std::abs(m12 - std::conj(m21));
  return max4(d11, d22, d12, 0.0);
}

HermitianMomentumMatrix vector_to_matrix(const FourVector& p) {
  return HermitianMomentumMatrix{
      Complex(p.p0 + p.p3, 0.0),
      Complex(p.p1, p.p2),
      Complex(p.p1, -p.p2),
      Complex(p.p0 - p.p3, 0.0),
  };
}

HermitianMomentumMatrix standard_lightlike_momentum() {
  return vector_to_matrix(FourVector{1.0, 0.0, 0.0, 1.0});
}

GroupElement::GroupElement(Complex g11, Complex g12, Complex g21, Complex g22)
    : g11_(g11), g12_(g12), g21_(g21), g22_(g22) {
  const Complex d = g11 * g22 - g12 * g21;
  if (std::abs(d - 1.0) > kDetTol) {
    throw DetError("GroupElement: determinant off unity by " +
                   std::to_string(std::abs(d - 1.0)));
  }
}

GroupElement GroupElement::inverse() const {
  // det == 1, so the adjugate is the inverse.
  return GroupElement(g22_, -g12_, -g21_, g11_);
}

double GroupElement::max_norm_distance(const GroupElement& other) const {
  return max4(std::abs(g11_ - other.g11_), std::abs(g12_ - other.g12_),
              std::abs(g21_ - other.g21_), std::abs(g22_ - other.g22_));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  return GroupElement(g.g11() * h.g11() + g.g12() * h.g21(),
                      g.g11() * h.g12() + g.g12() * h.g22(),
                      g.g21() * h.g11() + g.g22() * h.g21(),
                      g.g21() * h.g12() + g.g22() * h.g22());
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h);
}

GroupElement make_h1(Complex lambda, Complex mu) {
  if (std::abs(lambda) == 0.0) {
    throw DegenerateParameter("make_h1: lambda must be nonzero");
  }
  return GroupElement(lambda, mu, 0.0, 1.0 / lambda);
}

GroupElement make_h2(Complex beta) {
  return GroupElement(1.0, beta, 0.0, 1.0);
}

GroupElement make_isotropy(double theta, Complex b) {
  const Complex phase = std::polar(1.0, theta);
  return GroupElement(phase, b, 0.0, std::conj(phase));
}

GroupElement coset_representative_d() {
  return GroupElement(1.0, 0.0, 1.0, 1.0);
}

double isotropy_residual(const GroupElement& a, const HermitianMomentumMatrix& p) {
  // A P
  const Complex t11 = a.g11() * p.m11 + a.g12() * p.m21;
  const Complex t12 = a.g11() * p.m12 + a.g12() * p.m22;
  const Complex t21 = a.g21() * p.m11 + a.g22() * p.m21;
  const Complex t22 = a.g21() * p.m12 + a.g22() * p.m22;
  // (A P) A^+
  const Complex c11 = std::conj(a.g11());
  const Complex c12 = std::conj(a.g21());
  const Complex c21 = std::conj(a.g12());
  const Complex c22 = std::conj(a.g22());
  const Complex r11 = t11 * c11 + t12 * c21;
  const Complex r12 = t11 * c12 + t12 * c22;
  const Complex r21 = t21 * c11 + t22 * c21;
  const Complex r22 = t21 * c12 + t22 * c22;
  return max4(std::abs(r11 - p.m11), std::abs(r12 - p.m12),
              std::abs(r21 - p.m21), std::abs(r22 - p.m22));
}

bool is_isotropy_element(const GroupElement& a, const HermitianMomentumMatrix& p) {
  return isotropy_residual(a, p) <= kMembershipTol;
}

bool is_in_h1(const GroupElement& g) {
  return std::abs(g.g21()) <= kMembershipTol;
}

bool is_in_h2(const GroupElement& g) {
  return std::abs(g.g21()) <= kMembershipTol &&
         std::abs(g.g11() - 1.0) <= kMembershipTol &&
         std::abs(g.g22() - 1.0) <= kMembershipTol;
}

bool is_in_isotropy(const GroupElement& g) {
  return std::abs(g.g21()) <= kMembershipTol &&
         std::abs(std::abs(g.g11()) - 1.0) <= kMembershipTol;
}

}  // namespace indrep
