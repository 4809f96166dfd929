#pragma once

// Exact arithmetic for SL(2,C), the 4-vector <-> Hermitian matrix map, and
// the subgroups relevant to the light-like isotropy group: the upper
// triangular group H1, its translation subgroup H2, and IS(P) itself.

#include <complex>

#include "indrep/errors.hpp"

namespace indrep {

using Complex = std::complex<double>;

/// Absolute tolerance for membership predicates and algebraic identities.
inline constexpr double kMembershipTol = 1e-10;
/// Absolute tolerance on |det - 1| enforced at GroupElement construction.
inline constexpr double kDetTol = 1e-12;

/// Real 4-vector (p0, p1, p2, p3) in natural units.
struct FourVector {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

/// p0^2 - p1^2 - p2^2 - p3^2.
double minkowski_norm(const FourVector& p);

/// 2x2 Hermitian matrix [[p0+p3, p1+i p2], [p1-i p2, p0-p3]] representing a
/// 4-vector; its determinant equals the Minkowski norm of the source vector.
struct HermitianMomentumMatrix {
  Complex m11, m12, m21, m22;

  Complex det() const { return m11 * m22 - m12 * m21; }
  /// Max-norm deviation from (conjugate-transpose == self).
  double hermiticity_defect() const;
};

HermitianMomentumMatrix vector_to_matrix(const FourVector& p);

/// The matrix of the standard light-like momentum (1,0,0,1): diag(2,0).
HermitianMomentumMatrix standard_lightlike_momentum();

/// Element of SL(2,C). Unit determinant is enforced at construction; inputs
/// off tolerance are rejected, never renormalized.
class GroupElement {
public:
  /// Identity.
  GroupElement() : g11_(1.0), g12_(0.0), g21_(0.0), g22_(1.0) {}

  /// Throws DetError if |g11 g22 - g12 g21 - 1| > kDetTol.
  GroupElement(Complex g11, Complex g12, Complex g21, Complex g22);

  Complex g11() const { return g11_; }
  Complex g12() const { return g12_; }
  Complex g21() const { return g21_; }
  Complex g22() const { return g22_; }

  Complex det() const { return g11_ * g22_ - g12_ * g21_; }

  GroupElement inverse() const;

  /// Entrywise max-norm distance to another element.
  double max_norm_distance(const GroupElement& other) const;

  static GroupElement identity() { return GroupElement(); }

private:
  Complex g11_, g12_, g21_, g22_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement operator*(const GroupElement& g, const GroupElement& h);

/// [[lambda, mu], [0, 1/lambda]]. Throws DegenerateParameter for lambda = 0.
GroupElement make_h1(Complex lambda, Complex mu);

/// [[1, beta], [0, 1]].
GroupElement make_h2(Complex beta);

/// [[e^{i theta}, b], [0, e^{-i theta}]].
GroupElement make_isotropy(double theta, Complex b);

/// The non-identity double-coset representative [[1,0],[1,1]].
GroupElement coset_representative_d();

/// True iff A P A^+ = P within kMembershipTol on the max norm.
bool is_isotropy_element(const GroupElement& a, const HermitianMomentumMatrix& p);

/// Max-norm residual of A P A^+ - P (the quantity behind is_isotropy_element).
double isotropy_residual(const GroupElement& a, const HermitianMomentumMatrix& p);

bool is_in_h1(const GroupElement& g);
bool is_in_h2(const GroupElement& g);
/// Structural membership in IS(P): upper triangular with unimodular diagonal.
bool is_in_isotropy(const GroupElement& g);

}  // namespace indrep
