#pragma once

// Big-cell coordinates of the right coset space H1\SL(2,C), the induced
// action on coset labels, double-coset classification, the H1-Z
// decomposition, and the positive cocycle (Radon-Nikodym factor) of the
// quasi-invariant measure.

#include <complex>
#include <optional>

#include "indrep/group_core.hpp"

namespace indrep {

/// Denominators below this are treated as the measure-zero coset at infinity.
inline constexpr double kBigCellCutoff = 1e-14;
/// |g21| at or below this classifies an element into H1 = H1 e H2.
inline constexpr double kTriangularTol = 1e-12;

/// Coordinate z of the coset representative [[1,0],[z,1]].
struct CosetLabel {
  Complex z;
};

/// [[1,0],[z,1]]; always has exact unit determinant.
GroupElement embed(const CosetLabel& label);

struct CosetActionResult {
  CosetLabel label;  // z' = (g11 z + g21) / (g12 z + g22)
  GroupElement h;    // element of H1 with embed(z) * g = h * embed(z')
};

/// Right action of g on the coset label. Throws BigCellViolation when
/// |g12 z + g22| < kBigCellCutoff.
CosetActionResult coset_action(const CosetLabel& label, const GroupElement& g);

/// The H2 parameter beta = 1/z - 1/z' linking two nonzero labels, the unique
/// one with z' = z / (1 - beta z). Throws ZeroLabel when either label is
/// numerically the origin (the origin is its own double coset).
Complex double_coset_link(Complex z, Complex z_prime);

enum class DoubleCosetClass {
  IdentityCoset,  // element lies in H1 (lower-left entry zero)
  GenericCoset,   // element factors through the representative d
};

struct DoubleCosetWitness {
  DoubleCosetClass tag = DoubleCosetClass::IdentityCoset;
  /// For GenericCoset: g = h1 * d * h2 with d = [[1,0],[1,1]].
  std::optional<GroupElement> h1;
  std::optional<GroupElement> h2;
};

DoubleCosetWitness classify_double_coset(const GroupElement& g);

struct H1ZDecomposition {
  GroupElement h;   // [[1/g22, g12], [0, g22]]
  CosetLabel z;     // g21 / g22
};

/// g = h * embed(z). Throws BigCellViolation when |g22| < kBigCellCutoff.
H1ZDecomposition decompose_h1z(const GroupElement& g);

/// Positive Radon-Nikodym factor of the label action.
struct CocycleValue {
  double value;
};

/// |z g12 + g22|^{-4}; the area Jacobian of the label action at z.
/// Throws BigCellViolation as coset_action does.
CocycleValue cocycle(const CosetLabel& label, const GroupElement& g);

/// Central-difference 2x2 Jacobian determinant of (x,y) -> (x',y') under the
/// label action; converges to cocycle() at second order in step. Requires the
/// big cell at z and at the four stencil points.
double numeric_jacobian(const CosetLabel& label, const GroupElement& g, double step);

}  // namespace indrep
