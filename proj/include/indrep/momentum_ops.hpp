#pragma once

// The infinitesimal generators of the translation representation,
//   B1 = -2x/(x^2+y^2) + d/dx,   B2 = -2y/(x^2+y^2) + d/dy,
// their one-sided limit oracle from U(beta), and the momentum operators
// Pi_i = i B_i together with their algebraic residual checks.

#include "indrep/function_space.hpp"
#include "indrep/induced_rep.hpp"

namespace indrep {

enum class Direction { X, Y };

/// scale * (multiplier(x,y) * f + d f / d dir). Applications consume the
/// probe's exact partials; no finite differences are involved.
struct FirstOrderOperator {
  std::function<Jet(double, double)> multiplier;
  Direction dir = Direction::X;
  Complex scale{1.0, 0.0};
  /// Operators whose multiplier is singular at the origin demand a probe
  /// vanishing there; the unshifted forms (pole at z = -1) do not, and the
  /// caller guarantees boundedness on the evaluation set instead.
  bool requires_origin_safe = true;

  /// Throws UnremovablePole when the origin-safety demand is violated;
  /// requires exact_order >= 1.
  AnalyticTestFunction apply(const AnalyticTestFunction& f) const;
};

/// B_i in the shifted coordinates (i = 1 or 2).
FirstOrderOperator shifted_generator(int i);
/// B_i before the x+1 -> x relabeling: multiplier -2(x+1)/((x+1)^2+y^2).
FirstOrderOperator unshifted_generator(int i);
/// Pi_i = i B_i.
FirstOrderOperator momentum_operator(int i);

AnalyticTestFunction apply_b(int i, const AnalyticTestFunction& f);
AnalyticTestFunction apply_pi(int i, const AnalyticTestFunction& f);

/// (U(eta e_i) f - f) / eta sampled on the grid; e_1 = 1, e_2 = i. Converges
/// to apply_b(i, f) at first order in eta; the combination 2 D(eta/2) - D(eta)
/// at second order.
GridFunction generator_limit_oracle(int i, const AnalyticTestFunction& f, double eta,
                                    std::shared_ptr<const Grid> grid);

/// Max-norm of (B1 B2 - B2 B1) f over the grid nodes.
double commutator_residual(const AnalyticTestFunction& f,
                           std::shared_ptr<const Grid> grid);

/// |(B_i f, g) + (f, B_i g)| — a pure boundary term for probes supported
/// inside the annulus.
double antisymmetry_residual(int i, const AnalyticTestFunction& f,
                             const AnalyticTestFunction& g,
                             std::shared_ptr<const Grid> grid);

/// |(Pi_i f, g) - (f, Pi_i g)|.
double momentum_symmetry_residual(int i, const AnalyticTestFunction& f,
                                  const AnalyticTestFunction& g,
                                  std::shared_ptr<const Grid> grid);

}  // namespace indrep
