#pragma once

// The induced unitary translation representation U(beta) in shifted
// coordinates, (U(beta) f)(z) = |z|^2 / |z + beta|^2 * f(z + beta), its
// cross-validation path assembled from the coset cocycle in unshifted
// coordinates, and the intertwiner V that carries U onto the plain
// translation (regular) representation.

#include "indrep/coset_calculus.hpp"
#include "indrep/function_space.hpp"

namespace indrep {

struct TranslationParameter {
  Complex beta;
};

/// U(beta) applied to a probe. The multiplier's pole at z = -beta is
/// cancelled analytically against the probe's quadratic vanishing factor:
/// for f = |z|^2 psi the result is |z|^2 psi(z + beta). Throws
/// UnremovablePole when the probe carries no such factor.
AnalyticTestFunction apply_u(TranslationParameter beta, const AnalyticTestFunction& f);

/// Same action assembled independently as sqrt(cocycle) x right translation
/// in unshifted coordinates (coset label 1/(1+z'), z' = z - 1), evaluated
/// through coset_calculus. Value-only; agrees with apply_u pointwise.
AnalyticTestFunction induced_action_from_cocycle(TranslationParameter beta,
                                                 const AnalyticTestFunction& f);

/// (V f)(z) = f(z) / |z|^2. Throws UnremovablePole when the probe carries no
/// quadratic vanishing factor.
AnalyticTestFunction intertwiner_v(const AnalyticTestFunction& f);

/// (T(beta) f)(z) = f(z + beta).
AnalyticTestFunction regular_translation(TranslationParameter beta,
                                         const AnalyticTestFunction& f);

}  // namespace indrep
