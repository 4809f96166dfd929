#include "indrep/induced_rep.hpp"

#include <cmath>

namespace indrep {

AnalyticTestFunction apply_u(TranslationParameter beta, const AnalyticTestFunction& f) {
  if (!f.has_reduced()) {
    throw UnremovablePole("apply_u: probe lacks the |z|^2 vanishing factor");
  }
  const double bx = beta.beta.real();
  const double by = beta.beta.imag();
  AnalyticTestFunction::JetFn psi = [f, bx, by](double x, double y) {
    return f.reduced_jet(x + bx, y + by);
  };
  AnalyticTestFunction::ValueFn psi_value = [f, bx, by](double x, double y) {
    return f.reduced_value(x + bx, y + by);
  };
  SupportHint support = f.support();
  support.inner_radius = 0.0;
  if (support.kind == SupportKind::CompactAnnulus) {
    support.kind = SupportKind::GaussianDecay;  // annulus moved off-center
  }
  if (std::isfinite(support.outer_radius)) {
    support.outer_radius += std::abs(beta.beta);
  }
  return AnalyticTestFunction::from_reduced(std::move(psi), std::move(psi_value),
                                            support, f.exact_order());
}

AnalyticTestFunction induced_action_from_cocycle(TranslationParameter beta,
                                                 const AnalyticTestFunction& f) {
  if (!f.has_reduced()) {
    throw UnremovablePole("induced_action_from_cocycle: probe lacks the vanishing factor");
  }
  const Complex b = beta.beta;
  const GroupElement g = make_h2(b);
  AnalyticTestFunction::ValueFn value = [f, b, g](double x, double y) {
    // Unshifted label z' = z - 1; the double-coset calculus evaluates the
    // Radon-Nikodym factor at the coset coordinate 1/(1 + z') = 1/z.
    const Complex z(x, y);
    const CosetLabel label{1.0 / z};
    const double multiplier = std::sqrt(cocycle(label, g).value);
    return multiplier * f.value(z + b);
  };
  SupportHint support = f.support();
  if (std::isfinite(support.outer_radius)) {
    support.outer_radius += std::abs(b);
  }
  support.inner_radius = 0.0;
  return AnalyticTestFunction::plain(
      [value](double x, double y) { return Jet::constant(value(x, y)); }, value,
      support, 0, false);
}

AnalyticTestFunction intertwiner_v(const AnalyticTestFunction& f) {
  if (!f.has_reduced()) {
    throw UnremovablePole("intertwiner_v: probe lacks the |z|^2 vanishing factor");
  }
  // Divide out the weight numerically; on the probe class the quotient is the
  // stored smooth factor up to roundoff, so derivatives stay exact.
  AnalyticTestFunction::JetFn quotient = [f](double x, double y) {
    return f.jet(x, y) * jet_recip(jet_radius_sq(x, y));
  };
  AnalyticTestFunction::ValueFn quotient_value = [f](double x, double y) {
    return f.value(x, y) / (x * x + y * y);
  };
  SupportHint support = f.support();
  return AnalyticTestFunction::plain(std::move(quotient), std::move(quotient_value),
                                     support, f.exact_order(), false);
}

AnalyticTestFunction regular_translation(TranslationParameter beta,
                                         const AnalyticTestFunction& f) {
  return f.translated(beta.beta);
}

}  // namespace indrep
