#include "indrep/momentum_ops.hpp"

#include <cmath>

namespace indrep {

AnalyticTestFunction FirstOrderOperator::apply(const AnalyticTestFunction& f) const {
  if (requires_origin_safe && !f.origin_safe()) {
    throw UnremovablePole("first-order operator applied off the probe class");
  }
  const auto mult = multiplier;
  const Direction d = dir;
  const Complex s = scale;
  AnalyticTestFunction::JetFn jet_fn = [f, mult, d, s](double x, double y) {
    const Jet fj = f.jet(x, y);
    const Jet deriv = (d == Direction::X) ? jet_shift_x(fj) : jet_shift_y(fj);
    return s * (mult(x, y) * fj + deriv);
  };
  SupportHint support = f.support();
  return AnalyticTestFunction::plain(std::move(jet_fn), nullptr, support,
                                     f.exact_order() - 1, true);
}

FirstOrderOperator shifted_generator(int i) {
  FirstOrderOperator op;
  if (i == 1) {
    op.multiplier = [](double x, double y) {
      return Complex(-2.0) * Jet::var_x(x) * jet_recip(jet_radius_sq(x, y));
    };
    op.dir = Direction::X;
  } else {
    op.multiplier = [](double x, double y) {
      return Complex(-2.0) * Jet::var_y(y) * jet_recip(jet_radius_sq(x, y));
    };
    op.dir = Direction::Y;
  }
  op.scale = Complex(1.0);
  return op;
}

FirstOrderOperator unshifted_generator(int i) {
  FirstOrderOperator op;
  // (x+1)^2 + y^2 as a jet centered at the evaluation point
  auto shifted_r2 = [](double x, double y) {
    const Jet xs = Jet::var_x(x) + Complex(1.0);
    const Jet ys = Jet::var_y(y);
    return xs * xs + ys * ys;
  };
  if (i == 1) {
    op.multiplier = [shifted_r2](double x, double y) {
      const Jet xs = Jet::var_x(x) + Complex(1.0);
      return Complex(-2.0) * xs * jet_recip(shifted_r2(x, y));
    };
    op.dir = Direction::X;
  } else {
    op.multiplier = [shifted_r2](double x, double y) {
      return Complex(-2.0) * Jet::var_y(y) * jet_recip(shifted_r2(x, y));
    };
    op.dir = Direction::Y;
  }
  op.scale = Complex(1.0);
  op.requires_origin_safe = false;
  return op;
}

FirstOrderOperator momentum_operator(int i) {
  FirstOrderOperator op = shifted_generator(i);
  op.scale = Complex(0.0, 1.0);
  return op;
}

AnalyticTestFunction apply_b(int i, const AnalyticTestFunction& f) {
  return shifted_generator(i).apply(f);
}

AnalyticTestFunction apply_pi(int i, const AnalyticTestFunction& f) {
  return momentum_operator(i).apply(f);
}

GridFunction generator_limit_oracle(int i, const AnalyticTestFunction& f, double eta,
                                    std::shared_ptr<const Grid> grid) {
  if (!(eta > 0.0)) {
    throw DegenerateParameter("generator_limit_oracle: eta must be positive");
  }
  const Complex step = (i == 1) ? Complex(eta, 0.0) : Complex(0.0, eta);
  const AnalyticTestFunction moved = apply_u(TranslationParameter{step}, f);
  GridFunction out = sample(moved, grid);
  const GridFunction base = sample(f, grid);
  const double inv = 1.0 / eta;
  for (size_t n = 0; n < out.samples.size(); ++n) {
    out.samples[n] = (out.samples[n] - base.samples[n]) * inv;
  }
  return out;
}

double commutator_residual(const AnalyticTestFunction& f,
                           std::shared_ptr<const Grid> grid) {
  const AnalyticTestFunction b12 = apply_b(1, apply_b(2, f));
  const AnalyticTestFunction b21 = apply_b(2, apply_b(1, f));
  double worst = 0.0;
  for (int j = 0; j < grid->n_theta(); ++j) {
    for (int i = 0; i < grid->n_r(); ++i) {
      const Complex z = grid->node(i, j);
      worst = std::max(worst, std::abs(b12.value(z) - b21.value(z)));
    }
  }
  return worst;
}

double antisymmetry_residual(int i, const AnalyticTestFunction& f,
                             const AnalyticTestFunction& g,
                             std::shared_ptr<const Grid> grid) {
  const GridFunction bf = sample(apply_b(i, f), grid);
  const GridFunction bg = sample(apply_b(i, g), grid);
  const GridFunction fs = sample(f, grid);
  const GridFunction gs = sample(g, grid);
  return std::abs(inner_product(bf, gs) + inner_product(fs, bg));
}

double momentum_symmetry_residual(int i, const AnalyticTestFunction& f,
                                  const AnalyticTestFunction& g,
                                  std::shared_ptr<const Grid> grid) {
  const GridFunction pf = sample(apply_pi(i, f), grid);
  const GridFunction pg = sample(apply_pi(i, g), grid);
  const GridFunction fs = sample(f, grid);
  const GridFunction gs = sample(g, grid);
  return std::abs(inner_product(pf, gs) - inner_product(fs, pg));
}

}  // namespace indrep
