#include "indrep/function_space.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace indrep {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

// ---------------------------------------------------------------------------
// Grids and quadrature
// ---------------------------------------------------------------------------

void GridSpec::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    throw ConfigError("GridSpec: need 0 < r_min < r_max");
  }
  if (n_r < 8) {
    throw ConfigError("GridSpec: n_r must be >= 8");
  }
  if (n_theta < 8 || n_theta % 2 != 0) {
    throw ConfigError("GridSpec: n_theta must be even and >= 8");
  }
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a,
                                                                   double b) {
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) {
        break;
      }
    }
    x[i - 1] = xm - xl * z;
    x[n - i] = xm + xl * z;
    const double wi = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[i - 1] = wi;
    w[n - i] = wi;
  }
  return {std::move(x), std::move(w)};
}

Grid::Grid(const GridSpec& spec) : spec_(spec) {
  spec.validate();
  auto [x, w] = gauss_legendre(spec.n_r, spec.r_min, spec.r_max);
  r_ = std::move(x);
  weighted_wr_.resize(spec.n_r);
  for (int i = 0; i < spec.n_r; ++i) {
    weighted_wr_[i] = w[i] / (r_[i] * r_[i] * r_[i]);
  }
  theta_.resize(spec.n_theta);
  w_theta_ = 2.0 * kPi / spec.n_theta;
  for (int j = 0; j < spec.n_theta; ++j) {
    theta_[j] = j * w_theta_;
  }
}

Complex Grid::node(int i, int j) const {
  return std::polar(r_[i], theta_[j]);
}

GridFunction zero_grid_function(std::shared_ptr<const Grid> grid) {
  GridFunction f;
  f.samples.assign(static_cast<size_t>(grid->n_r()) * grid->n_theta(), Complex(0.0));
  f.grid = std::move(grid);
  return f;
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.spec() == g.spec())) {
    throw SpecMismatch("inner_product: grid specs differ");
  }
  const Grid& grid = *f.grid;
  Complex acc(0.0);
  // Deterministic sequential order; theta-major like the storage.
  for (int j = 0; j < grid.n_theta(); ++j) {
    for (int i = 0; i < grid.n_r(); ++i) {
      const int idx = grid.index(i, j);
      acc += std::conj(f.samples[idx]) * g.samples[idx] * grid.weight(i);
    }
  }
  return acc;
}

double norm(const GridFunction& f) {
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const Complex& s : f.samples) {
    m = std::max(m, std::abs(s));
  }
  return m;
}

double quadrature_self_test(const GridSpec& spec) {
  auto grid = std::make_shared<Grid>(spec);
  const auto probe = make_gaussian_probe(Complex(0.0), 1.0, 0);
  const GridFunction s = sample(probe, grid);
  const double value = inner_product(s, s).real();
  const double exact = kPi / 2.0;
  return std::abs(value - exact) / exact;
}

GridSpec auto_select_resolution(GridSpec base, double tol) {
  GridSpec spec = base;
  while (quadrature_self_test(spec) > tol && spec.n_r < 512) {
    spec.n_r *= 2;
    spec.n_theta *= 2;
  }
  return spec;
}

void write_grid_csv(const GridFunction& f, std::ostream& out) {
  out << "r,theta,re,im\n";
  const Grid& grid = *f.grid;
  char line[128];
  for (int j = 0; j < grid.n_theta(); ++j) {
    for (int i = 0; i < grid.n_r(); ++i) {
      const Complex v = f.samples[grid.index(i, j)];
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", grid.r(i),
                    grid.theta(j), v.real(), v.imag());
      out << line;
    }
  }
}

// ---------------------------------------------------------------------------
// Analytic test functions
// ---------------------------------------------------------------------------

AnalyticTestFunction::AnalyticTestFunction()
    : jet_([](double, double) { return Jet{}; }),
      value_([](double, double) { return Complex(0.0); }),
      reduced_jet_([](double, double) { return Jet{}; }),
      reduced_value_(nullptr),
      support_{SupportKind::CompactAnnulus, 0.0, 0.0} {}

Complex AnalyticTestFunction::value(double x, double y) const {
  return value_ ? value_(x, y) : jet_(x, y).v;
}

Jet AnalyticTestFunction::reduced_jet(double x, double y) const {
  if (!reduced_jet_) {
    throw UnremovablePole("function has no |z|^2-factored form");
  }
  return reduced_jet_(x, y);
}

Complex AnalyticTestFunction::reduced_value(double x, double y) const {
  if (reduced_value_) {
    return reduced_value_(x, y);
  }
  return reduced_jet(x, y).v;
}

AnalyticTestFunction AnalyticTestFunction::zero() { return AnalyticTestFunction(); }

AnalyticTestFunction AnalyticTestFunction::from_reduced(JetFn psi, ValueFn psi_value,
                                                        SupportHint support,
                                                        int order) {
  AnalyticTestFunction f;
  f.reduced_jet_ = psi;
  f.reduced_value_ = psi_value;
  f.jet_ = [psi](double x, double y) { return jet_radius_sq(x, y) * psi(x, y); };
  if (psi_value) {
    f.value_ = [psi_value](double x, double y) {
      return (x * x + y * y) * psi_value(x, y);
    };
  } else {
    f.value_ = [psi](double x, double y) { return (x * x + y * y) * psi(x, y).v; };
  }
  f.order_ = order;
  f.origin_safe_ = true;
  f.support_ = support;
  return f;
}

AnalyticTestFunction AnalyticTestFunction::plain(JetFn fjet, ValueFn f_value,
                                                 SupportHint support, int order,
                                                 bool origin_safe) {
  AnalyticTestFunction f;
  f.jet_ = std::move(fjet);
  f.value_ = std::move(f_value);
  f.reduced_jet_ = nullptr;
  f.reduced_value_ = nullptr;
  f.order_ = order;
  f.origin_safe_ = origin_safe;
  f.support_ = support;
  return f;
}

AnalyticTestFunction AnalyticTestFunction::from_parts(JetFn fjet, ValueFn f_value,
                                                      JetFn psi, ValueFn psi_value,
                                                      SupportHint support, int order) {
  AnalyticTestFunction f;
  f.jet_ = std::move(fjet);
  f.value_ = std::move(f_value);
  f.reduced_jet_ = std::move(psi);
  f.reduced_value_ = std::move(psi_value);
  f.order_ = order;
  f.origin_safe_ = true;
  f.support_ = support;
  return f;
}

AnalyticTestFunction AnalyticTestFunction::translated(Complex shift) const {
  const double sx = shift.real();
  const double sy = shift.imag();
  AnalyticTestFunction g;
  const JetFn base_jet = jet_;
  g.jet_ = [base_jet, sx, sy](double x, double y) { return base_jet(x + sx, y + sy); };
  g.value_ = nullptr;
  g.reduced_jet_ = nullptr;
  g.reduced_value_ = nullptr;
  if (value_) {
    const ValueFn base_value = value_;
    g.value_ = [base_value, sx, sy](double x, double y) {
      return base_value(x + sx, y + sy);
    };
  }
  g.order_ = order_;
  g.origin_safe_ = false;  // vanishing point moved to -shift
  g.support_ = support_;
  g.support_.inner_radius = 0.0;
  if (g.support_.kind == SupportKind::CompactAnnulus) {
    g.support_.kind = SupportKind::GaussianDecay;
  }
  if (std::isfinite(g.support_.outer_radius)) {
    g.support_.outer_radius += std::abs(shift);
  }
  return g;
}

AnalyticTestFunction AnalyticTestFunction::combination(Complex a,
                                                       const AnalyticTestFunction& f,
                                                       Complex b,
                                                       const AnalyticTestFunction& g) {
  AnalyticTestFunction r;
  const JetFn fj = f.jet_;
  const JetFn gj = g.jet_;
  r.jet_ = [a, b, fj, gj](double x, double y) { return a * fj(x, y) + b * gj(x, y); };
  r.value_ = nullptr;
  r.reduced_jet_ = nullptr;
  r.reduced_value_ = nullptr;
  const ValueFn fv = f.value_;
  const ValueFn gv = g.value_;
  if (fv && gv) {
    r.value_ = [a, b, fv, gv](double x, double y) {
      return a * fv(x, y) + b * gv(x, y);
    };
  }
  if (f.reduced_jet_ && g.reduced_jet_) {
    const JetFn fr = f.reduced_jet_;
    const JetFn gr = g.reduced_jet_;
    r.reduced_jet_ = [a, b, fr, gr](double x, double y) {
      return a * fr(x, y) + b * gr(x, y);
    };
    const ValueFn frv = f.reduced_value_;
    const ValueFn grv = g.reduced_value_;
    if (frv && grv) {
      r.reduced_value_ = [a, b, frv, grv](double x, double y) {
        return a * frv(x, y) + b * grv(x, y);
      };
    }
  }
  r.order_ = std::min(f.order_, g.order_);
  r.origin_safe_ = f.origin_safe_ && g.origin_safe_;
  r.support_.kind =
      (f.support_.kind == SupportKind::Unbounded || g.support_.kind == SupportKind::Unbounded)
          ? SupportKind::Unbounded
          : ((f.support_.kind == SupportKind::GaussianDecay ||
              g.support_.kind == SupportKind::GaussianDecay)
                 ? SupportKind::GaussianDecay
                 : SupportKind::CompactAnnulus);
  r.support_.inner_radius = std::min(f.support_.inner_radius, g.support_.inner_radius);
  r.support_.outer_radius = std::max(f.support_.outer_radius, g.support_.outer_radius);
  return r;
}

AnalyticTestFunction make_gaussian_probe(Complex center, double width,
                                         int angular_index) {
  if (!(width > 0.0)) {
    throw DegenerateParameter("make_gaussian_probe: width must be positive");
  }
  const double cx = center.real();
  const double cy = center.imag();
  const double inv_w2 = 1.0 / (width * width);
  const int m = angular_index;

  AnalyticTestFunction::JetFn psi = [cx, cy, inv_w2, m](double x, double y) {
    const Jet gx = Jet::var_x(x) - Complex(cx);
    const Jet gy = Jet::var_y(y) - Complex(cy);
    Jet arg = (-inv_w2) * (gx * gx + gy * gy);
    if (m != 0) {
      arg = arg + Complex(0.0, static_cast<double>(m)) * jet_polar_angle(x, y);
    }
    return jet_exp(arg);
  };
  AnalyticTestFunction::ValueFn psi_value = [cx, cy, inv_w2, m](double x, double y) {
    const double dx = x - cx;
    const double dy = y - cy;
    Complex arg(-(dx * dx + dy * dy) * inv_w2, 0.0);
    if (m != 0) {
      arg += Complex(0.0, m * std::atan2(y, x));
    }
    return std::exp(arg);
  };
  SupportHint support{SupportKind::GaussianDecay, 0.0,
                      std::abs(center) + 5.0 * width};
  return AnalyticTestFunction::from_reduced(std::move(psi), std::move(psi_value),
                                            support, 3);
}

namespace {

// C^3 smoothstep: 0 for u <= 0, 1 for u >= 1, 35u^4 - 84u^5 + 70u^6 - 20u^7.
void smoothstep7(double u, double& s, double& s1, double& s2, double& s3) {
  if (u <= 0.0) {
    s = s1 = s2 = s3 = 0.0;
    return;
  }
  if (u >= 1.0) {
    s = 1.0;
    s1 = s2 = s3 = 0.0;
    return;
  }
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u3 * u;
  s = 35.0 * u4 - 84.0 * u4 * u + 70.0 * u4 * u2 - 20.0 * u4 * u3;
  s1 = 140.0 * u3 - 420.0 * u4 + 420.0 * u4 * u - 140.0 * u4 * u2;
  s2 = 420.0 * u2 - 1680.0 * u3 + 2100.0 * u4 - 840.0 * u4 * u;
  s3 = 840.0 * u - 5040.0 * u2 + 8400.0 * u3 - 4200.0 * u4;
}

// Bump profile and its first three radial derivatives.
void bump_profile(double r, double r_lo, double r_hi, double taper, double& b,
                  double& b1, double& b2, double& b3) {
  double up, up1, up2, up3;
  smoothstep7((r - r_lo) / taper, up, up1, up2, up3);
  double dn, dn1, dn2, dn3;
  smoothstep7((r_hi - r) / taper, dn, dn1, dn2, dn3);
  const double it = 1.0 / taper;
  const double it2 = it * it;
  // chain rule for the scaled arguments (down ramp has a sign flip per order)
  up1 *= it;
  up2 *= it2;
  up3 *= it2 * it;
  dn1 *= -it;
  dn2 *= it2;
  dn3 *= -it2 * it;
  b = up * dn;
  b1 = up1 * dn + up * dn1;
  b2 = up2 * dn + 2.0 * up1 * dn1 + up * dn2;
  b3 = up3 * dn + 3.0 * up2 * dn1 + 3.0 * up1 * dn2 + up * dn3;
}

}  // namespace

AnalyticTestFunction make_annular_bump(double r_lo, double r_hi, double taper) {
  if (!(r_lo > 0.0) || !(taper > 0.0) || !(r_lo + 2.0 * taper < r_hi)) {
    throw DegenerateParameter("make_annular_bump: need 0 < r_lo, r_lo + 2 taper < r_hi");
  }
  const double guard_lo = 0.5 * r_lo;
  const double guard_hi = r_hi + taper;

  auto radial_jet = [r_lo, r_hi, taper, guard_lo, guard_hi](double x, double y) {
    const double rr = std::hypot(x, y);
    if (rr < guard_lo || rr > guard_hi) {
      return Jet{};  // identically zero well outside the support
    }
    const Jet r = jet_sqrt(jet_radius_sq(x, y));
    double b, b1, b2, b3;
    bump_profile(rr, r_lo, r_hi, taper, b, b1, b2, b3);
    return jet_compose1d(b, b1, b2, b3, r);
  };
  AnalyticTestFunction::JetFn fjet = radial_jet;
  AnalyticTestFunction::ValueFn fvalue = [r_lo, r_hi, taper, guard_lo,
                                          guard_hi](double x, double y) {
    const double rr = std::hypot(x, y);
    if (rr < guard_lo || rr > guard_hi) {
      return Complex(0.0);
    }
    double b, b1, b2, b3;
    bump_profile(rr, r_lo, r_hi, taper, b, b1, b2, b3);
    return Complex(b, 0.0);
  };
  AnalyticTestFunction::JetFn psi = [radial_jet, guard_lo](double x, double y) {
    const double rr = std::hypot(x, y);
    if (rr < guard_lo) {
      return Jet{};
    }
    return radial_jet(x, y) * jet_recip(jet_radius_sq(x, y));
  };

  SupportHint support{SupportKind::CompactAnnulus, r_lo, r_hi};
  return AnalyticTestFunction::from_parts(std::move(fjet), std::move(fvalue),
                                          std::move(psi), nullptr, support, 3);
}

AnalyticTestFunction make_plane_wave(double k1, double k2) {
  AnalyticTestFunction::JetFn psi = [k1, k2](double x, double y) {
    const Complex e = std::exp(Complex(0.0, k1 * x + k2 * y));
    const Complex i1(0.0, 1.0);
    Jet j;
    j.v = e;
    j.dx = i1 * k1 * e;
    j.dy = i1 * k2 * e;
    j.dxx = -k1 * k1 * e;
    j.dxy = -k1 * k2 * e;
    j.dyy = -k2 * k2 * e;
    j.dxxx = -i1 * k1 * k1 * k1 * e;
    j.dxxy = -i1 * k1 * k1 * k2 * e;
    j.dxyy = -i1 * k1 * k2 * k2 * e;
    j.dyyy = -i1 * k2 * k2 * k2 * e;
    return j;
  };
  AnalyticTestFunction::ValueFn psi_value = [k1, k2](double x, double y) {
    return std::exp(Complex(0.0, k1 * x + k2 * y));
  };
  SupportHint support{SupportKind::Unbounded, 0.0,
                      std::numeric_limits<double>::infinity()};
  return AnalyticTestFunction::from_reduced(std::move(psi), std::move(psi_value),
                                            support, 3);
}

GridFunction sample(const AnalyticTestFunction& f, std::shared_ptr<const Grid> grid) {
  GridFunction out;
  out.samples.resize(static_cast<size_t>(grid->n_r()) * grid->n_theta());
  for (int j = 0; j < grid->n_theta(); ++j) {
    for (int i = 0; i < grid->n_r(); ++i) {
      const Complex z = grid->node(i, j);
      out.samples[grid->index(i, j)] = f.value(z.real(), z.imag());
    }
  }
  out.grid = std::move(grid);
  return out;
}

}  // namespace indrep
