#pragma once

// The concrete Hilbert space: polar-annulus grids with the weighted product
// (f1, f2) = integral conj(f1) f2 dx dy / |z|^4, plus the analytic
// test-function family the operator checks run on.

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "indrep/errors.hpp"
#include "indrep/jet.hpp"

namespace indrep {

// ---------------------------------------------------------------------------
// Grids and quadrature
// ---------------------------------------------------------------------------

enum class QuadratureRule {
  GaussLegendreRadialTrapezoidAngular,
};

struct GridSpec {
  double r_min = 1e-9;
  double r_max = 8.0;
  int n_r = 64;
  int n_theta = 64;
  QuadratureRule rule = QuadratureRule::GaussLegendreRadialTrapezoidAngular;

  /// Throws ConfigError unless 0 < r_min < r_max, n_r >= 8, n_theta >= 8 even.
  void validate() const;

  bool operator==(const GridSpec& other) const {
    return r_min == other.r_min && r_max == other.r_max && n_r == other.n_r &&
           n_theta == other.n_theta && rule == other.rule;
  }
};

/// Gauss-Legendre nodes and weights on [a, b], Newton iteration on the
/// Legendre recurrence.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a,
                                                                   double b);

/// Precomputed nodes and weights of a GridSpec. The radial weights absorb the
/// r^{-3} factor of the measure written in polar coordinates, so quadrature
/// sums are plain weighted sums of samples.
class Grid {
public:
  explicit Grid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  int n_r() const { return spec_.n_r; }
  int n_theta() const { return spec_.n_theta; }

  double r(int i) const { return r_[i]; }
  double theta(int j) const { return theta_[j]; }
  /// Quadrature weight of node (i, j) including the measure factor r^{-3}.
  double weight(int i) const { return weighted_wr_[i] * w_theta_; }

  /// Cartesian coordinates of node (i, j).
  Complex node(int i, int j) const;

  /// Node index in theta-major storage order.
  int index(int i, int j) const { return j * spec_.n_r + i; }

private:
  GridSpec spec_;
  std::vector<double> r_;
  std::vector<double> weighted_wr_;  // GL weight times r^{-3}
  std::vector<double> theta_;
  double w_theta_;
};

/// Complex samples of a function at the nodes of a Grid, theta-major order.
struct GridFunction {
  std::shared_ptr<const Grid> grid;
  std::vector<Complex> samples;

  const GridSpec& spec() const { return grid->spec(); }
};

GridFunction zero_grid_function(std::shared_ptr<const Grid> grid);

/// Quadrature approximation of (f, g); conjugate-symmetric by construction.
/// Throws SpecMismatch when the two functions live on different grids.
Complex inner_product(const GridFunction& f, const GridFunction& g);

double norm(const GridFunction& f);

/// Max-norm of the sample vector.
double max_abs(const GridFunction& f);

/// Relative error of the quadrature against the closed form (f, f) = pi/2
/// for f = |z|^2 e^{-|z|^2}.
double quadrature_self_test(const GridSpec& spec);

/// Smallest power-of-two refinement of `base` whose self-test error meets
/// `tol` (resolution capped at 512).
GridSpec auto_select_resolution(GridSpec base, double tol);

/// CSV rows r,theta,re,im in theta-major node order, preceded by a header.
void write_grid_csv(const GridFunction& f, std::ostream& out);

// ---------------------------------------------------------------------------
// Analytic test functions
// ---------------------------------------------------------------------------

enum class SupportKind {
  GaussianDecay,    // negligible outside outer_radius
  CompactAnnulus,   // identically zero outside [inner_radius, outer_radius]
  Unbounded,        // no decay (plane waves)
};

struct SupportHint {
  SupportKind kind = SupportKind::Unbounded;
  double inner_radius = 0.0;
  double outer_radius = std::numeric_limits<double>::infinity();
};

/// Complex-valued function on C with exact partial derivatives up to
/// exact_order(), carried as jets. Probes built by the factories below also
/// carry their reduced part psi = f / |z|^2, which is what makes the
/// translation representation's multiplier pole removable on this class.
class AnalyticTestFunction {
public:
  using JetFn = std::function<Jet(double, double)>;
  using ValueFn = std::function<Complex(double, double)>;

  AnalyticTestFunction();  // the zero function

  /// Jets of f; slots above exact_order() are not meaningful.
  Jet jet(double x, double y) const { return jet_(x, y); }
  Complex value(double x, double y) const;
  Complex value(Complex z) const { return value(z.real(), z.imag()); }

  int exact_order() const { return order_; }
  /// True when multipliers ~ 1/|z|^2 stay bounded against f (f vanishes
  /// quadratically at the origin or its support excludes the origin).
  bool origin_safe() const { return origin_safe_; }
  bool has_reduced() const { return static_cast<bool>(reduced_jet_); }
  const SupportHint& support() const { return support_; }

  /// Jets of psi = f / |z|^2. Throws UnremovablePole when unavailable.
  Jet reduced_jet(double x, double y) const;
  Complex reduced_value(double x, double y) const;

  /// z -> f(z + shift). Derivative orders are preserved; the quadratic
  /// vanishing factor is not (it moves to -shift), so the result is a plain
  /// function.
  AnalyticTestFunction translated(Complex shift) const;

  static AnalyticTestFunction zero();
  /// f = |z|^2 psi. psi_value may be empty (jets used for values too).
  static AnalyticTestFunction from_reduced(JetFn psi, ValueFn psi_value,
                                           SupportHint support, int order);
  /// Arbitrary function; no vanishing at the origin claimed.
  static AnalyticTestFunction plain(JetFn f, ValueFn f_value, SupportHint support,
                                    int order, bool origin_safe);
  /// Explicit evaluators for both f and psi = f/|z|^2 (for functions whose
  /// direct form is cheaper than r^2 * psi).
  static AnalyticTestFunction from_parts(JetFn f, ValueFn f_value, JetFn psi,
                                         ValueFn psi_value, SupportHint support,
                                         int order);
  /// a f + b g.
  static AnalyticTestFunction combination(Complex a, const AnalyticTestFunction& f,
                                          Complex b, const AnalyticTestFunction& g);

private:
  JetFn jet_;
  ValueFn value_;
  JetFn reduced_jet_;
  ValueFn reduced_value_;
  int order_ = 3;
  bool origin_safe_ = true;
  SupportHint support_;
};

/// |z|^2 e^{i m theta} e^{-|z - center|^2 / width^2}; the |z|^2 prefactor
/// keeps the weight's singularity harmless. width > 0.
AnalyticTestFunction make_gaussian_probe(Complex center, double width,
                                         int angular_index);

/// Radial C^3 bump: 0 outside [r_lo, r_hi], 1 on the inner plateau
/// [r_lo + taper, r_hi - taper]. Requires 0 < r_lo, r_lo + 2*taper < r_hi.
AnalyticTestFunction make_annular_bump(double r_lo, double r_hi, double taper);

/// |z|^2 e^{i(k1 x + k2 y)} (generalized eigenfunction; no decay).
AnalyticTestFunction make_plane_wave(double k1, double k2);

/// Pointwise evaluation at the grid nodes.
GridFunction sample(const AnalyticTestFunction& f, std::shared_ptr<const Grid> grid);

}  // namespace indrep
