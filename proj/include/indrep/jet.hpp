#pragma once

// Truncated Taylor coefficients ("jets") of complex-valued functions of two
// real variables, carried to third order. Probes evaluate their formulas on
// jet variables once and get exact partial derivatives everywhere; operators
// consume jets instead of differencing.

#include <complex>

namespace indrep {

using Complex = std::complex<double>;

struct Jet {
  Complex v{};                          // value
  Complex dx{}, dy{};                   // first order
  Complex dxx{}, dxy{}, dyy{};          // second order
  Complex dxxx{}, dxxy{}, dxyy{}, dyyy{};  // third order

  static Jet constant(Complex c) {
    Jet j;
    j.v = c;
    return j;
  }
  /// The coordinate x as a jet.
  static Jet var_x(double x) {
    Jet j;
    j.v = x;
    j.dx = 1.0;
    return j;
  }
  /// The coordinate y as a jet.
  static Jet var_y(double y) {
    Jet j;
    j.v = y;
    j.dy = 1.0;
    return j;
  }
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Complex c, const Jet& a);
Jet operator*(double c, const Jet& a);
Jet operator+(const Jet& a, Complex c);
Jet operator-(const Jet& a, Complex c);

/// 1/a; requires a.v != 0.
Jet jet_recip(const Jet& a);
Jet operator/(const Jet& a, const Jet& b);

Jet jet_exp(const Jet& a);

/// Principal square root; requires a.v != 0.
Jet jet_sqrt(const Jet& a);

/// Composition h(u(x,y)) of a univariate function with a jet. The caller
/// supplies h and its first three derivatives at u.v.
Jet jet_compose1d(Complex h, Complex h1, Complex h2, Complex h3, const Jet& u);

/// The jet of (d/dx f) obtained by shifting slots down one order. The
/// third-order slots of the result are not determined by f and are zeroed.
Jet jet_shift_x(const Jet& f);
Jet jet_shift_y(const Jet& f);

/// atan2(y, x) as a jet; derivatives are rational in (x, y). Requires
/// x^2 + y^2 > 0.
Jet jet_polar_angle(double x, double y);

/// x^2 + y^2 as a jet (exact polynomial).
Jet jet_radius_sq(double x, double y);

}  // namespace indrep
