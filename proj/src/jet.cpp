#include "indrep/jet.hpp"

#include <cmath>

namespace indrep {

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v + b.v;
  r.dx = a.dx + b.dx;
  r.dy = a.dy + b.dy;
  r.dxx = a.dxx + b.dxx;
  r.dxy = a.dxy + b.dxy;
  r.dyy = a.dyy + b.dyy;
  r.dxxx = a.dxxx + b.dxxx;
  r.dxxy = a.dxxy + b.dxxy;
  r.dxyy = a.dxyy + b.dxyy;
  r.dyyy = a.dyyy + b.dyyy;
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v - b.v;
  r.dx = a.dx - b.dx;
  r.dy = a.dy - b.dy;
  r.dxx = a.dxx - b.dxx;
  r.dxy = a.dxy - b.dxy;
  r.dyy = a.dyy - b.dyy;
  r.dxxx = a.dxxx - b.dxxx;
  r.dxxy = a.dxxy - b.dxxy;
  r.dxyy = a.dxyy - b.dxyy;
  r.dyyy = a.dyyy - b.dyyy;
  return r;
}

Jet operator-(const Jet& a) {
  Jet r;
  r.v = -a.v;
  r.dx = -a.dx;
  r.dy = -a.dy;
  r.dxx = -a.dxx;
  r.dxy = -a.dxy;
  r.dyy = -a.dyy;
  r.dxxx = -a.dxxx;
  r.dxxy = -a.dxxy;
  r.dxyy = -a.dxyy;
  r.dyyy = -a.dyyy;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  // Leibniz rule through third order.
  Jet r;
  r.v = a.v * b.v;
  r.dx = a.dx * b.v + a.v * b.dx;
  r.dy = a.dy * b.v + a.v * b.dy;
  r.dxx = a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx;
  r.dxy = a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy;
  r.dyy = a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy;
  r.dxxx = a.dxxx * b.v + 3.0 * a.dxx * b.dx + 3.0 * a.dx * b.dxx + a.v * b.dxxx;
  r.dxxy = a.dxxy * b.v + a.dxx * b.dy + 2.0 * a.dxy * b.dx +
           2.0 * a.dx * b.dxy + a.dy * b.dxx + a.v * b.dxxy;
  r.dxyy = a.dxyy * b.v + a.dyy * b.dx + 2.0 * a.dxy * b.dy +
           2.0 * a.dy * b.dxy + a.dx * b.dyy + a.v * b.dxyy;
  r.dyyy = a.dyyy * b.v + 3.0 * a.dyy * b.dy + 3.0 * a.dy * b.dyy + a.v * b.dyyy;
  return r;
}

Jet operator*(Complex c, const Jet& a) {
  Jet r;
  r.v = c * a.v;
  r.dx = c * a.dx;
  r.dy = c * a.dy;
  r.dxx = c * a.dxx;
  r.dxy = c * a.dxy;
  r.dyy = c * a.dyy;
  r.dxxx = c * a.dxxx;
  r.dxxy = c * a.dxxy;
  r.dxyy = c * a.dxyy;
  r.dyyy = c * a.dyyy;
  return r;
}

Jet operator*(double c, const Jet& a) { return Complex(c, 0.0) * a; }

Jet operator+(const Jet& a, Complex c) {
  Jet r = a;
  r.v += c;
  return r;
}

Jet operator-(const Jet& a, Complex c) {
  Jet r = a;
  r.v -= c;
  return r;
}

Jet jet_recip(const Jet& a) {
  // Solve (a g) = 1 order by order with the Leibniz rule.
  Jet g;
  const Complex inv = 1.0 / a.v;
  g.v = inv;
  g.dx = -a.dx * g.v * inv;
  g.dy = -a.dy * g.v * inv;
  g.dxx = -(a.dxx * g.v + 2.0 * a.dx * g.dx) * inv;
  g.dxy = -(a.dxy * g.v + a.dx * g.dy + a.dy * g.dx) * inv;
  g.dyy = -(a.dyy * g.v + 2.0 * a.dy * g.dy) * inv;
  g.dxxx = -(a.dxxx * g.v + 3.0 * a.dxx * g.dx + 3.0 * a.dx * g.dxx) * inv;
  g.dxxy = -(a.dxxy * g.v + a.dxx * g.dy + 2.0 * a.dxy * g.dx +
             2.0 * a.dx * g.dxy + a.dy * g.dxx) *
           inv;
  g.dxyy = -(a.dxyy * g.v + a.dyy * g.dx + 2.0 * a.dxy * g.dy +
             2.0 * a.dy * g.dxy + a.dx * g.dyy) *
           inv;
  g.dyyy = -(a.dyyy * g.v + 3.0 * a.dyy * g.dy + 3.0 * a.dy * g.dyy) * inv;
  return g;
}

Jet operator/(const Jet& a, const Jet& b) { return a * jet_recip(b); }

Jet jet_exp(const Jet& a) {
  const Complex e = std::exp(a.v);
  Jet g;
  g.v = e;
  g.dx = a.dx * e;
  g.dy = a.dy * e;
  g.dxx = (a.dxx + a.dx * a.dx) * e;
  g.dxy = (a.dxy + a.dx * a.dy) * e;
  g.dyy = (a.dyy + a.dy * a.dy) * e;
  g.dxxx = (a.dxxx + 3.0 * a.dx * a.dxx + a.dx * a.dx * a.dx) * e;
  g.dxxy = (a.dxxy + 2.0 * a.dx * a.dxy + (a.dxx + a.dx * a.dx) * a.dy) * e;
  g.dxyy = (a.dxyy + 2.0 * a.dy * a.dxy + (a.dyy + a.dy * a.dy) * a.dx) * e;
  g.dyyy = (a.dyyy + 3.0 * a.dy * a.dyy + a.dy * a.dy * a.dy) * e;
  return g;
}

Jet jet_sqrt(const Jet& a) {
  // Solve g*g = a order by order.
  Jet g;
  g.v = std::sqrt(a.v);
  const Complex inv = 1.0 / (2.0 * g.v);
  g.dx = a.dx * inv;
  g.dy = a.dy * inv;
  g.dxx = (a.dxx - 2.0 * g.dx * g.dx) * inv;
  g.dxy = (a.dxy - 2.0 * g.dx * g.dy) * inv;
  g.dyy = (a.dyy - 2.0 * g.dy * g.dy) * inv;
  g.dxxx = (a.dxxx - 6.0 * g.dx * g.dxx) * inv;
  g.dxxy = (a.dxxy - 2.0 * g.dy * g.dxx - 4.0 * g.dx * g.dxy) * inv;
  g.dxyy = (a.dxyy - 2.0 * g.dx * g.dyy - 4.0 * g.dy * g.dxy) * inv;
  g.dyyy = (a.dyyy - 6.0 * g.dy * g.dyy) * inv;
  return g;
}

Jet jet_compose1d(Complex h, Complex h1, Complex h2, Complex h3, const Jet& u) {
  Jet g;
  g.v = h;
  g.dx = h1 * u.dx;
  g.dy = h1 * u.dy;
  g.dxx = h2 * u.dx * u.dx + h1 * u.dxx;
  g.dxy = h2 * u.dx * u.dy + h1 * u.dxy;
  g.dyy = h2 * u.dy * u.dy + h1 * u.dyy;
  g.dxxx = h3 * u.dx * u.dx * u.dx + 3.0 * h2 * u.dx * u.dxx + h1 * u.dxxx;
  g.dxxy = h3 * u.dx * u.dx * u.dy + h2 * (u.dxx * u.dy + 2.0 * u.dx * u.dxy) +
           h1 * u.dxxy;
  g.dxyy = h3 * u.dx * u.dy * u.dy + h2 * (u.dyy * u.dx + 2.0 * u.dy * u.dxy) +
           h1 * u.dxyy;
  g.dyyy = h3 * u.dy * u.dy * u.dy + 3.0 * h2 * u.dy * u.dyy + h1 * u.dyyy;
  return g;
}

Jet jet_shift_x(const Jet& f) {
  Jet r;
  r.v = f.dx;
  r.dx = f.dxx;
  r.dy = f.dxy;
  r.dxx = f.dxxx;
  r.dxy = f.dxxy;
  r.dyy = f.dxyy;
  // Third-order slots would need fourth derivatives of f; left zero, callers
  // track the lost order.
  return r;
}

Jet jet_shift_y(const Jet& f) {
  Jet r;
  r.v = f.dy;
  r.dx = f.dxy;
  r.dy = f.dyy;
  r.dxx = f.dxxy;
  r.dxy = f.dxyy;
  r.dyy = f.dyyy;
  return r;
}

Jet jet_radius_sq(double x, double y) {
  Jet r;
  r.v = x * x + y * y;
  r.dx = 2.0 * x;
  r.dy = 2.0 * y;
  r.dxx = 2.0;
  r.dyy = 2.0;
  return r;
}

Jet jet_polar_angle(double x, double y) {
  // theta_x = -y/r^2 and theta_y = x/r^2 are rational; take their jets and
  // transplant one order up.
  const Jet r2 = jet_radius_sq(x, y);
  const Jet inv_r2 = jet_recip(r2);
  const Jet tx = (-1.0) * Jet::var_y(y) * inv_r2;  // jet of d(theta)/dx
  const Jet ty_jet = Jet::var_x(x) * inv_r2;       // jet of d(theta)/dy

  Jet th;
  th.v = std::atan2(y, x);
  th.dx = tx.v;
  th.dy = ty_jet.v;
  th.dxx = tx.dx;
  th.dxy = tx.dy;
  th.dyy = ty_jet.dy;
  th.dxxx = tx.dxx;
  th.dxxy = tx.dxy;
  th.dxyy = tx.dyy;
  th.dyyy = ty_jet.dyy;
  return th;
}

}  // namespace indrep
