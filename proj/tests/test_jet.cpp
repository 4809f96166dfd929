#include <doctest.h>

#include <cmath>

#include "indrep/jet.hpp"

using indrep::Complex;
using indrep::Jet;

namespace {

// Reference function with hand-computed derivatives:
// f(x,y) = exp(x) * (x^2 + 3y) evaluated through jet arithmetic.
Jet build(double x, double y) {
  const Jet X = Jet::var_x(x);
  const Jet Y = Jet::var_y(y);
  return indrep::jet_exp(X) * (X * X + 3.0 * Y);
}

double fd(double (*f)(double, double), double x, double y, bool along_x, double h) {
  return along_x ? (f(x + h, y) - f(x - h, y)) / (2 * h)
                 : (f(x, y + h) - f(x, y - h)) / (2 * h);
}

double ref(double x, double y) { return std::exp(x) * (x * x + 3 * y); }

}  // namespace

TEST_CASE("jet product and exp reproduce hand derivatives") {
  const double x = 0.7, y = -0.4;
  const Jet j = build(x, y);
  const double ex = std::exp(x);
  CHECK(std::abs(j.v - ex * (x * x + 3 * y)) < 1e-14);
  CHECK(std::abs(j.dx - ex * (x * x + 2 * x + 3 * y)) < 1e-14);
  CHECK(std::abs(j.dy - 3.0 * ex) < 1e-14);
  CHECK(std::abs(j.dxx - ex * (x * x + 4 * x + 2 + 3 * y)) < 1e-14);
  CHECK(std::abs(j.dxy - 3.0 * ex) < 1e-14);
  CHECK(std::abs(j.dyy - 0.0) < 1e-14);
  CHECK(std::abs(j.dxxx - ex * (x * x + 6 * x + 6 + 3 * y)) < 1e-13);
  CHECK(std::abs(j.dxxy - 3.0 * ex) < 1e-13);
  CHECK(std::abs(j.dxyy) < 1e-14);
  CHECK(std::abs(j.dyyy) < 1e-14);
}

TEST_CASE("jet reciprocal against closed form") {
  const double x = 1.3, y = 0.8;
  // 1/(x^2+y^2): dx = -2x/r^4
  const Jet g = indrep::jet_recip(indrep::jet_radius_sq(x, y));
  const double r2 = x * x + y * y;
  CHECK(std::abs(g.v - 1.0 / r2) < 1e-15);
  CHECK(std::abs(g.dx - (-2.0 * x / (r2 * r2))) < 1e-15);
  CHECK(std::abs(g.dy - (-2.0 * y / (r2 * r2))) < 1e-15);
  // dxx of r^{-2} = (-2 r^2 + 8x^2)/r^6
  CHECK(std::abs(g.dxx - (-2.0 * r2 + 8.0 * x * x) / (r2 * r2 * r2)) < 1e-15);
}

TEST_CASE("jet sqrt solves g*g = f") {
  const double x = 0.9, y = -1.1;
  const Jet f = indrep::jet_radius_sq(x, y);
  const Jet g = indrep::jet_sqrt(f);
  const Jet square = g * g;
  CHECK(std::abs(square.v - f.v) < 1e-14);
  CHECK(std::abs(square.dx - f.dx) < 1e-14);
  CHECK(std::abs(square.dxx - f.dxx) < 1e-13);
  CHECK(std::abs(square.dxy - f.dxy) < 1e-13);
  CHECK(std::abs(square.dxxx - f.dxxx) < 1e-13);
  CHECK(std::abs(square.dyyy - f.dyyy) < 1e-13);
}

TEST_CASE("polar angle jet matches finite differences") {
  const double x = 0.6, y = 1.4;
  const Jet th = indrep::jet_polar_angle(x, y);
  const double h = 1e-6;
  auto angle = [](double px, double py) { return std::atan2(py, px); };
  CHECK(std::abs(th.v - angle(x, y)) < 1e-15);
  CHECK(std::abs(th.dx - fd(angle, x, y, true, h)) < 1e-9);
  CHECK(std::abs(th.dy - fd(angle, x, y, false, h)) < 1e-9);
  // second derivatives from the exact rational forms
  const double r2 = x * x + y * y;
  CHECK(std::abs(th.dxx - 2.0 * x * y / (r2 * r2)) < 1e-13);
  CHECK(std::abs(th.dyy - (-2.0 * x * y / (r2 * r2))) < 1e-13);
  CHECK(std::abs(th.dxy - (y * y - x * x) / (r2 * r2)) < 1e-13);
}

TEST_CASE("derivative slot shift") {
  const double x = 0.25, y = 0.85;
  const Jet f = build(x, y);
  const Jet fx = indrep::jet_shift_x(f);
  CHECK(fx.v == f.dx);
  CHECK(fx.dx == f.dxx);
  CHECK(fx.dy == f.dxy);
  CHECK(fx.dxx == f.dxxx);
  CHECK(fx.dyy == f.dxyy);
  const Jet fy = indrep::jet_shift_y(f);
  CHECK(fy.v == f.dy);
  CHECK(fy.dx == f.dxy);
  CHECK(fy.dyy == f.dyyy);
}

TEST_CASE("reference check against finite differences of the built jet") {
  const double x = -0.35, y = 0.55;
  const Jet j = build(x, y);
  const double h = 1e-5;
  CHECK(std::abs(j.dx - fd(ref, x, y, true, h)) < 1e-8);
  CHECK(std::abs(j.dy - fd(ref, x, y, false, h)) < 1e-8);
}
