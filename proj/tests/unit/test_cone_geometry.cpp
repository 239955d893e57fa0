#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lie_contact;
using lie_contact::testing::Gen;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WheelCurve two_harmonic() { return WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}); }
WheelCurve off_center() { return WheelCurve({1.0, 0.6, 0.1}, {0.0, -0.4, 0.05}); }

// Independent maximizer: 64-sample bracketing then Newton on beta . w'(theta) = 0.
double bracket_newton_maximizer(const WheelCurve& w, const Vec2& beta) {
  double best = 0.0;
  double best_val = -INFINITY;
  for (int i = 0; i < 64; ++i) {
    const double t = kTwoPi * i / 64;
    const double v = beta.dot(w.point(t));
    if (v > best_val) {
      best_val = v;
      best = t;
    }
  }
  auto dpoint = [&](double t, double eps) { return (w.point(t + eps) - w.point(t - eps)) / (2.0 * eps); };
  double t = best;
  for (int it = 0; it < 50; ++it) {
    const double g = beta.dot(dpoint(t, 1e-5));
    const double gp = (beta.dot(dpoint(t + 1e-4, 1e-5)) - beta.dot(dpoint(t - 1e-4, 1e-5))) / 2e-4;
    const double step = g / gp;
    t -= step;
    if (std::abs(step) < 1e-12) break;
  }
  return t;
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + (b - a) * i / n);
  return s * (b - a) / n;
}

}  // namespace

TEST_CASE("support of circles") {
  const WheelCurve unit = WheelCurve::circle(1.0);
  Gen gen(11);
  for (int k = 0; k < 20; ++k) {
    const Vec2 beta(gen.normal(), gen.normal());
    CHECK(support(unit, beta).value == doctest::Approx(beta.norm()).epsilon(1e-14));
    const Vec2 c(0.4, -0.3);
    const WheelCurve shifted = WheelCurve::circle(1.7, c);
    CHECK(support(shifted, beta).value == doctest::Approx(1.7 * beta.norm() + beta.dot(c)).epsilon(1e-13));
  }
  CHECK(support(unit, Vec2(1.0, 0.0)).maximizer == doctest::Approx(0.0));
  const SupportResult zero = support(unit, Vec2::Zero());
  CHECK(zero.degenerate);
  CHECK(zero.value == 0.0);
}

TEST_CASE("support maximizer agrees with bracketing and Newton") {
  Gen gen(12);
  for (const WheelCurve& w : {two_harmonic(), off_center()}) {
    for (int k = 0; k < 30; ++k) {
      const Vec2 beta(gen.normal(), gen.normal());
      const SupportResult s = support(w, beta);
      const double oracle = bracket_newton_maximizer(w, beta);
      CHECK(std::abs(std::remainder(s.maximizer - oracle, kTwoPi)) <= 1e-7);
      CHECK(s.value == doctest::Approx(beta.dot(w.point(oracle))).epsilon(1e-12));
      CHECK(support(w, 3.0 * beta).value == doctest::Approx(3.0 * s.value).epsilon(1e-13));
    }
  }
}

TEST_CASE("wheel curve geometry") {
  const WheelCurve w = off_center();
  CHECK((w.point(0.0) - w.point(kTwoPi)).norm() <= 1e-14);
  CHECK(w.min_curvature_radius() > 0.0);
  const double quad = trapezoid([&](double t) { return w.radius_of_curvature(t); }, 0.0, kTwoPi, 4096);
  CHECK(w.perimeter() == doctest::Approx(quad).epsilon(1e-12));
  const double part = trapezoid([&](double t) { return w.radius_of_curvature(t); }, 0.0, 1.3, 20000);
  CHECK(w.arc_length(1.3) == doctest::Approx(part).epsilon(1e-8));
  // w'(theta) = (h + h'') t(theta)
  for (double t : {0.1, 1.0, 2.5, 4.0}) {
    const Vec2 d = (w.point(t + 1e-6) - w.point(t - 1e-6)) / 2e-6;
    CHECK((d - w.radius_of_curvature(t) * unit_tangent(t)).norm() <= 1e-7);
  }
}

TEST_CASE("non-convex wheels are rejected") {
  CHECK_THROWS_AS(WheelCurve({1.0, 0.0, 0.4}, {0.0, 0.0, 0.0}), NonConvexWheel);
  CHECK_THROWS_AS(SphericalWheel(Vec3::UnitZ(), 1.7), NonConvexWheel);
}

TEST_CASE("planar cone defining function") {
  const Algebra se2 = make_algebra("se2");
  const ConeSpec unit = cone_from_wheel(WheelCurve::circle(1.0), se2);
  Gen gen(13);
  for (int k = 0; k < 20; ++k) {
    const Vec a = gen.vec(3);
    CHECK(unit.value({a}) == doctest::Approx(a(0) + a.tail(2).norm()).epsilon(1e-14));
  }
  CHECK_THROWS_AS(cone_from_wheel(WheelCurve::circle(1.0), make_algebra("so3")), ValidationError);
}

TEST_CASE("spherical cone defining function") {
  const double rho = 0.4;
  const ConeSpec c = cone_from_wheel(SphericalWheel(Vec3::UnitZ(), rho), make_algebra("so3"));
  Gen gen(14);
  for (int k = 0; k < 20; ++k) {
    const Vec a = gen.vec(3);
    const double expected = a(2) * std::cos(rho) + std::sin(rho) * std::hypot(a(0), a(1));
    CHECK(c.value({a}) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("cone properties: homogeneity, Euler identity, tangency, gradient") {
  const std::vector<ConeSpec> cones{
      cone_from_wheel(two_harmonic(), make_algebra("se2")),
      cone_from_wheel(off_center(), make_algebra("hom2")),
      cone_from_wheel(SphericalWheel(Vec3(0.2, -0.1, 1.0), 0.5), make_algebra("so3")),
  };
  Gen gen(15);
  for (const ConeSpec& c : cones) {
    CAPTURE(c.algebra().name());
    for (int k = 0; k < 100; ++k) {
      const Vec a = gen.vec(3);
      const double f = c.value({a});
      for (double lam : {0.5, 2.0, 7.0}) CHECK(std::abs(c.value({lam * a}) - lam * f) <= 1e-10 * std::max(1.0, std::abs(f)));
      const Vec g = c.gradient({a}).coords;
      CHECK(std::abs(a.dot(g) - f) <= 1e-8);
      Vec fd(3);
      for (int i = 0; i < 3; ++i) {
        Vec e = Vec::Zero(3);
        e(i) = 1e-6;
        fd(i) = (c.value({a + e}) - c.value({a - e})) / 2e-6;
      }
      CHECK((fd - g).norm() <= 1e-6 * std::max(1.0, g.norm()));

      const Momentum on = c.project_to_surface({a});
      CHECK(std::abs(c.value(on)) <= 1e-12);
      const Vec v = c.gradient(on).coords;
      CHECK(std::abs(on.coords.dot(v)) <= 1e-12);
    }
  }
}

TEST_CASE("every wheel tangent line is a point of E") {
  const WheelCurve w = off_center();
  const ConeSpec c = cone_from_wheel(w, make_algebra("se2"));
  for (int i = 0; i < 256; ++i) {
    const double t = kTwoPi * i / 256;
    const Vec2 beta = rotate_cw90(unit_normal(t));
    Vec a(3);
    a << -w.support(t), beta.x(), beta.y();
    CHECK(std::abs(c.value({a})) <= 1e-9);
    // the touching generator is the one at the contact angle
    const Vec g = c.gradient({a}).coords;
    CHECK((g - c.generator(t).coords).norm() <= 1e-12);
  }
}

TEST_CASE("spherical wheel geometry") {
  const SphericalWheel w(Vec3(1.0, 2.0, 0.5), 0.7);
  double len = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    CHECK(std::abs(w.point(t).norm() - 1.0) <= 1e-12);
    len += (w.point(kTwoPi * (i + 1) / n) - w.point(t)).norm();
  }
  CHECK(w.perimeter() == doctest::Approx(kTwoPi * std::sin(0.7)).epsilon(1e-15));
  CHECK(len == doctest::Approx(w.perimeter()).epsilon(1e-8));
}

TEST_CASE("wave diagrams") {
  const Algebra se2 = make_algebra("se2");
  const ConeSpec unit = cone_from_wheel(WheelCurve::circle(1.0), se2);
  // the road turns about the contact: velocities R90 (x - w)
  const auto d = wave_diagram(unit, Vec2(2.0, 0.0), 64);
  Vec2 mean = Vec2::Zero();
  for (const Vec& v : d) mean += Vec2(v(0), v(1));
  mean /= static_cast<double>(d.size());
  CHECK((mean - Vec2(0.0, 2.0)).norm() <= 1e-12);
  for (const Vec& v : d) CHECK((Vec2(v(0), v(1)) - mean).norm() == doctest::Approx(1.0));

  const Vec2 c(0.3, -0.8);
  const ConeSpec shifted = cone_from_wheel(WheelCurve::circle(0.5, c), se2);
  Vec2 centre = Vec2::Zero();
  for (const Vec& v : wave_diagram(shifted, c, 64)) centre += Vec2(v(0), v(1)) / 64.0;
  CHECK(centre.norm() <= 1e-12);

  const ConeSpec hom = cone_from_wheel(off_center(), make_algebra("hom2"));
  const auto a = wave_diagram(hom, Vec2(0.0, 0.0), 32);
  const auto b = wave_diagram(hom, Vec2(5.0, -3.0), 32);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).norm() == 0.0);

  CHECK_THROWS_AS(wave_diagram(unit, Vec2(0.0, 0.0), 2), ValidationError);
}
