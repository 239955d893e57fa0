#include "lie_contact/cone_geometry.hpp"

#include "lie_contact/errors.hpp"

#include <cmath>
#include <numbers>

namespace lie_contact {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kConvexityTol = 1e-9;
constexpr int kConvexityGrid = 1024;

double coeff(const std::vector<double>& c, std::size_t k) { return k < c.size() ? c[k] : 0.0; }

}  // namespace

WheelCurve::WheelCurve(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  if (cos_.empty()) cos_.push_back(0.0);
  const double m = min_curvature_radius();
  if (!(m > kConvexityTol)) {
    throw NonConvexWheel("wheel is not strictly convex: min(h + h'') = " + std::to_string(m));
  }
}

WheelCurve WheelCurve::circle(double radius, const Vec2& center) {
  return WheelCurve({radius, center.x()}, {0.0, center.y()});
}

double WheelCurve::support(double theta) const {
  double h = 0.0;
  const std::size_t n = std::max(cos_.size(), sin_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double kt = static_cast<double>(k) * theta;
    h += coeff(cos_, k) * std::cos(kt) + coeff(sin_, k) * std::sin(kt);
  }
  return h;
}

double WheelCurve::support_d1(double theta) const {
  double h = 0.0;
  const std::size_t n = std::max(cos_.size(), sin_.size());
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    h += kd * (-coeff(cos_, k) * std::sin(kd * theta) + coeff(sin_, k) * std::cos(kd * theta));
  }
  return h;
}

double WheelCurve::support_d2(double theta) const {
  double h = 0.0;
  const std::size_t n = std::max(cos_.size(), sin_.size());
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    h -= kd * kd * (coeff(cos_, k) * std::cos(kd * theta) + coeff(sin_, k) * std::sin(kd * theta));
  }
  return h;
}

Vec2 WheelCurve::point(double theta) const {
  return support(theta) * unit_normal(theta) + support_d1(theta) * unit_tangent(theta);
}

double WheelCurve::arc_length(double theta) const {
  double s = coeff(cos_, 0) * theta;
  const std::size_t n = std::max(cos_.size(), sin_.size());
  for (std::size_t k = 2; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double w = (1.0 - kd * kd) / kd;
    s += w * (coeff(cos_, k) * std::sin(kd * theta) + coeff(sin_, k) * (1.0 - std::cos(kd * theta)));
  }
  return s;
}

double WheelCurve::perimeter() const { return kTwoPi * coeff(cos_, 0); }

double WheelCurve::min_curvature_radius() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kConvexityGrid; ++i) {
    m = std::min(m, radius_of_curvature(kTwoPi * i / kConvexityGrid));
  }
  return m;
}

SphericalWheel::SphericalWheel(const Vec3& axis, double rho) : rho_(rho) {
  if (axis.norm() < 1e-12) throw ValidationError("spherical wheel axis must be nonzero");
  if (!(rho > 0.0 && rho < std::numbers::pi / 2)) {
    throw NonConvexWheel("spherical wheel radius must lie in (0, pi/2) to stay in a hemisphere");
  }
  axis_ = axis.normalized();
  // Prefer e1 as the first frame vector so that axis e3 gives the standard frame.
  Vec3 seed = std::abs(axis_.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  u_ = (seed - seed.dot(axis_) * axis_).normalized();
  v_ = axis_.cross(u_);
}

Vec3 SphericalWheel::point(double theta) const {
  return std::cos(rho_) * axis_ + std::sin(rho_) * (std::cos(theta) * u_ + std::sin(theta) * v_);
}

Vec3 SphericalWheel::tangent(double theta) const {
  return -std::sin(theta) * u_ + std::cos(theta) * v_;
}

double SphericalWheel::arc_length(double theta) const { return std::sin(rho_) * theta; }

double SphericalWheel::perimeter() const { return kTwoPi * std::sin(rho_); }

SupportResult support(const WheelCurve& wheel, const Vec2& beta) {
  const double norm = beta.norm();
  if (norm == 0.0) return {0.0, 0.0, true};
  // The curve is parametrized by its normal angle, so the maximizer of
  // beta . w is the direction angle of beta.
  double theta = std::atan2(beta.y(), beta.x());
  if (theta < 0.0) theta += kTwoPi;
  return {norm * wheel.support(theta), theta, false};
}

ConeSpec::ConeSpec(Algebra algebra, ConeMode mode, ValueFn value, GradientFn gradient,
                   GeneratorFn generator, Vec positive_covector)
    : algebra_(std::move(algebra)),
      mode_(mode),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      generator_(std::move(generator)),
      positive_covector_(std::move(positive_covector)) {}

double ConeSpec::value(const Momentum& alpha) const {
  if (alpha.coords.size() != algebra_.dim()) throw DimensionMismatch("cone value: bad covector size");
  return value_(alpha.coords);
}

AlgebraVector ConeSpec::gradient(const Momentum& alpha) const {
  if (alpha.coords.size() != algebra_.dim()) throw DimensionMismatch("cone gradient: bad covector size");
  return {gradient_(alpha.coords)};
}

AlgebraVector ConeSpec::generator(double theta) const { return {generator_(theta)}; }

Momentum ConeSpec::project_to_surface(const Momentum& alpha) const {
  // t -> f(alpha - t c) is strictly decreasing; bracket and bisect.
  const Vec& c = positive_covector_;
  auto g = [&](double t) { return value_(alpha.coords - t * c); };
  double lo = 0.0;
  double hi = 0.0;
  double step = std::max(1.0, alpha.coords.norm());
  if (g(0.0) > 0.0) {
    hi = step;
    while (g(hi) > 0.0) hi *= 2.0;
  } else {
    lo = -step;
    while (g(lo) < 0.0) lo *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  Vec out = alpha.coords - 0.5 * (lo + hi) * c;
  const double n = out.norm();
  if (n == 0.0) throw DegenerateDirection("covector collapsed to zero while projecting onto f = 0");
  return {out / n};
}

ConeSpec cone_from_wheel(const WheelCurve& wheel, const Algebra& alg, int axis_index) {
  if (!(alg.name() == "se2" || alg.name() == "hom2")) {
    throw ValidationError("planar cones need se2 or hom2, got " + alg.name());
  }
  if (axis_index != 0) {
    throw ValidationError("the rotation/dilation generator of " + alg.name() + " is slot 0");
  }
  const int a = axis_index;
  const int t1 = 1;
  const int t2 = 2;

  auto value = [wheel, a, t1, t2](const Vec& alpha) {
    const Vec2 beta(alpha(t1), alpha(t2));
    return alpha(a) + support(wheel, rotate_ccw90(beta)).value;
  };
  auto gradient = [wheel, a, t1, t2](const Vec& alpha) {
    const Vec2 beta(alpha(t1), alpha(t2));
    const SupportResult s = support(wheel, rotate_ccw90(beta));
    if (s.degenerate) throw DegenerateDirection("translation part of the covector vanishes");
    const Vec2 u = rotate_cw90(wheel.point(s.maximizer));
    Vec g = Vec::Zero(3);
    g(a) = 1.0;
    g(t1) = u.x();
    g(t2) = u.y();
    return g;
  };
  auto generator = [wheel, a, t1, t2](double theta) {
    const Vec2 u = rotate_cw90(wheel.point(theta));
    Vec g = Vec::Zero(3);
    g(a) = 1.0;
    g(t1) = u.x();
    g(t2) = u.y();
    return g;
  };
  Vec positive = Vec::Zero(3);
  positive(a) = 1.0;
  ConeSpec cone(alg, ConeMode::kPlanar, value, gradient, generator, positive);
  cone.planar_wheel_ = wheel;
  cone.axis_index_ = axis_index;
  return cone;
}

ConeSpec cone_from_wheel(const SphericalWheel& wheel, const Algebra& alg) {
  if (alg.name() != "so3") throw ValidationError("spherical cones need so3, got " + alg.name());
  const Vec3 axis = wheel.axis();
  const double c = std::cos(wheel.rho());
  const double s = std::sin(wheel.rho());

  auto value = [axis, c, s](const Vec& alpha) {
    const Vec3 a3 = alpha.head<3>();
    const double along = a3.dot(axis);
    return c * along + s * (a3 - along * axis).norm();
  };
  auto gradient = [axis, c, s](const Vec& alpha) {
    const Vec3 a3 = alpha.head<3>();
    const Vec3 perp = a3 - a3.dot(axis) * axis;
    const double n = perp.norm();
    if (n < 1e-14 * std::max(1.0, a3.norm())) {
      throw DegenerateDirection("covector is parallel to the wheel axis");
    }
    Vec g = c * axis + s * perp / n;
    return g;
  };
  auto generator = [wheel](double theta) {
    Vec g = wheel.point(theta);
    return g;
  };
  Vec positive = axis;
  ConeSpec cone(alg, ConeMode::kSpherical, value, gradient, generator, positive);
  cone.spherical_wheel_ = wheel;
  return cone;
}

ConeSpec interval_cone(const Algebra& alg, double u_min, double u_max) {
  if (alg.name() != "hom1") throw ValidationError("interval cones need hom1, got " + alg.name());
  if (!(u_min < u_max)) throw NonConvexWheel("interval diagram needs u_min < u_max");
  auto value = [u_min, u_max](const Vec& alpha) {
    return alpha(0) + std::max(alpha(1) * u_min, alpha(1) * u_max);
  };
  auto gradient = [u_min, u_max](const Vec& alpha) {
    if (alpha(1) == 0.0) throw DegenerateDirection("translation part of the covector vanishes");
    Vec g(2);
    g << 1.0, alpha(1) > 0.0 ? u_max : u_min;
    return g;
  };
  auto generator = [u_min, u_max](double theta) {
    Vec g(2);
    g << 1.0, std::cos(theta) >= 0.0 ? u_max : u_min;
    return g;
  };
  Vec positive = Vec::Zero(2);
  positive(0) = 1.0;
  return ConeSpec(alg, ConeMode::kPlanar, value, gradient, generator, positive);
}

std::vector<Vec> wave_diagram(const ConeSpec& cone, const Vec& base_point, int samples) {
  if (samples < 3) throw ValidationError("wave diagram needs at least 3 samples");
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(samples));
  const std::string& name = cone.algebra().name();
  for (int i = 0; i < samples; ++i) {
    const double theta = kTwoPi * i / samples;
    if (cone.mode() == ConeMode::kPlanar && cone.planar_wheel()) {
      if (base_point.size() != 2) throw DimensionMismatch("planar base point must have 2 coordinates");
      const Vec2 x = base_point.head<2>();
      const Vec2 w = cone.planar_wheel()->point(theta);
      if (name == "se2") {
        out.emplace_back(rotate_ccw90(x - w));
      } else {
        out.emplace_back(rotate_cw90(w));
      }
    } else if (cone.mode() == ConeMode::kSpherical) {
      if (base_point.size() != 3) throw DimensionMismatch("spherical base point must have 3 coordinates");
      const Vec3 y = base_point.head<3>().normalized();
      const Vec3 w = cone.generator(theta).coords.head<3>();
      const double lift = w.dot(y);
      if (lift <= 1e-12) {
        throw ValidationError("tangent plane at the base point misses part of the cone");
      }
      out.emplace_back((w / lift).cross(y));
    } else {
      throw ValidationError("wave diagrams need a wheel cone");
    }
  }
  return out;
}

}  // namespace lie_contact
