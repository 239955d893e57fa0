#pragma once

// Monge cones in the algebra and their degree-one defining functions on the
// dual, built from a "wheel": a strictly convex closed curve in the plane
// (given by its support function) or a circle on the unit sphere.
//
// Planar cones (se2, hom2) use the level-one slice {first coordinate = 1}.
// The wheel is turned by -90 degrees (clockwise) before it is placed in that
// slice: generators are (1, R(-90) w(theta)). With this orientation the plane
// projections of se2 characteristics are the involutes of the wheel itself,
// traversed with the contact point advancing counterclockwise.

#include "lie_contact/lie_core.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace lie_contact {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline Vec2 rotate_ccw90(const Vec2& v) { return {-v.y(), v.x()}; }
inline Vec2 rotate_cw90(const Vec2& v) { return {v.y(), -v.x()}; }
inline Vec2 unit_normal(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Vec2 unit_tangent(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// Strictly convex closed plane curve parametrized by its outward normal angle,
/// h(theta) = sum_k a_k cos(k theta) + b_k sin(k theta).
class WheelCurve {
 public:
  /// Throws NonConvexWheel when h + h'' is not strictly positive.
  WheelCurve(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

  static WheelCurve circle(double radius, const Vec2& center = Vec2::Zero());

  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }

  double support(double theta) const;       // h
  double support_d1(double theta) const;    // h'
  double support_d2(double theta) const;    // h''
  double radius_of_curvature(double theta) const { return support(theta) + support_d2(theta); }

  /// w(theta) = h n + h' t.
  Vec2 point(double theta) const;
  Vec2 tangent(double theta) const { return unit_tangent(theta); }

  /// Arc length from theta = 0, exact for the trigonometric representation.
  double arc_length(double theta) const;
  double perimeter() const;

  /// Minimum of h + h'' over a 1024-point grid.
  double min_curvature_radius() const;

 private:
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Circle of angular radius rho about `axis` on the unit sphere.
class SphericalWheel {
 public:
  SphericalWheel(const Vec3& axis, double rho);

  const Vec3& axis() const { return axis_; }
  double rho() const { return rho_; }
  /// Orthonormal frame (u, v, axis), right-handed.
  const Vec3& frame_u() const { return u_; }
  const Vec3& frame_v() const { return v_; }

  Vec3 point(double theta) const;
  Vec3 tangent(double theta) const;
  double arc_length(double theta) const;
  double perimeter() const;

 private:
  Vec3 axis_;
  double rho_;
  Vec3 u_;
  Vec3 v_;
};

struct SupportResult {
  double value = 0.0;
  double maximizer = 0.0;
  bool degenerate = false;
};

/// max over the wheel of beta . w(theta), and the maximizing parameter.
SupportResult support(const WheelCurve& wheel, const Vec2& beta);

enum class ConeMode { kPlanar, kSpherical };

/// A convex pointed cone of velocities in the algebra, described dually by
/// f(alpha) = max over generators w of <alpha, w>. The equation surface is
/// f = 0 and grad f(alpha) is the generator touched by ker alpha.
class ConeSpec {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using GradientFn = std::function<Vec(const Vec&)>;
  using GeneratorFn = std::function<Vec(double)>;

  ConeSpec(Algebra algebra, ConeMode mode, ValueFn value, GradientFn gradient,
           GeneratorFn generator, Vec positive_covector);

  const Algebra& algebra() const { return algebra_; }
  ConeMode mode() const { return mode_; }

  double value(const Momentum& alpha) const;
  /// Throws DegenerateDirection when the touching generator is undefined.
  AlgebraVector gradient(const Momentum& alpha) const;
  AlgebraVector generator(double theta) const;

  /// A covector positive on every generator; used to push points onto f = 0.
  const Vec& positive_covector() const { return positive_covector_; }

  /// Moves alpha along the positive covector until f = 0, then normalizes to
  /// unit Euclidean norm.
  Momentum project_to_surface(const Momentum& alpha) const;

  const std::optional<WheelCurve>& planar_wheel() const { return planar_wheel_; }
  const std::optional<SphericalWheel>& spherical_wheel() const { return spherical_wheel_; }
  int axis_index() const { return axis_index_; }

 private:
  friend ConeSpec cone_from_wheel(const WheelCurve&, const Algebra&, int);
  friend ConeSpec cone_from_wheel(const SphericalWheel&, const Algebra&);

  Algebra algebra_;
  ConeMode mode_;
  ValueFn value_;
  GradientFn gradient_;
  GeneratorFn generator_;
  Vec positive_covector_;
  std::optional<WheelCurve> planar_wheel_;
  std::optional<SphericalWheel> spherical_wheel_;
  int axis_index_ = 0;
};

/// Planar cone over a wheel; `alg` must be se2 or hom2 and `axis_index` the
/// rotation or dilation slot. The two remaining slots carry translations.
ConeSpec cone_from_wheel(const WheelCurve& wheel, const Algebra& alg, int axis_index = 0);

/// Spherical cone over a circle on the unit sphere of so3.
ConeSpec cone_from_wheel(const SphericalWheel& wheel, const Algebra& alg);

/// hom1 cone with generators (1, u_min) and (1, u_max).
ConeSpec interval_cone(const Algebra& alg, double u_min, double u_max);

/// Closed polyline of unit velocity vectors at `base_point`.
///   se2:  R(90) (x - W)                      (wheel turned about the point)
///   hom2: R(-90) W, velocities measured against the dilation field through x,
///         so one diagram serves every point
///   so3:  tangent-plane section of the cone turned by -90 degrees about the
///         base point's radius (3-vectors tangent to the sphere)
std::vector<Vec> wave_diagram(const ConeSpec& cone, const Vec& base_point, int samples);

}  // namespace lie_contact
