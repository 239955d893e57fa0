#include "lie_contact/worked_examples.hpp"

#include "lie_contact/curves.hpp"
#include "lie_contact/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace lie_contact {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClosureTol = 1e-4;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

Mat rotation2(double t) {
  Mat r(2, 2);
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

Mat affine2(const Mat& block, const Vec2& x) {
  Mat g = Mat::Identity(3, 3);
  g.topLeftCorner(2, 2) = block;
  g(0, 2) = x.x();
  g(1, 2) = x.y();
  return g;
}

const WheelCurve& require_planar(const ConeSpec& cone) {
  if (!cone.planar_wheel()) throw ValidationError("cone has no planar wheel");
  return *cone.planar_wheel();
}

// (-h(theta), R(-90) n(theta)), which has velocity (1, R(-90) w(theta)).
Momentum planar_covector(const ConeSpec& cone, double theta) {
  const WheelCurve& wheel = require_planar(cone);
  const Vec2 beta = rotate_cw90(unit_normal(theta));
  Vec a(3);
  a << -wheel.support(theta), beta.x(), beta.y();
  return cone.project_to_surface(Momentum{a / a.norm()});
}

// Maximizes a smooth periodic function: grid scan, then golden section.
double periodic_max(const std::function<double(double)>& fn, int grid) {
  double best_t = 0.0;
  double best = fn(0.0);
  for (int i = 1; i < grid; ++i) {
    const double t = kTwoPi * i / grid;
    const double v = fn(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  const double step = kTwoPi / grid;
  double a = best_t - step;
  double b = best_t + step;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = fn(d);
    }
  }
  return std::max({best, fc, fd});
}

}  // namespace

PlaneCurve involute(const WheelCurve& wheel, double theta0, double s0, double theta_end, int samples) {
  if (samples < 2) throw ValidationError("involute needs at least two samples");
  PlaneCurve c;
  for (int i = 0; i < samples; ++i) {
    const double th = theta0 + (theta_end - theta0) * i / (samples - 1);
    const double offset = wheel.arc_length(th) - s0;
    c.params.push_back(th);
    c.points.push_back(wheel.point(th) - offset * wheel.tangent(th));
    c.velocities.push_back(offset * unit_normal(th));
  }
  return c;
}

std::vector<Flag> flag_lift(const PlaneCurve& curve) {
  const std::size_t n = curve.points.size();
  if (curve.velocities.size() != n) throw DimensionMismatch("curve points and velocities differ in length");
  double scale = 0.0;
  for (const Vec2& v : curve.velocities) scale = std::max(scale, v.norm());
  const double tiny = 1e-12 * std::max(1.0, scale);

  std::vector<Flag> out(n);
  std::vector<bool> zero(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& v = curve.velocities[i];
    out[i].point = curve.points[i];
    if (v.norm() <= tiny) {
      if (i != 0 && i + 1 != n) throw DegenerateDirection("zero-speed interior point in flag_lift");
      zero[i] = true;
      continue;
    }
    const Vec2 normal = rotate_ccw90(v);
    out[i].line_angle = normalize_angle(std::atan2(normal.y(), normal.x()));
  }
  if (n > 1 && zero.front()) {
    if (zero[1]) throw DegenerateDirection("flag_lift endpoint limit is undefined");
    out.front().line_angle = out[1].line_angle;
  }
  if (n > 1 && zero.back()) {
    if (zero[n - 2]) throw DegenerateDirection("flag_lift endpoint limit is undefined");
    out.back().line_angle = out[n - 2].line_angle;
  }
  return out;
}

std::vector<Flag> flag_lift(const std::vector<Vec2>& points) {
  if (points.size() < 2) throw ValidationError("flag_lift needs at least two points");
  PlaneCurve c;
  c.points = points;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    c.velocities.push_back(points[hi] - points[lo]);
  }
  return flag_lift(c);
}

DualityPair duality_pair(const Trajectory& traj, const Algebra& alg) {
  if (alg.name() != "se2") throw ValidationError("duality_pair needs an se2 trajectory");
  return {project(traj, make_subgroup("rotations", alg), alg),
          project(traj, make_subgroup("translation_line", alg), alg)};
}

TrivializedState involute_seed(const ConeSpec& cone, double theta0, double s0) {
  if (cone.algebra().name() != "se2") throw ValidationError("involute_seed needs an se2 cone");
  const WheelCurve& wheel = require_planar(cone);
  const Vec2 x0 = wheel.point(theta0) - (wheel.arc_length(theta0) - s0) * wheel.tangent(theta0);
  return {GroupElement{affine2(rotation2(theta0), x0)}, planar_covector(cone, theta0)};
}

TrivializedState homothety_seed(const ConeSpec& cone, const Vec2& x0, double theta) {
  if (cone.algebra().name() != "hom2") throw ValidationError("homothety_seed needs a hom2 cone");
  return {GroupElement{affine2(Mat::Identity(2, 2), x0)}, planar_covector(cone, theta)};
}

TrivializedState spherical_seed(const ConeSpec& cone, double theta0) {
  if (!cone.spherical_wheel()) throw ValidationError("spherical_seed needs a spherical cone");
  const SphericalWheel& w = *cone.spherical_wheel();
  const double rho = w.rho();
  Mat q(3, 3);
  q.col(0) = w.frame_u();
  q.col(1) = w.frame_v();
  q.col(2) = w.axis();
  const Eigen::Matrix3d rz = Eigen::AngleAxisd(theta0, Vec3::UnitZ()).toRotationMatrix();
  const Eigen::Matrix3d ry = Eigen::AngleAxisd(rho, Vec3::UnitY()).toRotationMatrix();
  const Mat g = q * rz * ry;
  const Vec3 radial = std::cos(theta0) * w.frame_u() + std::sin(theta0) * w.frame_v();
  Vec a = -std::sin(rho) * w.axis() + std::cos(rho) * radial;
  return {GroupElement{g}, cone.project_to_surface(Momentum{a})};
}

Mat rolling_motion(const WheelCurve& wheel, double theta0, double t) {
  const Mat r = rotation2(t);
  const double th = theta0 + t;
  const Vec2 b = -r * wheel.point(theta0) + wheel.point(th) -
                 (wheel.arc_length(th) - wheel.arc_length(theta0)) * wheel.tangent(th);
  return affine2(r, b);
}

Vec3 spherical_involute(const SphericalWheel& wheel, double theta0, double theta) {
  const double sigma = std::sin(wheel.rho()) * (theta - theta0);
  return std::cos(sigma) * wheel.point(theta) - std::sin(sigma) * wheel.tangent(theta);
}

GroupElement so3_circuit_map(const SphericalWheel& wheel, int circuits, double h) {
  if (circuits < 1) throw ValidationError("circuits must be positive");
  if (!(h > 0.0)) throw ValidationError("step must be positive");
  const Algebra alg = make_algebra("so3");
  const ConeSpec cone = cone_from_wheel(wheel, alg);
  const TrivializedState seed = spherical_seed(cone, 0.0);
  const double T = circuits * kTwoPi * std::cos(wheel.rho());
  const double steps = std::ceil(T / h);
  const Trajectory traj = lp_integrate(seed, cone, T, T / steps);
  const Mat hol = traj.states.back().g.matrix * seed.g.matrix.transpose();
  return alg.project_to_group(hol);
}

HolonomyResult so3_holonomy(const SphericalWheel& wheel, int circuits, double h) {
  HolonomyResult out;
  out.holonomy = so3_circuit_map(wheel, 1, h);
  out.circuit_time = kTwoPi * std::cos(wheel.rho());
  const Eigen::Matrix3d r = out.holonomy.matrix;
  const Eigen::AngleAxisd aa(r);
  out.angle = aa.angle();
  out.axis = aa.axis();
  Eigen::Matrix3d power = Eigen::Matrix3d::Identity();
  out.closest_power_distance = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= circuits; ++k) {
    power = power * r;
    const double d = (power - Eigen::Matrix3d::Identity()).norm();
    out.closest_power_distance = std::min(out.closest_power_distance, d);
    if (d <= kClosureTol) {
      out.closure = true;
      out.closure_order = k;
      break;
    }
  }
  return out;
}

HomothetyResult homothety_extremal(const WheelCurve& diagram, const Vec2& x0, double theta_seed,
                                   double T, double h) {
  const Algebra alg = make_algebra("hom2");
  const ConeSpec cone = cone_from_wheel(diagram, alg, 0);
  const TrivializedState seed = homothety_seed(cone, x0, theta_seed);
  const Trajectory traj = lp_integrate(seed, cone, T, h);
  HomothetyResult out;
  Polyline poly;
  for (const Vec& q : project(traj, make_subgroup("dilations", alg), alg)) {
    out.curve.emplace_back(q(0), q(1));
    poly.push_back(q);
  }
  out.chord_deviation = max_chord_deviation(poly);
  // translation part of the spatial velocity: motion relative to the dilation field
  const Vec v = characteristic_field(seed, cone).velocity.coords;
  out.seed_velocity = Vec2(v(1), v(2));
  return out;
}

DiagramField wheel_diagram_field(const WheelCurve& wheel) {
  DiagramField f;
  f.support = [wheel](const Vec2& x, const Vec2& p) {
    return p.dot(rotate_ccw90(x)) + support(wheel, rotate_ccw90(p)).value;
  };
  f.velocity = [wheel](const Vec2& x, const Vec2& p) {
    const SupportResult s = support(wheel, rotate_ccw90(p));
    if (s.degenerate) throw DegenerateDirection("zero covector in the wave diagram field");
    return Vec2(rotate_ccw90(x - wheel.point(s.maximizer)));
  };
  f.support_dx = [](const Vec2&, const Vec2& p) { return rotate_cw90(p); };
  return f;
}

DiagramField disc_diagram_field(double radius) {
  if (!(radius > 0.0)) throw ValidationError("disc radius must be positive");
  DiagramField f;
  f.support = [radius](const Vec2&, const Vec2& p) { return radius * p.norm(); };
  f.velocity = [radius](const Vec2&, const Vec2& p) {
    const double n = p.norm();
    if (n == 0.0) throw DegenerateDirection("zero covector in the wave diagram field");
    return Vec2(radius * p / n);
  };
  f.support_dx = [](const Vec2&, const Vec2&) { return Vec2(Vec2::Zero()); };
  return f;
}

FrontPolyline circle_front(const DiagramField& field, const Vec2& center, double radius, int samples) {
  if (samples < 3) throw ValidationError("a closed front needs at least three samples");
  FrontPolyline front;
  for (int i = 0; i < samples; ++i) {
    const Vec2 n = unit_normal(kTwoPi * i / samples);
    const Vec2 x = center + radius * n;
    const double hd = field.support(x, n);
    if (!(hd > 0.0)) throw ValidationError("front normal is not positive on the wave diagram");
    front.push_back({x, n / hd});
  }
  return front;
}

FrontSample front_step(const FrontSample& s, const DiagramField& field, double dt) {
  auto deriv = [&](const Vec2& x, const Vec2& p) {
    return std::pair<Vec2, Vec2>{field.velocity(x, p), -field.support_dx(x, p)};
  };
  const auto [kx1, kp1] = deriv(s.x, s.p);
  const auto [kx2, kp2] = deriv(s.x + 0.5 * dt * kx1, s.p + 0.5 * dt * kp1);
  const auto [kx3, kp3] = deriv(s.x + 0.5 * dt * kx2, s.p + 0.5 * dt * kp2);
  const auto [kx4, kp4] = deriv(s.x + dt * kx3, s.p + dt * kp3);
  FrontSample out;
  out.x = s.x + (dt / 6.0) * (kx1 + 2.0 * kx2 + 2.0 * kx3 + kx4);
  out.p = s.p + (dt / 6.0) * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
  const double hd = field.support(out.x, out.p);
  if (!(hd > 0.0)) throw StepRejected("front covector left the positive side of the diagram");
  out.p /= hd;
  return out;
}

HuygensResult huygens_front(const FrontPolyline& front0, const DiagramField& field, double dt,
                            int steps) {
  if (front0.size() < 2) throw ValidationError("front needs at least two samples");
  if (!(dt > 0.0) || steps < 0) throw ValidationError("huygens_front needs dt > 0 and steps >= 0");
  for (const FrontSample& s : front0) {
    if (std::abs(field.support(s.x, s.p) - 1.0) > 1e-9) {
      throw ValidationError("front sample violates h_D(p) = 1");
    }
  }
  auto orientation = [](const FrontPolyline& f) {
    std::vector<int> sign;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      sign.push_back(cross(f[i + 1].x - f[i].x, f[i].p) >= 0.0 ? 1 : -1);
    }
    return sign;
  };

  HuygensResult out;
  out.fronts.push_back(front0);
  out.rays.assign(front0.size(), {});
  for (std::size_t i = 0; i < front0.size(); ++i) out.rays[i].push_back(front0[i].x);
  const std::vector<int> sign0 = orientation(front0);

  FrontPolyline cur = front0;
  for (int k = 1; k <= steps; ++k) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = front_step(cur[i], field, dt);
      out.rays[i].push_back(cur[i].x);
    }
    if (orientation(cur) != sign0) out.caustic_steps.push_back(k);
    out.fronts.push_back(cur);
  }
  return out;
}

double envelope_defect(const DiagramField& field, const Vec2& center, double radius, double sigma,
                       double dt) {
  auto sample = [&](double s) {
    const Vec2 n = unit_normal(s);
    const Vec2 x = center + radius * n;
    return FrontSample{x, n / field.support(x, n)};
  };
  const FrontSample s0 = sample(sigma);
  const Vec2 y = front_step(s0, field, dt).x;
  const Vec2 p0 = s0.p;
  const double envelope = periodic_max(
      [&](double s) {
        const Vec2 x = center + radius * unit_normal(s);
        return p0.dot(x) + dt * field.support(x, p0);
      },
      4096);
  return std::abs(p0.dot(y) - envelope) / p0.norm();
}

double envelope_order(const DiagramField& field, const Vec2& center, double radius, double sigma,
                      const std::vector<double>& dts) {
  if (dts.size() < 2) throw ValidationError("envelope_order needs at least two step sizes");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(dts.size());
  for (double dt : dts) {
    const double x = std::log(dt);
    const double y = std::log(envelope_defect(field, center, radius, sigma, dt));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lie_contact
