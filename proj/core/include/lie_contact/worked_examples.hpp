#pragma once

// The three group systems as runnable constructions: the SE(2) wheel and its
// involutes, the SO(3) spherical wheel and its holonomy, the homothety group
// with straight extremals. Also plane front propagation for the SE(2) wave
// diagrams.

#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/lie_core.hpp"
#include "lie_contact/lp_dynamics.hpp"
#include "lie_contact/reduction.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lie_contact {

/// Sampled plane curve with exact velocities where they are known.
struct PlaneCurve {
  std::vector<double> params;
  std::vector<Vec2> points;
  std::vector<Vec2> velocities;
};

/// gamma(theta) = w(theta) - (s(theta) - s0) T(theta) for theta in
/// [theta0, theta_end]; velocity (s - s0) n(theta).
PlaneCurve involute(const WheelCurve& wheel, double theta0, double s0, double theta_end,
                    int samples = 512);

/// Flags with the normal line of the curve, oriented by rotating the velocity
/// a quarter turn counterclockwise. Zero-speed endpoints take the neighbour's
/// line; a zero-speed interior point throws DegenerateDirection.
std::vector<Flag> flag_lift(const PlaneCurve& curve);
/// Same, with velocities from central differences.
std::vector<Flag> flag_lift(const std::vector<Vec2>& points);

struct DualityPair {
  std::vector<Vec> plane;  // (x, y)
  std::vector<Vec> lines;  // (psi, d)
};

DualityPair duality_pair(const Trajectory& traj, const Algebra& alg);

/// se2 or hom2 state on E whose velocity is the generator at theta0 and whose
/// base point is the involute point w - (s(theta0) - s0) T at the contact.
TrivializedState involute_seed(const ConeSpec& cone, double theta0, double s0);

/// Planar state for hom2 with base point x0 and velocity the generator at theta.
TrivializedState homothety_seed(const ConeSpec& cone, const Vec2& x0, double theta);

/// so3 state with g e3 = w(theta0) and velocity the generator at theta0.
TrivializedState spherical_seed(const ConeSpec& cone, double theta0);

/// Plane motion after time t of the road rolling on the wheel, starting with
/// contact angle theta0 (3x3 affine matrix).
Mat rolling_motion(const WheelCurve& wheel, double theta0, double t);

/// Spherical involute y(theta) = cos(sigma) w - sin(sigma) T, sigma = sin(rho)(theta - theta0).
Vec3 spherical_involute(const SphericalWheel& wheel, double theta0, double theta);

struct HolonomyResult {
  GroupElement holonomy;
  double angle = 0.0;
  Vec3 axis = Vec3::Zero();
  bool closure = false;
  std::optional<int> closure_order;
  double circuit_time = 0.0;
  double closest_power_distance = 0.0;
};

/// Rotation by which one circuit of the so3 characteristic advances, and
/// whether some power up to `circuits` is within 1e-4 (Frobenius) of identity.
HolonomyResult so3_holonomy(const SphericalWheel& wheel, int circuits, double h);

/// Holonomy integrated directly over `circuits` circuits.
GroupElement so3_circuit_map(const SphericalWheel& wheel, int circuits, double h);

struct HomothetyResult {
  std::vector<Vec2> curve;
  double chord_deviation = 0.0;
  Vec2 seed_velocity = Vec2::Zero();
};

HomothetyResult homothety_extremal(const WheelCurve& diagram, const Vec2& x0, double theta_seed,
                                   double T, double h = 1e-3);

/// Unit-velocity diagram field in the plane, given by its support function.
struct DiagramField {
  std::function<double(const Vec2&, const Vec2&)> support;     // h_D(x)(p)
  std::function<Vec2(const Vec2&, const Vec2&)> velocity;      // d/dp
  std::function<Vec2(const Vec2&, const Vec2&)> support_dx;    // d/dx
};

/// se2 field D(x) = R90 (x - W).
DiagramField wheel_diagram_field(const WheelCurve& wheel);
/// Position-independent disc of the given radius.
DiagramField disc_diagram_field(double radius);

struct FrontSample {
  Vec2 x;
  Vec2 p;
};
using FrontPolyline = std::vector<FrontSample>;

/// Closed circular front with outward normals scaled to h_D = 1. Throws
/// ValidationError when some normal has h_D <= 0.
FrontPolyline circle_front(const DiagramField& field, const Vec2& center, double radius, int samples);

struct HuygensResult {
  std::vector<FrontPolyline> fronts;
  std::vector<std::vector<Vec2>> rays;
  std::vector<int> caustic_steps;
};

/// RK4 on x' = dh/dp, p' = -dh/dx per sample, p rescaled to h_D = 1 after
/// each step. A flip of local orientation is recorded as a caustic.
HuygensResult huygens_front(const FrontPolyline& front0, const DiagramField& field, double dt,
                            int steps);

/// One RK4 ray step of the front system.
FrontSample front_step(const FrontSample& s, const DiagramField& field, double dt);

/// Distance between the one-step ray endpoint of the circular front sample at
/// angle `sigma` and the envelope of dt-scaled diagrams along the front.
double envelope_defect(const DiagramField& field, const Vec2& center, double radius, double sigma,
                       double dt);

/// Least-squares slope of log(defect) against log(dt) over the ladder.
double envelope_order(const DiagramField& field, const Vec2& center, double radius, double sigma,
                      const std::vector<double>& dts);

}  // namespace lie_contact
