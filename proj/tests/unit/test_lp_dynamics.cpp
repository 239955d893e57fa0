#include "lie_contact/errors.hpp"
#include "lie_contact/lp_dynamics.hpp"
#include "lie_contact/worked_examples.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lie_contact;
using lie_contact::testing::Gen;
using lie_contact::testing::max_abs;

namespace {

// f(alpha) = alpha_0 + |alpha_{1,2}| on an abelian algebra.
ConeSpec abelian_cone() {
  const Algebra ab = make_algebra("abelian3");
  auto value = [](const Vec& a) { return a(0) + a.tail(2).norm(); };
  auto gradient = [](const Vec& a) {
    Vec g(3);
    g << 1.0, a.tail(2).normalized();
    return g;
  };
  auto generator = [](double t) {
    Vec g(3);
    g << 1.0, std::cos(t), std::sin(t);
    return g;
  };
  Vec positive = Vec::Zero(3);
  positive(0) = 1.0;
  return ConeSpec(ab, ConeMode::kPlanar, value, gradient, generator, positive);
}

}  // namespace

TEST_CASE("abelian momenta are constant and the group moves along one exponential") {
  const ConeSpec cone = abelian_cone();
  const Algebra& alg = cone.algebra();
  Gen gen(31);
  const TrivializedState s{gen.group_element(alg), cone.project_to_surface(gen.momentum(alg))};
  const CharacteristicField field = characteristic_field(s, cone);
  CHECK(field.alpha_dot.coords.norm() == 0.0);
  const Trajectory traj = lp_integrate(s, cone, 2.0, 1e-2);
  CHECK((traj.states.back().alpha.coords - s.alpha.coords).norm() <= 1e-14);
  const Mat expected = exponential(field.velocity, 2.0, alg).matrix * s.g.matrix;
  CHECK(max_abs(traj.states.back().g.matrix - expected) <= 1e-12);
}

TEST_CASE("so3 momentum precesses with fixed speed, orthogonal to the velocity") {
  const Algebra so3 = make_algebra("so3");
  const ConeSpec cone = cone_from_wheel(SphericalWheel(Eigen::Vector3d(0.3, -0.2, 1.0), 0.45), so3);
  const TrivializedState seed = spherical_seed(cone, 0.7);
  const Trajectory traj = lp_integrate(seed, cone, 4.0, 1e-3);
  const double speed0 = characteristic_field(traj.states.front(), cone).alpha_dot.coords.norm();
  CHECK(speed0 > 0.1);
  for (std::size_t i = 0; i < traj.states.size(); i += 200) {
    const TrivializedState& st = traj.states[i];
    const CharacteristicField fld = characteristic_field(st, cone);
    CHECK(std::abs(st.alpha.coords.dot(fld.velocity.coords)) <= 1e-10);
    CHECK(fld.alpha_dot.coords.norm() == doctest::Approx(speed0).epsilon(1e-8));
    // alpha_dot = v x alpha
    const Eigen::Vector3d v = fld.velocity.coords;
    const Eigen::Vector3d a = st.alpha.coords;
    CHECK((Eigen::Vector3d(fld.alpha_dot.coords) - v.cross(a)).norm() <= 1e-14);
  }
}

TEST_CASE("se2 trajectories follow the rolling motion") {
  const Algebra se2 = make_algebra("se2");
  const WheelCurve w({1.0, 0.1, 0.2}, {0.0, -0.05, 0.1});
  const ConeSpec cone = cone_from_wheel(w, se2);
  const double theta0 = 0.9;
  const TrivializedState seed = involute_seed(cone, theta0, -0.4);
  const Trajectory traj = lp_integrate(seed, cone, 5.0, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.states.size(); i += 50) {
    const Mat expected = rolling_motion(w, theta0, traj.times[i]) * seed.g.matrix;
    worst = std::max(worst, max_abs(traj.states[i].g.matrix - expected));
  }
  CHECK(worst <= 1e-9);
  CHECK(traj.times.back() == 5.0);
}

TEST_CASE("so3 projection traces the spherical involute") {
  const Algebra so3 = make_algebra("so3");
  const SphericalWheel w(Eigen::Vector3d(0.0, 0.0, 1.0), 0.6);
  const ConeSpec cone = cone_from_wheel(w, so3);
  const double theta0 = 0.25;
  const TrivializedState seed = spherical_seed(cone, theta0);
  const Trajectory traj = lp_integrate(seed, cone, 3.0, 1e-3);
  const auto pts = project(traj, make_subgroup("axis_rotations", so3), so3);
  // with unit-speed rolling the contact angle advances at rate 1 / cos(rho)
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); i += 100) {
    const double theta = theta0 + traj.times[i] / std::cos(w.rho());
    worst = std::max(worst, (pts[i] - Vec(spherical_involute(w, theta0, theta))).norm());
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("spatial momentum at the identity is the body momentum") {
  Gen gen(32);
  for (const std::string& name : builtin_algebra_names()) {
    const Algebra alg = make_algebra(name);
    const Momentum a = gen.momentum(alg);
    CHECK((spatial_momentum({alg.identity(), a}, alg).coords - a.coords).norm() <= 1e-15);
  }
}

TEST_CASE("scaling the seed covector does not change the trace") {
  const Algebra se2 = make_algebra("se2");
  const ConeSpec cone = cone_from_wheel(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}), se2);
  const TrivializedState seed = involute_seed(cone, 0.3, 0.0);
  TrivializedState scaled = seed;
  scaled.alpha.coords *= 4.0;
  const Trajectory a = lp_integrate(seed, cone, 2.0, 1e-3);
  const Trajectory b = lp_integrate(normalized_state(scaled, cone), cone, 2.0, 1e-3);
  CHECK(max_abs(a.states.back().g.matrix - b.states.back().g.matrix) <= 1e-13);
}

TEST_CASE("subgroups and their quotients") {
  const Algebra se2 = make_algebra("se2");
  CHECK(is_subalgebra(make_subgroup("rotations", se2), se2));
  CHECK(is_subalgebra(make_subgroup("translation_line", se2), se2));
  CHECK(is_subalgebra(make_subgroup("dilations", make_algebra("hom2")), make_algebra("hom2")));
  CHECK(is_subalgebra(make_subgroup("axis_rotations", make_algebra("so3")), make_algebra("so3")));
  SubgroupSpec bogus = make_subgroup("rotations", se2);
  bogus.generators.push_back(se2.basis_vector(1));
  CHECK_FALSE(is_subalgebra(bogus, se2));

  // quotient points are constant along the subgroup
  Gen gen(33);
  const SubgroupSpec rot = make_subgroup("rotations", se2);
  for (int k = 0; k < 10; ++k) {
    const GroupElement g = gen.group_element(se2);
    const GroupElement gr = compose(g, exponential(se2.basis_vector(0), gen.uniform(-3.0, 3.0), se2));
    CHECK((quotient_point(g, rot, se2) - quotient_point(gr, rot, se2)).norm() <= 1e-13);
  }
}

TEST_CASE("state validation") {
  const Algebra se2 = make_algebra("se2");
  const ConeSpec cone = cone_from_wheel(WheelCurve::circle(1.0), se2);
  TrivializedState s = involute_seed(cone, 0.0, 0.0);
  CHECK_NOTHROW(check_state(s, cone));
  TrivializedState off = s;
  off.alpha.coords(0) += 0.1;
  CHECK_THROWS_AS(check_state(off, cone), ValidationError);
  TrivializedState unnormalized = s;
  unnormalized.alpha.coords *= 3.0;
  CHECK_THROWS_AS(check_state(unnormalized, cone), ValidationError);
  TrivializedState wrong_dim = s;
  wrong_dim.alpha.coords = Vec::Zero(2);
  CHECK_THROWS_AS(check_state(wrong_dim, cone), ValidationError);
  CHECK_THROWS_AS(lp_integrate(s, cone, 1.0, 0.0), ValidationError);
}
