// Randomized property checks; every generator is seeded.

#include "lie_contact/contact_kernel.hpp"
#include "lie_contact/group_charts.hpp"
#include "lie_contact/lp_dynamics.hpp"
#include "lie_contact/reduction.hpp"
#include "lie_contact/worked_examples.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lie_contact;
using lie_contact::testing::Gen;
using lie_contact::testing::max_abs;

namespace {

struct Example {
  std::string label;
  ConeSpec cone;
};

std::vector<Example> example_surfaces() {
  return {
      {"se2 circle", cone_from_wheel(WheelCurve::circle(1.0), make_algebra("se2"))},
      {"se2 two-harmonic", cone_from_wheel(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}), make_algebra("se2"))},
      {"so3", cone_from_wheel(SphericalWheel(Vec3::UnitZ(), std::numbers::pi / 6.0), make_algebra("so3"))},
      {"hom2", cone_from_wheel(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}), make_algebra("hom2"))},
  };
}

TrivializedState random_state(Gen& gen, const ConeSpec& cone) {
  const Algebra& alg = cone.algebra();
  return {gen.group_element(alg), cone.project_to_surface(gen.momentum(alg))};
}

// Euler-angle charts are singular at theta in {0, pi}.
bool chart_regular(const Algebra& alg, const Vec& x) {
  return alg.name() != "so3" || (std::sin(x(1)) > 0.2);
}

}  // namespace

TEST_CASE("one-parameter subgroups compose") {
  Gen gen(61);
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    for (int k = 0; k < 20; ++k) {
      const AlgebraVector v = gen.algebra_vector(alg);
      const double s = gen.uniform(-1.5, 1.5);
      const double t = gen.uniform(-1.5, 1.5);
      const Mat lhs = compose(exponential(v, s, alg), exponential(v, t, alg)).matrix;
      CHECK(max_abs(lhs - exponential(v, s + t, alg).matrix) <= 1e-10 * std::max(1.0, max_abs(lhs)));
      CHECK(alg.membership_residual(exponential(v, s, alg)) <= 1e-8);
    }
  }
}

TEST_CASE("equation surfaces have one characteristic direction") {
  Gen gen(62);
  for (const Example& ex : example_surfaces()) {
    CAPTURE(ex.label);
    const EquationChart eq = group_equation_chart(ex.cone);
    int checked = 0;
    while (checked < 200) {
      const TrivializedState s = random_state(gen, ex.cone);
      const ChartPoint pt = chart_point_from_state(ex.cone, s.g, s.alpha);
      if (!chart_regular(ex.cone.algebra(), pt.x)) continue;
      const ContactChart c = gauge_contact_chart(eq, pt);
      const Vec z = gauge_coordinates(pt);
      CHECK(std::abs(c.surface(z)) <= 1e-9);
      CHECK(characteristic_kernel_dimension(c, z) == 1);
      ++checked;
    }
  }
}

TEST_CASE("equation charts are invariant under the right action") {
  Gen gen(63);
  for (const Example& ex : example_surfaces()) {
    CAPTURE(ex.label);
    const Algebra& alg = ex.cone.algebra();
    const EquationChart eq = group_equation_chart(ex.cone);
    const GroupChart chart = make_group_chart(alg);
    int checked = 0;
    while (checked < 20) {
      const GroupElement g = gen.group_element(alg);
      const GroupElement h = gen.group_element(alg, 0.3);
      const Vec x = chart.from_matrix(g.matrix);
      const Vec y = chart.from_matrix(g.matrix * h.matrix);
      if (!chart_regular(alg, x) || !chart_regular(alg, y)) continue;
      // Jacobian of x -> chart(to_matrix(x) h) by central differences
      const auto n = x.size();
      Mat jac(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        Vec e = Vec::Zero(n);
        e(i) = 1e-6;
        Vec d = chart.from_matrix(chart.to_matrix(x + e) * h.matrix) - chart.from_matrix(chart.to_matrix(x - e) * h.matrix);
        if (alg.name() == "so3") {
          for (Eigen::Index k = 0; k < n; ++k) d(k) = std::remainder(d(k), 2.0 * std::numbers::pi);
        }
        jac.col(i) = d / 2e-6;
      }
      const Vec p = gen.vec(static_cast<int>(n));
      const Vec q = jac.transpose().fullPivLu().solve(p);
      CHECK(std::abs(eq.F(y, q) - eq.F(x, p)) <= 1e-8 * std::max(1.0, p.norm()));
      ++checked;
    }
  }
}

TEST_CASE("charpit trajectories conserve F and the gauge") {
  Gen gen(64);
  for (const Example& ex : example_surfaces()) {
    CAPTURE(ex.label);
    const EquationChart eq = group_equation_chart(ex.cone);
    for (int k = 0; k < 3; ++k) {
      const TrivializedState s = random_state(gen, ex.cone);
      const ChartPoint pt = chart_point_from_state(ex.cone, s.g, s.alpha);
      if (!chart_regular(ex.cone.algebra(), pt.x)) continue;
      const CharacteristicCurve c = charpit_integrate(eq, pt, 1.0, 1e-3);
      CHECK(c.max_surface_drift <= 1e-8);
      for (const ChartPoint& q : c.points) CHECK(std::abs(std::abs(q.p(q.pin)) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("lp trajectories conserve f, momentum and membership") {
  Gen gen(65);
  for (const Example& ex : example_surfaces()) {
    CAPTURE(ex.label);
    for (int k = 0; k < 3; ++k) {
      const Trajectory traj = lp_integrate(random_state(gen, ex.cone), ex.cone, 2.0, 1e-3);
      CHECK(traj.max_f_drift <= 1e-8);
      CHECK(traj.max_momentum_drift <= 1e-7);
      CHECK(traj.max_membership_residual <= 1e-8);
    }
  }
}

TEST_CASE("hyperplane of a state is ker of its spatial momentum for every algebra") {
  Gen gen(66);
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    for (int k = 0; k < 50; ++k) {
      const TrivializedState s{gen.group_element(alg), {gen.vec(alg.dim()).normalized()}};
      const Vec lam = l_of_x(s, alg).lambda.coords.normalized();
      const Vec m = spatial_momentum(s, alg).coords.normalized();
      // distance between the hyperplanes = distance between unit normals up to sign
      CHECK(std::min((lam - m).norm(), (lam + m).norm()) <= 1e-9);
    }
  }
}

TEST_CASE("classify is constant on coadjoint orbits") {
  Gen gen(67);
  for (const std::string& name : builtin_algebra_names()) {
    const Algebra alg = make_algebra(name);
    if (alg.dim() < 2) continue;
    CAPTURE(name);
    for (int k = 0; k < 10; ++k) {
      Vec lam = gen.vec(alg.dim());
      if (k % 3 == 0) lam(gen.engine()() % alg.dim()) = 0.0;
      const ReductionReport base = classify({{lam}}, alg);
      for (int j = 0; j < 20; ++j) {
        const Momentum moved = coadjoint_Ad(gen.group_element(alg), {lam}, alg);
        CHECK(classify({moved}, alg).key() == base.key());
      }
    }
  }
}

TEST_CASE("front normals stay normalized and rays touch successive fronts") {
  const DiagramField field = wheel_diagram_field(WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}));
  const FrontPolyline f0 = circle_front(field, Vec2(0.2, 0.1), 0.4, 64);
  const HuygensResult r = huygens_front(f0, field, 1e-3, 200);
  for (const FrontPolyline& f : r.fronts) {
    for (const FrontSample& s : f) CHECK(std::abs(field.support(s.x, s.p) - 1.0) <= 1e-9);
  }
  Gen gen(68);
  for (int k = 0; k < 20; ++k) {
    CHECK(envelope_defect(field, Vec2(0.2, 0.1), 0.4, gen.uniform(0.0, 2.0 * std::numbers::pi), 1e-3) <= 1e-3);
  }
}

TEST_CASE("random wheels give proper holonomies") {
  Gen gen(69);
  for (int k = 0; k < 3; ++k) {
    const SphericalWheel w(gen.vec(3).normalized(), gen.uniform(0.2, 1.2));
    const Mat h = so3_holonomy(w, 1, 1e-3).holonomy.matrix;
    CHECK(max_abs(h.transpose() * h - Mat::Identity(3, 3)) <= 1e-8);
    CHECK(std::abs(h.determinant() - 1.0) <= 1e-8);
    CHECK(w.perimeter() == doctest::Approx(2.0 * std::numbers::pi * std::sin(w.rho())).epsilon(1e-10));
  }
}
