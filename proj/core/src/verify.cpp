#include "lie_contact/verify.hpp"

#include "lie_contact/contact_kernel.hpp"
#include "lie_contact/curves.hpp"
#include "lie_contact/reduction.hpp"
#include "lie_contact/worked_examples.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace lie_contact {

namespace {

constexpr double kPi = std::numbers::pi;

WheelCurve two_harmonic_wheel() { return WheelCurve({1.0, 0.0, 0.2}, {0.0, 0.0, 0.0}); }

WheelCurve skew_wheel() { return WheelCurve({1.0, 0.1, 0.2}, {0.0, 0.05, -0.1}); }

SphericalWheel symmetric_spherical_wheel() { return SphericalWheel(Vec3::UnitZ(), kPi / 6.0); }

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

// The four reference systems with seeds on their equation surfaces.
struct System {
  std::string label;
  ConeSpec cone;
  TrivializedState seed;
};

std::vector<System> reference_systems() {
  const Algebra se2 = make_algebra("se2");
  const Algebra so3 = make_algebra("so3");
  const Algebra hom2 = make_algebra("hom2");
  std::vector<System> out;
  {
    ConeSpec c = cone_from_wheel(WheelCurve::circle(1.0), se2);
    TrivializedState s = involute_seed(c, 0.3, 0.0);
    out.push_back({"se2 circle", c, s});
  }
  {
    ConeSpec c = cone_from_wheel(two_harmonic_wheel(), se2);
    TrivializedState s = involute_seed(c, 0.3, -0.5);
    out.push_back({"se2 two-harmonic", c, s});
  }
  {
    ConeSpec c = cone_from_wheel(symmetric_spherical_wheel(), so3);
    TrivializedState s = spherical_seed(c, 0.0);
    out.push_back({"so3 symmetric", c, s});
  }
  {
    ConeSpec c = cone_from_wheel(two_harmonic_wheel(), hom2);
    TrivializedState s = homothety_seed(c, Vec2(0.3, 0.1), 0.5);
    out.push_back({"hom2", c, s});
  }
  return out;
}

double line_projection_gap(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, (a[i] - b[i]).norm());
  if (a.size() != b.size()) worst = std::numeric_limits<double>::infinity();
  return worst;
}

}  // namespace

CheckResult check_involute_reproduction() {
  return timed("involute reproduction", [](CheckResult& r) {
    const auto start = std::chrono::steady_clock::now();
    const Algebra se2 = make_algebra("se2");
    const ConeSpec cone = cone_from_wheel(WheelCurve::circle(1.0), se2);
    const Trajectory traj = lp_integrate(involute_seed(cone, 0.0, 0.0), cone, kPi / 2.0, 1e-3);
    const Vec end = project(traj, make_subgroup("rotations", se2), se2).back();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.measured = (end - Vec2(kPi / 2.0, 1.0)).norm();
    r.threshold = 1e-6;
    r.pass = r.measured <= r.threshold && secs < 1.0;
    r.detail = "endpoint error vs (pi/2, 1); runtime " + fmt(secs) + " s (limit 1 s)";
  });
}

CheckResult check_cross_oracle() {
  return timed("cross-oracle equivalence", [](CheckResult& r) {
    const auto start = std::chrono::steady_clock::now();
    r.threshold = 1e-5;
    std::string parts;
    for (const System& sys : reference_systems()) {
      const double T = 3.0;
      const double h = 1e-3;
      const Trajectory traj = lp_integrate(sys.seed, sys.cone, T, h);
      const EquationChart eq = group_equation_chart(sys.cone);
      const CharacteristicCurve cc =
          charpit_integrate(eq, chart_point_from_state(sys.cone, sys.seed.g, sys.seed.alpha), T, h);
      std::vector<Mat> a;
      std::vector<Mat> b;
      for (const auto& s : traj.states) a.push_back(s.g.matrix);
      for (const auto& p : cc.points) b.push_back(eq.to_group(p.x));
      const double d = trace_distance(flatten(a), flatten(b));
      r.measured = std::max(r.measured, d);
      parts += sys.label + "=" + fmt(d) + " ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = r.measured <= r.threshold && secs < 10.0;
    r.detail = "Frechet " + parts + "; runtime " + fmt(secs) + " s (limit 10 s)";
  });
}

CheckResult check_conservation() {
  return timed("conservation over T = 10", [](CheckResult& r) {
    double f = 0.0;
    double m = 0.0;
    double g = 0.0;
    for (const System& sys : reference_systems()) {
      const Trajectory traj = lp_integrate(sys.seed, sys.cone, 10.0, 1e-3);
      f = std::max(f, traj.max_f_drift);
      m = std::max(m, traj.max_momentum_drift);
      g = std::max(g, traj.max_membership_residual);
    }
    r.measured = m;
    r.threshold = 1e-7;
    r.pass = f <= 1e-8 && m <= 1e-7 && g <= 1e-8;
    r.detail = "|f| " + fmt(f) + " (1e-8), momentum " + fmt(m) + " (1e-7), membership " + fmt(g) + " (1e-8)";
  });
}

CheckResult check_homothety_straightness() {
  return timed("homothety straightness", [](CheckResult& r) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const WheelCurve diagram = skew_wheel();
    for (int k = 0; k < 20; ++k) {
      const Vec2 x0(box(rng), box(rng));
      const HomothetyResult res = homothety_extremal(diagram, x0, angle(rng), 1.0);
      r.measured = std::max(r.measured, res.chord_deviation);
    }
    r.threshold = 1e-8;
    r.pass = r.measured < r.threshold;
    r.detail = "max chord deviation over 20 seeds";
  });
}

CheckResult check_so3_closure() {
  return timed("so3 closure criterion", [](CheckResult& r) {
    const HolonomyResult rational = so3_holonomy(SphericalWheel(Vec3::UnitZ(), std::asin(0.5)), 40, 1e-3);
    const HolonomyResult irrational = so3_holonomy(SphericalWheel(Vec3::UnitZ(), std::asin(0.5363)), 40, 1e-3);
    r.measured = rational.closest_power_distance;
    r.threshold = 1e-4;
    r.pass = rational.closure && !irrational.closure;
    r.detail = "sin(rho)=1/2 closure " + std::string(rational.closure ? "true" : "false") + " order " +
               std::to_string(rational.closure_order.value_or(0)) + "; sin(rho)=0.5363 closure " +
               (irrational.closure ? "true" : "false") + " (closest power " +
               fmt(irrational.closest_power_distance) + ")";
  });
}

CheckResult check_classification() {
  return timed("hyperplane classification", [](CheckResult& r) {
    const Algebra se2 = make_algebra("se2");
    const Algebra so3 = make_algebra("so3");
    const Algebra sl2 = make_algebra("sl2");
    const OrbitSurvey a = survey_hyperplane_classes(se2, 500, 100, 11);
    const OrbitSurvey b = survey_hyperplane_classes(so3, 500, 100, 12);
    Vec lam(3);
    lam << 0.0, 0.0, 1.0;  // kernel span(h, e)
    const ReductionReport borel = classify({Momentum{lam}}, sl2);
    const bool so3_ok = b.classes.size() == 1 && std::get<2>(b.classes.front()) == 1;
    r.measured = static_cast<double>(a.classes.size());
    r.threshold = 2.0;
    r.pass = a.classes.size() == 2 && a.conjugation_invariant && so3_ok && b.conjugation_invariant &&
             borel.residual_dim == 0 && borel.stabilizer_dim() == 2;
    r.detail = "se2 classes " + std::to_string(a.classes.size()) + ", so3 classes " +
               std::to_string(b.classes.size()) + (so3_ok ? " (residual 1)" : "") +
               ", sl2 Borel residual " + std::to_string(borel.residual_dim);
  });
}

CheckResult check_complete_integrals_lift() {
  return timed("complete-integrals lift", [](CheckResult& r) {
    const Algebra se2 = make_algebra("se2");
    const WheelCurve wheel = two_harmonic_wheel();
    const ConeSpec cone = cone_from_wheel(wheel, se2);
    const double theta0 = 0.3;
    const double s0 = wheel.arc_length(theta0) - 0.25;
    const Trajectory traj = lp_integrate(involute_seed(cone, theta0, s0), cone, 2.0 * kPi, 1e-3);
    std::vector<double> thetas;
    for (double t : traj.times) thetas.push_back(theta0 + t);
    Polyline lifted;
    for (const Flag& f : lift_tangent_family(wheel, thetas, s0)) lifted.push_back(f.point);
    const Polyline plane = project(traj, make_subgroup("rotations", se2), se2);
    r.measured = trace_distance(plane, lifted);
    r.threshold = 1e-5;
    r.pass = r.measured <= r.threshold;
    r.detail = "Frechet distance between lifted flags and plane projection";
  });
}

CheckResult check_projected_hyperplane() {
  return timed("projected-hyperplane constancy", [](CheckResult& r) {
    const Algebra se2 = make_algebra("se2");
    const ConeSpec cone = cone_from_wheel(WheelCurve::circle(1.0), se2);
    const Trajectory traj = lp_integrate(involute_seed(cone, 0.3, 0.0), cone, 1.0, 1e-3);
    const FibrationChart plane = coset_fibration(make_subgroup("rotations", se2), se2);
    const Vec nu0 = projected_hyperplane(traj.states.front(), se2, plane).coords;
    double along = 0.0;
    double perturbed = 0.0;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
      const TrivializedState& s = traj.states[i];
      along = std::max(along, (projected_hyperplane(s, se2, plane).coords - nu0).norm());
      // same covector, group curve twisted by exp(0.05 t J)
      const GroupElement twist = exponential(se2.basis_vector(0), 0.05 * traj.times[i], se2);
      const TrivializedState bent{compose(s.g, twist), s.alpha};
      perturbed = std::max(perturbed, (projected_hyperplane(bent, se2, plane).coords - nu0).norm());
    }
    r.measured = along;
    r.threshold = 1e-6;
    r.pass = along <= 1e-6 && perturbed >= 1e-2;
    r.detail = "variation along characteristic " + fmt(along) + " (<= 1e-6), perturbed " + fmt(perturbed) +
               " (>= 1e-2)";
  });
}

CheckResult check_duality_invariance() {
  return timed("duality invariance", [](CheckResult& r) {
    const Algebra se2 = make_algebra("se2");
    const ConeSpec cone = cone_from_wheel(two_harmonic_wheel(), se2);
    const SubgroupSpec line = make_subgroup("translation_line", se2);
    const auto base = project(lp_integrate(involute_seed(cone, 0.3, 0.0), cone, 5.0, 1e-3), line, se2);
    for (double s0 : {-0.7, 1.3, 4.0}) {
      const auto other = project(lp_integrate(involute_seed(cone, 0.3, s0), cone, 5.0, 1e-3), line, se2);
      r.measured = std::max(r.measured, line_projection_gap(base, other));
    }
    r.threshold = 1e-9;
    r.pass = r.measured <= r.threshold;
    r.detail = "pointwise line-space gap over offsets s0 in {-0.7, 1.3, 4}";
  });
}

CheckResult check_contact_kernel() {
  return timed("contact kernel sanity", [](CheckResult& r) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const ContactChart standard = standard_contact_chart();
    const ContactChart flat = integrable_chart();
    double defect_err = 0.0;
    for (int k = 0; k < 50; ++k) {
      Vec x(3);
      x << gauss(rng), gauss(rng), gauss(rng);
      defect_err = std::max(defect_err, std::abs(contact_defect(standard, x) - 1.0));
      defect_err = std::max(defect_err, std::abs(contact_defect(flat, x)));
    }

    int bad_points = 0;
    int total = 0;
    for (const System& sys : reference_systems()) {
      const Algebra& alg = sys.cone.algebra();
      const EquationChart eq = group_equation_chart(sys.cone);
      for (int k = 0; k < 200; ++k) {
        Vec v(alg.dim());
        Vec a(alg.dim());
        for (int i = 0; i < alg.dim(); ++i) {
          v(i) = 0.5 * gauss(rng);
          a(i) = gauss(rng);
        }
        const GroupElement g = compose(exponential({v}, 1.0, alg), sys.seed.g);
        const Momentum alpha = sys.cone.project_to_surface(Momentum{a});
        const ChartPoint pt = chart_point_from_state(sys.cone, g, alpha);
        const ContactChart chart = gauge_contact_chart(eq, pt);
        ++total;
        if (characteristic_kernel_dimension(chart, gauge_coordinates(pt)) != 1) ++bad_points;
      }
    }

    const double order = envelope_order(wheel_diagram_field(two_harmonic_wheel()), Vec2(0.2, 0.1), 0.4, 0.9,
                                        {0.08, 0.04, 0.02, 0.01});
    r.measured = order;
    r.threshold = 2.0;
    r.pass = defect_err <= 1e-9 && bad_points == 0 && order >= 1.7 && order <= 2.3;
    r.detail = "defect error " + fmt(defect_err) + ", kernel dim != 1 at " + std::to_string(bad_points) + "/" +
               std::to_string(total) + " points, envelope order " + fmt(order) + " (in [1.7, 2.3])";
  });
}

std::vector<CheckResult> run_acceptance_suite() {
  return {check_involute_reproduction(), check_cross_oracle(),          check_conservation(),
          check_homothety_straightness(), check_so3_closure(),          check_classification(),
          check_complete_integrals_lift(), check_projected_hyperplane(), check_duality_invariance(),
          check_contact_kernel()};
}

void print_results(const std::vector<CheckResult>& results, std::ostream& out) {
  int idx = 1;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << idx++ << "  " << std::left << std::setw(32)
        << r.name << std::right << " measured " << std::setw(10) << fmt(r.measured) << "  threshold "
        << std::setw(8) << fmt(r.threshold) << "  " << std::fixed << std::setprecision(2) << r.seconds << " s"
        << std::defaultfloat << "  " << r.detail << "\n";
  }
}

}  // namespace lie_contact
