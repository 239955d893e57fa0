#include "lie_contact/lp_dynamics.hpp"

#include "lie_contact/errors.hpp"

#include <cmath>
#include <numbers>

namespace lie_contact {

namespace {

constexpr double kSurfaceTol = 1e-8;
constexpr double kGaugeTol = 1e-8;
constexpr double kStepDriftLimit = 1e-6;
constexpr int kMaxHalvings = 20;

struct Derivative {
  Mat g_dot;
  Vec alpha_dot;
};

Derivative evaluate(const Mat& g, const Vec& alpha, const ConeSpec& cone) {
  const Algebra& alg = cone.algebra();
  const AlgebraVector v = cone.gradient(Momentum{alpha});
  return {alg.matrix_of(v) * g, -coadjoint_ad(v, Momentum{alpha}, alg).coords};
}

TrivializedState rk4_step(const TrivializedState& s, const ConeSpec& cone, double h) {
  const Mat& g = s.g.matrix;
  const Vec& a = s.alpha.coords;
  const Derivative k1 = evaluate(g, a, cone);
  const Derivative k2 = evaluate(g + 0.5 * h * k1.g_dot, a + 0.5 * h * k1.alpha_dot, cone);
  const Derivative k3 = evaluate(g + 0.5 * h * k2.g_dot, a + 0.5 * h * k2.alpha_dot, cone);
  const Derivative k4 = evaluate(g + h * k3.g_dot, a + h * k3.alpha_dot, cone);
  Mat g_new = g + (h / 6.0) * (k1.g_dot + 2.0 * k2.g_dot + 2.0 * k3.g_dot + k4.g_dot);
  Vec a_new = a + (h / 6.0) * (k1.alpha_dot + 2.0 * k2.alpha_dot + 2.0 * k3.alpha_dot + k4.alpha_dot);
  return {cone.algebra().project_to_group(g_new), Momentum{a_new / a_new.norm()}};
}

TrivializedState advance(const TrivializedState& s, const ConeSpec& cone, double h, int depth,
                         int& halvings) {
  const double f_old = std::abs(cone.value(s.alpha));
  TrivializedState next = rk4_step(s, cone, h);
  const double f_new = std::abs(cone.value(next.alpha));
  if (f_new - f_old <= kStepDriftLimit) return next;
  if (depth >= kMaxHalvings) {
    throw StepRejected("f drift per step stays above 1e-6 after 20 halvings");
  }
  ++halvings;
  const TrivializedState mid = advance(s, cone, 0.5 * h, depth + 1, halvings);
  return advance(mid, cone, 0.5 * h, depth + 1, halvings);
}

Vec ray(const Vec& m) {
  const double n = m.norm();
  return n > 0.0 ? Vec(m / n) : m;
}

}  // namespace

void check_state(const TrivializedState& state, const ConeSpec& cone) {
  const Algebra& alg = cone.algebra();
  if (state.alpha.coords.size() != alg.dim()) throw DimensionMismatch("state covector size");
  if (state.g.matrix.rows() != alg.rep_dim() || state.g.matrix.cols() != alg.rep_dim()) {
    throw DimensionMismatch("state group element size");
  }
  if (std::abs(cone.value(state.alpha)) > kSurfaceTol) {
    throw ValidationError("state is not on the equation surface: f = " +
                          std::to_string(cone.value(state.alpha)));
  }
  if (std::abs(state.alpha.coords.norm() - 1.0) > kGaugeTol) {
    throw ValidationError("state covector is not unit-normalized");
  }
}

TrivializedState normalized_state(const TrivializedState& state, const ConeSpec& cone) {
  return {cone.algebra().project_to_group(state.g.matrix), cone.project_to_surface(state.alpha)};
}

CharacteristicField characteristic_field(const TrivializedState& state, const ConeSpec& cone) {
  const AlgebraVector v = cone.gradient(state.alpha);
  Momentum dot = coadjoint_ad(v, state.alpha, cone.algebra());
  dot.coords = -dot.coords;
  return {v, dot};
}

Momentum spatial_momentum(const TrivializedState& state, const Algebra& alg) {
  return coadjoint_Ad(state.g, state.alpha, alg);
}

Trajectory lp_integrate(const TrivializedState& start, const ConeSpec& cone, double T, double h) {
  if (!(h > 0.0) || !(T >= 0.0)) throw ValidationError("lp_integrate needs h > 0 and T >= 0");
  check_state(start, cone);
  const Algebra& alg = cone.algebra();

  Trajectory traj;
  const Vec m0 = ray(spatial_momentum(start, alg).coords);
  auto record = [&](double t, const TrivializedState& s) {
    const double fd = std::abs(cone.value(s.alpha));
    const double md = (ray(spatial_momentum(s, alg).coords) - m0).norm();
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.f_drift.push_back(fd);
    traj.momentum_drift.push_back(md);
    traj.max_f_drift = std::max(traj.max_f_drift, fd);
    traj.max_momentum_drift = std::max(traj.max_momentum_drift, md);
    traj.max_membership_residual = std::max(traj.max_membership_residual, alg.membership_residual(s.g));
  };

  TrivializedState s = start;
  record(0.0, s);
  // whole steps of size h, then one short step to land on T exactly
  const auto steps = static_cast<long long>(std::floor(T / h * (1.0 + 1e-12)));
  for (long long i = 0; i < steps; ++i) {
    s = advance(s, cone, h, 0, traj.halvings);
    record(static_cast<double>(i + 1) * h, s);
  }
  const double rest = T - static_cast<double>(steps) * h;
  if (rest > 1e-9 * h) {
    s = advance(s, cone, rest, 0, traj.halvings);
    record(T, s);
  }
  return traj;
}

SubgroupSpec make_subgroup(const std::string& name, const Algebra& alg) {
  const std::string& g = alg.name();
  if (name == "rotations" && g == "se2") {
    return {name, SubgroupKind::kRotations, {alg.basis_vector(0)}};
  }
  if (name == "translation_line" && g == "se2") {
    SubgroupSpec r{name, SubgroupKind::kTranslationLine, {alg.basis_vector(2)}};
    r.line_direction = Vec2::UnitY();
    return r;
  }
  if (name == "dilations" && g.rfind("hom", 0) == 0) {
    return {name, SubgroupKind::kDilations, {alg.basis_vector(0)}};
  }
  if (name == "axis_rotations" && g == "so3") {
    return {name, SubgroupKind::kAxisRotations, {alg.basis_vector(2)}};
  }
  throw ValidationError("subgroup '" + name + "' is not available for " + g);
}

bool is_subalgebra(const SubgroupSpec& r, const Algebra& alg) {
  const auto k = static_cast<Eigen::Index>(r.generators.size());
  Mat span(alg.dim(), k);
  for (Eigen::Index i = 0; i < k; ++i) span.col(i) = r.generators[static_cast<std::size_t>(i)].coords;
  const auto qr = span.colPivHouseholderQr();
  for (const auto& a : r.generators)
    for (const auto& b : r.generators) {
      const Vec c = bracket(a, b, alg).coords;
      const Vec resid = c - span * qr.solve(c);
      if (resid.norm() > 1e-14) return false;
    }
  return true;
}

Vec quotient_point(const GroupElement& ge, const SubgroupSpec& r, const Algebra& alg) {
  const Mat& g = ge.matrix;
  switch (r.kind) {
    case SubgroupKind::kRotations: {
      if (alg.name() != "se2") break;
      Vec p(2);
      p << g(0, 2), g(1, 2);
      return p;
    }
    case SubgroupKind::kTranslationLine: {
      if (alg.name() != "se2") break;
      const Vec2 dir = g.topLeftCorner(2, 2) * r.line_direction;
      const Vec2 x(g(0, 2), g(1, 2));
      Vec q(2);
      q << std::atan2(dir.y(), dir.x()), x.x() * dir.y() - x.y() * dir.x();
      return q;
    }
    case SubgroupKind::kDilations: {
      if (alg.name().rfind("hom", 0) != 0) break;
      const auto n = g.rows() - 1;
      return g.col(n).head(n);
    }
    case SubgroupKind::kAxisRotations: {
      if (alg.name() != "so3") break;
      return g.col(2);
    }
  }
  throw ValidationError("subgroup " + r.name + " is incompatible with " + alg.name());
}

std::vector<Vec> project(const Trajectory& traj, const SubgroupSpec& r, const Algebra& alg) {
  std::vector<Vec> out;
  out.reserve(traj.states.size());
  for (const auto& s : traj.states) {
    Vec q = quotient_point(s.g, r, alg);
    if (r.kind == SubgroupKind::kTranslationLine && !out.empty()) {
      // keep the direction angle continuous
      const double prev = out.back()(0);
      q(0) += 2.0 * std::numbers::pi * std::round((prev - q(0)) / (2.0 * std::numbers::pi));
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace lie_contact
