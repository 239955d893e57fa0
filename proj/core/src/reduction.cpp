#include "lie_contact/reduction.hpp"

#include "lie_contact/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace lie_contact {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kTransversalTol = 1e-8;

// Orthonormal basis of the null space of `a` (columns).
Mat null_space(const Mat& a, int cols) {
  if (a.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankTol * scale) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

std::vector<AlgebraVector> columns(const Mat& m) {
  std::vector<AlgebraVector> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back({m.col(j)});
  return out;
}

Mat stack(const std::vector<AlgebraVector>& vs, int dim) {
  Mat m(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j].coords;
  return m;
}

void require_nonzero(const HyperplaneL& l, const Algebra& alg) {
  if (l.lambda.coords.size() != alg.dim()) throw DimensionMismatch("hyperplane covector size");
  if (!(l.lambda.coords.norm() > 0.0)) throw ValidationError("hyperplane covector must be nonzero");
}

AlgebraVector random_algebra_vector(const Algebra& alg, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  Vec v(alg.dim());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gauss(rng);
  return {v};
}

}  // namespace

HyperplaneL l_of_x(const TrivializedState& state, const Algebra& alg) {
  return {spatial_momentum(state, alg)};
}

std::vector<AlgebraVector> stabilizer(const HyperplaneL& l, const Algebra& alg) {
  require_nonzero(l, alg);
  const int n = alg.dim();
  const Vec& lam = l.lambda.coords;
  const Mat ker = null_space(lam.transpose() / lam.norm(), n);  // basis of l
  // row j, column i: lambda([b_i, y_j])
  Mat a(ker.cols(), n);
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    const AlgebraVector y{ker.col(j)};
    for (int i = 0; i < n; ++i) a(j, i) = lam.dot(bracket(alg.basis_vector(i), y, alg).coords);
  }
  return columns(null_space(a / lam.norm(), n));
}

ReductionReport classify(const HyperplaneL& l, const Algebra& alg, int ambient_dim) {
  ReductionReport rep;
  rep.algebra = alg.name();
  rep.lambda = l.lambda.coords;
  rep.stabilizer_basis = stabilizer(l, alg);
  const int n = alg.dim();
  const Mat s = stack(rep.stabilizer_basis, n);
  if (s.cols() > 0) {
    const Vec& lam = l.lambda.coords;
    const Mat c = null_space((lam.transpose() * s) / lam.norm(), static_cast<int>(s.cols()));
    Mat gl = s * c;
    if (gl.cols() > 0) gl = gl.householderQr().householderQ() * Mat::Identity(n, gl.cols());
    rep.gl_basis = columns(gl);
  }
  rep.residual_dim = rep.stabilizer_dim() - rep.gl_dim();
  rep.case_tag = rep.residual_dim == 0 ? kCoadjointProjective : kPrincipalBundle;
  rep.ambient_dim = ambient_dim < 0 ? 2 * n - 1 : ambient_dim;
  rep.reduced_dim = rep.ambient_dim - 2 * n;
  return rep;
}

OrbitSurvey survey_hyperplane_classes(const Algebra& alg, int samples, int conjugations,
                                      std::uint64_t seed) {
  if (!alg.has_representation()) throw ValidationError("orbit survey needs a matrix representation");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<std::tuple<int, int, int, std::string>> classes;
  OrbitSurvey out;
  out.samples = samples;
  for (int k = 0; k < samples; ++k) {
    Vec lam = random_algebra_vector(alg, rng, 1.0).coords;
    if (k % 2 == 1) {
      // coordinate-aligned hyperplanes hit the non-generic strata
      for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (coin(rng)) lam(i) = 0.0;
      if (lam.norm() == 0.0) lam(static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(lam.size()))) = 1.0;
    }
    lam /= lam.norm();
    const ReductionReport base = classify({Momentum{lam}}, alg);
    classes.insert(base.key());
    for (int c = 0; c < conjugations; ++c) {
      const GroupElement g = exponential(random_algebra_vector(alg, rng, 1.0), 1.0, alg);
      Vec moved = coadjoint_Ad(g, Momentum{lam}, alg).coords;
      moved /= moved.norm();
      const ReductionReport r = classify({Momentum{moved}}, alg);
      if (r.key() != base.key()) out.conjugation_invariant = false;
      classes.insert(r.key());
    }
  }
  out.classes.assign(classes.begin(), classes.end());
  return out;
}

FibrationChart identity_fibration(const Algebra& alg) {
  const int n = alg.dim();
  return {"identity", [n](const GroupElement&) { return Mat(Mat::Identity(n, n)); }};
}

FibrationChart coset_fibration(const SubgroupSpec& r, const Algebra& alg) {
  const int n = alg.dim();
  const Mat gens = stack(r.generators, n);
  const Mat complement = null_space(gens.transpose(), n);
  Mat d = complement.transpose();
  return {"coset:" + r.name, [d](const GroupElement&) { return d; }};
}

Momentum projected_hyperplane(const TrivializedState& state, const Algebra& alg,
                              const FibrationChart& quotient) {
  // Contact form in the body frame: xi(g y) = <coadjoint_Ad(g, alpha), y>.
  const Vec m = coadjoint_Ad(state.g, state.alpha, alg).coords;
  const Mat d = quotient.body_differential(state.g);
  if (d.cols() != alg.dim()) throw DimensionMismatch("fibration differential width");
  // nu D = m must hold exactly: m has to vanish on the fibre directions.
  const Vec nu = d.transpose().colPivHouseholderQr().solve(m);
  const double resid = (d.transpose() * nu - m).norm();
  if (resid > kTransversalTol * std::max(1.0, m.norm()) || nu.norm() < kTransversalTol) {
    throw NonTransversal("contact hyperplane does not contain the fibre of " + quotient.name);
  }
  return {nu / nu.norm()};
}

double normalize_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r -= two_pi;
  return r;
}

Vec2 line_coordinates(const Flag& flag) {
  const Vec2 dir = unit_normal(flag.line_angle);
  return {normalize_angle(flag.line_angle), flag.point.x() * dir.y() - flag.point.y() * dir.x()};
}

std::vector<Vec2> tangent_line_family(const WheelCurve& wheel, const std::vector<double>& thetas) {
  std::vector<Vec2> out;
  out.reserve(thetas.size());
  for (double th : thetas) out.emplace_back(normalize_angle(th + 0.5 * std::numbers::pi), wheel.support(th));
  return out;
}

std::vector<Flag> lift_tangent_family(const WheelCurve& wheel, const std::vector<double>& thetas,
                                      double s0) {
  std::vector<Flag> out;
  out.reserve(thetas.size());
  for (double th : thetas) {
    const Vec2 t = unit_tangent(th);
    out.push_back({wheel.point(th) - (wheel.arc_length(th) - s0) * t,
                   normalize_angle(th + 0.5 * std::numbers::pi)});
  }
  return out;
}

}  // namespace lie_contact
