#include "lie_contact/errors.hpp"
#include "lie_contact/lie_core.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lie_contact;
using lie_contact::testing::Gen;
using lie_contact::testing::max_abs;

namespace {

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis, double angle) {
  const Eigen::Vector3d k = axis.normalized();
  Eigen::Matrix3d kx;
  kx << 0, -k.z(), k.y(), k.z(), 0, -k.x(), -k.y(), k.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(angle) * kx + (1.0 - std::cos(angle)) * kx * kx;
}

Eigen::Vector3d v3(const Vec& v) { return {v(0), v(1), v(2)}; }

}  // namespace

TEST_CASE("built-in tables are Lie algebras matching their representations") {
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    CHECK(alg.antisymmetry_defect() == 0.0);
    CHECK(alg.jacobi_defect() <= 1e-12);
    CHECK(alg.representation_defect() <= 1e-12);
  }
}

TEST_CASE("unknown group names are rejected") {
  CHECK_THROWS_AS(make_algebra("e8"), UnknownGroup);
  CHECK_THROWS_AS(make_algebra("hom9"), UnknownGroup);
}

TEST_CASE("bracket tables") {
  const Algebra se2 = make_algebra("se2");
  CHECK(max_abs(bracket(se2.basis_vector(0), se2.basis_vector(1), se2).coords - se2.basis_vector(2).coords) == 0.0);

  const Algebra sl2 = make_algebra("sl2");
  const Vec he = bracket(sl2.basis_vector(0), sl2.basis_vector(1), sl2).coords;
  CHECK(max_abs(he - 2.0 * sl2.basis_vector(1).coords) == 0.0);

  const Algebra heis = make_algebra("heis3");
  CHECK(max_abs(bracket(heis.basis_vector(0), heis.basis_vector(1), heis).coords - heis.basis_vector(2).coords) ==
        0.0);

  Gen gen(1);
  for (const std::string& name : builtin_algebra_names()) {
    const Algebra alg = make_algebra(name);
    const AlgebraVector a = gen.algebra_vector(alg);
    CHECK(bracket(a, a, alg).coords.norm() <= 1e-14);
  }
}

TEST_CASE("so3 bracket and coadjoint action follow the cross product") {
  const Algebra so3 = make_algebra("so3");
  Gen gen(2);
  for (int k = 0; k < 20; ++k) {
    const Vec a = gen.vec(3);
    const Vec b = gen.vec(3);
    const Eigen::Vector3d cross = v3(a).cross(v3(b));
    CHECK((v3(bracket({a}, {b}, so3).coords) - cross).norm() <= 1e-14);
    // <ad*_v alpha, x> = alpha . (v x x) = x . (alpha x v)
    const Eigen::Vector3d expected = v3(b).cross(v3(a));
    CHECK((v3(coadjoint_ad({a}, {b}, so3).coords) - expected).norm() <= 1e-14);
  }
}

TEST_CASE("coadjoint_ad pairs with the bracket") {
  Gen gen(3);
  for (const std::string& name : builtin_algebra_names()) {
    const Algebra alg = make_algebra(name);
    for (int k = 0; k < 10; ++k) {
      const AlgebraVector v = gen.algebra_vector(alg);
      const AlgebraVector x = gen.algebra_vector(alg);
      const Momentum a = gen.momentum(alg);
      CHECK(pairing(coadjoint_ad(v, a, alg), x) == doctest::Approx(pairing(a, bracket(v, x, alg))).epsilon(1e-12));
    }
  }
  const Algebra se2 = make_algebra("se2");
  Momentum a{Vec::Zero(3)};
  a.coords << 0.3, -1.1, 2.5;
  CHECK(coadjoint_ad(se2.basis_vector(0), a, se2).coords(1) == doctest::Approx(2.5));
  const Algebra ab = make_algebra("abelian3");
  CHECK(coadjoint_ad(gen.algebra_vector(ab), gen.momentum(ab), ab).coords.norm() == 0.0);
}

TEST_CASE("exponential closed forms") {
  const Algebra so3 = make_algebra("so3");
  const Algebra se2 = make_algebra("se2");
  for (const std::string& name : builtin_algebra_names()) {
    const Algebra alg = make_algebra(name);
    CHECK(max_abs(exponential(alg.basis_vector(0), 0.0, alg).matrix - alg.identity().matrix) == 0.0);
  }
  CHECK(max_abs(exponential(so3.basis_vector(2), std::numbers::pi, so3).matrix -
                Mat(rodrigues(Eigen::Vector3d::UnitZ(), std::numbers::pi))) <= 1e-14);
  Gen gen(4);
  for (int k = 0; k < 10; ++k) {
    const Vec w = gen.vec(3);
    const double t = gen.uniform(-2.0, 2.0);
    CHECK(max_abs(exponential({w}, t, so3).matrix - Mat(rodrigues(v3(w), t * w.norm()))) <= 1e-12);
  }
  const Mat tr = exponential(se2.basis_vector(1), 1.7, se2).matrix;
  Mat expected = Mat::Identity(3, 3);
  expected(0, 2) = 1.7;
  CHECK(max_abs(tr - expected) <= 1e-15);
}

TEST_CASE("adjoint action by conjugation") {
  const Algebra se2 = make_algebra("se2");
  const GroupElement quarter = exponential(se2.basis_vector(0), std::numbers::pi / 2.0, se2);
  CHECK(max_abs(adjoint(quarter, se2.basis_vector(1), se2).coords - se2.basis_vector(2).coords) <= 1e-14);

  Gen gen(5);
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    const AlgebraVector v = gen.algebra_vector(alg);
    CHECK(max_abs(adjoint(alg.identity(), v, alg).coords - v.coords) <= 1e-15);
    CHECK(max_abs(adjoint(exponential(v, 0.8, alg), v, alg).coords - v.coords) <= 1e-12);
    const GroupElement g = gen.group_element(alg);
    const Mat conj = g.matrix * alg.matrix_of(v) * g.matrix.inverse();
    CHECK(max_abs(alg.matrix_of(adjoint(g, v, alg)) - conj) <= 1e-12);
  }
}

TEST_CASE("adjoint rejects matrices off the group") {
  const Algebra so3 = make_algebra("so3");
  GroupElement bad{Mat::Identity(3, 3)};
  bad.matrix(0, 0) = 2.0;
  CHECK_THROWS_AS(adjoint(bad, so3.basis_vector(2), so3), NonGroupElement);
}

TEST_CASE("adjoint generator check by finite differences") {
  Gen gen(6);
  const double h = 1e-5;
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    const AlgebraVector w = gen.algebra_vector(alg);
    const AlgebraVector v = gen.algebra_vector(alg);
    const Vec fd = (adjoint(exponential(w, h, alg), v, alg).coords - v.coords) / h;
    CHECK((fd - bracket(w, v, alg).coords).norm() <= 1e-3);
  }
}

TEST_CASE("coadjoint_Ad is contravariant") {
  Gen gen(7);
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    for (int k = 0; k < 5; ++k) {
      const GroupElement g1 = gen.group_element(alg);
      const GroupElement g2 = gen.group_element(alg);
      const Momentum a = gen.momentum(alg);
      const Vec lhs = coadjoint_Ad(compose(g1, g2), a, alg).coords;
      const Vec rhs = coadjoint_Ad(g2, coadjoint_Ad(g1, a, alg), alg).coords;
      CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, lhs.norm()));
      const AlgebraVector x = gen.algebra_vector(alg);
      CHECK(pairing(coadjoint_Ad(g1, a, alg), x) ==
            doctest::Approx(pairing(a, adjoint(g1, x, alg))).epsilon(1e-10));
    }
  }
}

TEST_CASE("projection back to the group") {
  Gen gen(8);
  for (const std::string& name : builtin_algebra_names()) {
    CAPTURE(name);
    const Algebra alg = make_algebra(name);
    const GroupElement g = gen.group_element(alg);
    Mat noisy = g.matrix;
    for (Eigen::Index i = 0; i < noisy.size(); ++i) noisy(i) += 1e-6 * gen.normal();
    const GroupElement p = alg.project_to_group(noisy);
    CHECK(alg.membership_residual(p) <= 1e-12);
    CHECK(max_abs(p.matrix - g.matrix) <= 1e-4);
  }
}
