#include "lie_contact/lie_core.hpp"

#include "lie_contact/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

namespace lie_contact {

namespace {

constexpr double kDecomposeTol = 1e-8;

void check_dim(const Vec& v, int dim, const char* what) {
  if (v.size() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(dim) +
                            " coordinates, got " + std::to_string(v.size()));
  }
}

Mat unit(int n, int r, int c) {
  Mat m = Mat::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

struct Table {
  int dim;
  std::vector<double> c;
  Table(int n) : dim(n), c(static_cast<std::size_t>(n * n * n), 0.0) {}
  // Sets [b_i, b_j] += s b_k and the antisymmetric partner.
  void set(int i, int j, int k, double s) {
    c[static_cast<std::size_t>((i * dim + j) * dim + k)] = s;
    c[static_cast<std::size_t>((j * dim + i) * dim + k)] = -s;
  }
};

Algebra make_se2() {
  Table t(3);
  t.set(0, 1, 2, 1.0);   // [J, e1] = e2
  t.set(0, 2, 1, -1.0);  // [J, e2] = -e1
  Mat j = unit(3, 1, 0) - unit(3, 0, 1);
  return Algebra("se2", 3, t.c, {j, unit(3, 0, 2), unit(3, 1, 2)}, GroupKind::kEuclidean2);
}

Algebra make_so3() {
  Table t(3);
  t.set(0, 1, 2, 1.0);
  t.set(1, 2, 0, 1.0);
  t.set(2, 0, 1, 1.0);
  std::vector<Mat> b;
  b.push_back(unit(3, 2, 1) - unit(3, 1, 2));
  b.push_back(unit(3, 0, 2) - unit(3, 2, 0));
  b.push_back(unit(3, 1, 0) - unit(3, 0, 1));
  return Algebra("so3", 3, t.c, std::move(b), GroupKind::kSpecialOrthogonal3);
}

Algebra make_hom(int n) {
  Table t(n + 1);
  for (int i = 1; i <= n; ++i) t.set(0, i, i, 1.0);  // [D, e_i] = e_i
  std::vector<Mat> b;
  Mat d = Mat::Zero(n + 1, n + 1);
  d.topLeftCorner(n, n).setIdentity();
  b.push_back(d);
  for (int i = 0; i < n; ++i) b.push_back(unit(n + 1, i, n));
  return Algebra("hom" + std::to_string(n), n + 1, t.c, std::move(b), GroupKind::kHomothety);
}

Algebra make_sl2() {
  Table t(3);
  t.set(0, 1, 1, 2.0);   // [h, e] = 2e
  t.set(0, 2, 2, -2.0);  // [h, f] = -2f
  t.set(1, 2, 0, 1.0);   // [e, f] = h
  Mat h = unit(2, 0, 0) - unit(2, 1, 1);
  return Algebra("sl2", 3, t.c, {h, unit(2, 0, 1), unit(2, 1, 0)}, GroupKind::kSpecialLinear2);
}

Algebra make_heis3() {
  Table t(3);
  t.set(0, 1, 2, 1.0);
  return Algebra("heis3", 3, t.c, {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)},
                 GroupKind::kHeisenberg3);
}

Algebra make_abelian(int n) {
  Table t(n);
  std::vector<Mat> b;
  for (int i = 0; i < n; ++i) b.push_back(unit(n + 1, i, n));
  return Algebra("abelian" + std::to_string(n), n, t.c, std::move(b), GroupKind::kAbelian);
}

Mat polar_orthogonal(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    Mat u = svd.matrixU();
    u.col(u.cols() - 1) *= -1.0;
    r = u * svd.matrixV().transpose();
  }
  return r;
}

double last_row_defect(const Mat& m) {
  const auto n = m.rows() - 1;
  double d = std::abs(m(n, n) - 1.0);
  for (Eigen::Index c = 0; c < n; ++c) d += std::abs(m(n, c));
  return d;
}

}  // namespace

Algebra::Algebra(std::string name, int dim, std::vector<double> constants,
                 std::vector<Mat> basis, GroupKind kind)
    : name_(std::move(name)),
      dim_(dim),
      constants_(std::move(constants)),
      basis_(std::move(basis)),
      kind_(kind) {
  if (dim_ <= 0) throw ValidationError("algebra dimension must be positive");
  if (constants_.size() != static_cast<std::size_t>(dim_ * dim_ * dim_)) {
    throw DimensionMismatch("structure constants must have dim^3 entries");
  }
  if (!basis_.empty()) {
    if (static_cast<int>(basis_.size()) != dim_) {
      throw DimensionMismatch("matrix basis must have one matrix per basis vector");
    }
    const auto m = basis_.front().rows();
    Mat stacked(m * m, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (basis_[static_cast<std::size_t>(i)].rows() != m ||
          basis_[static_cast<std::size_t>(i)].cols() != m) {
        throw DimensionMismatch("matrix basis entries must be square of equal size");
      }
      stacked.col(i) = basis_[static_cast<std::size_t>(i)].reshaped();
    }
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(stacked);
    if (cod.rank() != dim_) throw ValidationError("matrix basis is linearly dependent");
    decompose_pinv_ = cod.pseudoInverse();
  }
}

int Algebra::rep_dim() const {
  return basis_.empty() ? 0 : static_cast<int>(basis_.front().rows());
}

AlgebraVector Algebra::basis_vector(int i) const {
  Vec v = Vec::Zero(dim_);
  v(i) = 1.0;
  return {v};
}

Mat Algebra::matrix_of(const AlgebraVector& v) const {
  if (!has_representation()) throw ValidationError(name_ + " has no matrix representation");
  check_dim(v.coords, dim_, "matrix_of");
  Mat m = Mat::Zero(rep_dim(), rep_dim());
  for (int i = 0; i < dim_; ++i) m += v.coords(i) * basis_[static_cast<std::size_t>(i)];
  return m;
}

AlgebraVector Algebra::decompose(const Mat& m, double* residual) const {
  if (!has_representation()) throw ValidationError(name_ + " has no matrix representation");
  Vec flat = m.reshaped();
  Vec coords = decompose_pinv_ * flat;
  if (residual) {
    Vec back = Vec::Zero(flat.size());
    for (int i = 0; i < dim_; ++i) back += coords(i) * basis_[static_cast<std::size_t>(i)].reshaped();
    *residual = (flat - back).norm();
  }
  return {coords};
}

GroupElement Algebra::identity() const {
  return {Mat::Identity(rep_dim(), rep_dim())};
}

GroupElement Algebra::project_to_group(const Mat& m) const {
  Mat g = m;
  const auto n = g.rows();
  switch (kind_) {
    case GroupKind::kSpecialOrthogonal3:
      g = polar_orthogonal(m);
      break;
    case GroupKind::kEuclidean2:
      g.topLeftCorner(2, 2) = polar_orthogonal(m.topLeftCorner(2, 2));
      g.row(2) << 0.0, 0.0, 1.0;
      break;
    case GroupKind::kHomothety: {
      const double scale = m.topLeftCorner(n - 1, n - 1).trace() / static_cast<double>(n - 1);
      g.topLeftCorner(n - 1, n - 1) = scale * Mat::Identity(n - 1, n - 1);
      g.row(n - 1).setZero();
      g(n - 1, n - 1) = 1.0;
      break;
    }
    case GroupKind::kSpecialLinear2: {
      const double det = m.determinant();
      if (det > 0.0) g = m / std::sqrt(det);
      break;
    }
    case GroupKind::kHeisenberg3:
      g(1, 0) = g(2, 0) = g(2, 1) = 0.0;
      g(0, 0) = g(1, 1) = g(2, 2) = 1.0;
      break;
    case GroupKind::kAbelian:
      g.topLeftCorner(n - 1, n - 1).setIdentity();
      g.row(n - 1).setZero();
      g(n - 1, n - 1) = 1.0;
      break;
    case GroupKind::kCustom:
      break;
  }
  return {g};
}

double Algebra::membership_residual(const GroupElement& ge) const {
  const Mat& g = ge.matrix;
  const auto n = g.rows();
  switch (kind_) {
    case GroupKind::kSpecialOrthogonal3:
      return (g.transpose() * g - Mat::Identity(3, 3)).norm() + std::abs(g.determinant() - 1.0);
    case GroupKind::kEuclidean2: {
      Mat r = g.topLeftCorner(2, 2);
      return (r.transpose() * r - Mat::Identity(2, 2)).norm() + std::abs(r.determinant() - 1.0) +
             last_row_defect(g);
    }
    case GroupKind::kHomothety: {
      Mat block = g.topLeftCorner(n - 1, n - 1);
      const double scale = g(0, 0);
      if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
      return (block - scale * Mat::Identity(n - 1, n - 1)).norm() + last_row_defect(g);
    }
    case GroupKind::kSpecialLinear2:
      return std::abs(g.determinant() - 1.0);
    case GroupKind::kHeisenberg3:
      return std::abs(g(1, 0)) + std::abs(g(2, 0)) + std::abs(g(2, 1)) + std::abs(g(0, 0) - 1.0) +
             std::abs(g(1, 1) - 1.0) + std::abs(g(2, 2) - 1.0);
    case GroupKind::kAbelian:
      return (g.topLeftCorner(n - 1, n - 1) - Mat::Identity(n - 1, n - 1)).norm() +
             last_row_defect(g);
    case GroupKind::kCustom:
      return 0.0;
  }
  return 0.0;
}

double Algebra::antisymmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        worst = std::max(worst, std::abs(constant(i, j, k) + constant(j, i, k)));
  return worst;
}

double Algebra::jacobi_defect() const {
  // [[b_i, b_j], b_l] + cyclic, expanded in constants.
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int l = 0; l < dim_; ++l)
        for (int m = 0; m < dim_; ++m) {
          double s = 0.0;
          for (int k = 0; k < dim_; ++k) {
            s += constant(i, j, k) * constant(k, l, m) + constant(j, l, k) * constant(k, i, m) +
                 constant(l, i, k) * constant(k, j, m);
          }
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

double Algebra::representation_defect() const {
  if (!has_representation()) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Mat comm = basis(i) * basis(j) - basis(j) * basis(i);
      Mat expected = Mat::Zero(rep_dim(), rep_dim());
      for (int k = 0; k < dim_; ++k) expected += constant(i, j, k) * basis(k);
      worst = std::max(worst, (comm - expected).cwiseAbs().maxCoeff());
    }
  return worst;
}

Algebra make_algebra(std::string_view name) {
  if (name == "se2") return make_se2();
  if (name == "so3") return make_so3();
  if (name == "sl2") return make_sl2();
  if (name == "heis3") return make_heis3();
  for (int n = 1; n <= 3; ++n)
    if (name == "hom" + std::to_string(n)) return make_hom(n);
  for (int n = 1; n <= 4; ++n)
    if (name == "abelian" + std::to_string(n)) return make_abelian(n);
  throw UnknownGroup("unknown group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() {
  return {"se2", "so3", "hom1", "hom2", "hom3", "sl2", "heis3",
          "abelian1", "abelian2", "abelian3", "abelian4"};
}

AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b, const Algebra& alg) {
  const int n = alg.dim();
  check_dim(a.coords, n, "bracket");
  check_dim(b.coords, n, "bracket");
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a.coords(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = a.coords(i) * b.coords(j);
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) out(k) += w * alg.constant(i, j, k);
    }
  }
  return {out};
}

Mat ad_matrix(const AlgebraVector& v, const Algebra& alg) {
  const int n = alg.dim();
  check_dim(v.coords, n, "ad_matrix");
  Mat ad = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) ad(k, j) += v.coords(i) * alg.constant(i, j, k);
  return ad;
}

Momentum coadjoint_ad(const AlgebraVector& v, const Momentum& alpha, const Algebra& alg) {
  check_dim(alpha.coords, alg.dim(), "coadjoint_ad");
  return {ad_matrix(v, alg).transpose() * alpha.coords};
}

GroupElement exponential(const AlgebraVector& v, double t, const Algebra& alg) {
  Mat x = t * alg.matrix_of(v);
  return {x.exp()};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  return {a.matrix * b.matrix};
}

GroupElement inverse(const GroupElement& g) {
  return {g.matrix.inverse()};
}

AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& v, const Algebra& alg) {
  check_dim(v.coords, alg.dim(), "adjoint");
  Mat conj = g.matrix * alg.matrix_of(v) * g.matrix.inverse();
  double residual = 0.0;
  AlgebraVector out = alg.decompose(conj, &residual);
  if (residual > kDecomposeTol * std::max(1.0, conj.norm())) {
    throw NonGroupElement("conjugation leaves the algebra (residual " + std::to_string(residual) +
                          ")");
  }
  return out;
}

Mat adjoint_matrix(const GroupElement& g, const Algebra& alg) {
  const int n = alg.dim();
  Mat ad(n, n);
  for (int i = 0; i < n; ++i) ad.col(i) = adjoint(g, alg.basis_vector(i), alg).coords;
  return ad;
}

Momentum coadjoint_Ad(const GroupElement& g, const Momentum& alpha, const Algebra& alg) {
  check_dim(alpha.coords, alg.dim(), "coadjoint_Ad");
  return {adjoint_matrix(g, alg).transpose() * alpha.coords};
}

}  // namespace lie_contact
