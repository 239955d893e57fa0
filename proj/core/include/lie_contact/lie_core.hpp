#pragma once

// Finite-dimensional Lie algebras given by structure constants, together with
// one faithful matrix representation of the corresponding group.
//
// Conventions (fixed for every built-in and relied upon by the CSV columns):
//   [b_i, b_j] = sum_k c(i, j, k) b_k
//   <coadjoint_ad(v, alpha), x> = <alpha, [v, x]>
//   <coadjoint_Ad(g, alpha), x> = <alpha, Ad_g x>,   Ad_g x = g X g^-1
//
// Basis order per built-in:
//   se2     J, e1, e2         (3x3 homogeneous affine matrices)
//   so3     e1, e2, e3        (3x3 skew matrices, [e1, e2] = e3)
//   homN    D, e1 .. eN       ((N+1)x(N+1) affine, D = dilation)
//   sl2     h, e, f           (2x2 traceless)
//   heis3   X, Y, Z           (3x3 strictly upper triangular, [X, Y] = Z)
//   abelianN e1 .. eN         ((N+1)x(N+1) translations)

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace lie_contact {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Element of the Lie algebra, coordinates in the algebra basis.
struct AlgebraVector {
  Vec coords;
};

/// Element of the dual algebra, coordinates in the dual basis.
struct Momentum {
  Vec coords;
};

/// Group element in the algebra's matrix representation.
struct GroupElement {
  Mat matrix;
};

inline double pairing(const Momentum& alpha, const AlgebraVector& x) {
  return alpha.coords.dot(x.coords);
}

enum class GroupKind {
  kSpecialOrthogonal3,
  kEuclidean2,
  kHomothety,
  kSpecialLinear2,
  kHeisenberg3,
  kAbelian,
  kCustom,
};

class Algebra {
 public:
  /// `constants` is row-major c(i, j, k) with size dim^3. `basis` may be empty
  /// for custom algebras without a representation.
  Algebra(std::string name, int dim, std::vector<double> constants,
          std::vector<Mat> basis, GroupKind kind);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  GroupKind kind() const { return kind_; }
  bool has_representation() const { return !basis_.empty(); }
  int rep_dim() const;

  double constant(int i, int j, int k) const {
    return constants_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
  }
  const Mat& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

  AlgebraVector basis_vector(int i) const;
  AlgebraVector zero() const { return {Vec::Zero(dim_)}; }

  Mat matrix_of(const AlgebraVector& v) const;

  /// Coordinates of a matrix in the representation basis. `residual` receives
  /// the Frobenius norm of the part outside the span.
  AlgebraVector decompose(const Mat& m, double* residual = nullptr) const;

  GroupElement identity() const;

  /// Nearest group element to a matrix that drifted off the group.
  GroupElement project_to_group(const Mat& m) const;

  /// Distance-like defect of a matrix from the group submanifold.
  double membership_residual(const GroupElement& g) const;

  double antisymmetry_defect() const;
  double jacobi_defect() const;
  /// Max deviation between matrix commutators and the structure constants.
  double representation_defect() const;

 private:
  std::string name_;
  int dim_;
  std::vector<double> constants_;
  std::vector<Mat> basis_;
  GroupKind kind_;
  Mat decompose_pinv_;  // dim x rep_dim^2
};

/// Built-in algebra by name: se2, so3, hom1..hom3, sl2, heis3, abelian1..abelian4.
Algebra make_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b, const Algebra& alg);
Momentum coadjoint_ad(const AlgebraVector& v, const Momentum& alpha, const Algebra& alg);

/// exp(t v) in the representation.
GroupElement exponential(const AlgebraVector& v, double t, const Algebra& alg);

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& v, const Algebra& alg);
Momentum coadjoint_Ad(const GroupElement& g, const Momentum& alpha, const Algebra& alg);

/// Columns are Ad_g b_i in basis coordinates.
Mat adjoint_matrix(const GroupElement& g, const Algebra& alg);

/// Matrix of ad_v acting on basis coordinates.
Mat ad_matrix(const AlgebraVector& v, const Algebra& alg);

}  // namespace lie_contact
