#pragma once

#include "lie_contact/lie_core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lie_contact {

/// Local coordinates on a matrix group.
///   se2:  (phi, x, y)            g = [[R(phi), (x, y)], [0, 1]]
///   homN: (log s, x_1 .. x_N)    g = [[s I, x], [0, 1]]
///   so3:  (phi, theta, psi)      g = Rz(phi) Ry(theta) Rz(psi), theta in (0, pi)
struct GroupChart {
  std::string name;
  int dim = 0;
  std::function<Mat(const Vec&)> to_matrix;
  /// d(to_matrix)/dx_k for k = 0 .. dim-1.
  std::function<std::vector<Mat>(const Vec&)> partials;
  std::function<Vec(const Mat&)> from_matrix;
};

GroupChart make_group_chart(const Algebra& alg);

/// Columns are the chart components of the right-invariant fields g -> b_i g.
Mat right_invariant_fields(const GroupChart& chart, const Algebra& alg, const Vec& x);

}  // namespace lie_contact
