#include "lie_contact/group_charts.hpp"

#include "lie_contact/errors.hpp"

#include <cmath>

namespace lie_contact {

namespace {

Mat rot_z(double a) {
  Mat r = Mat::Identity(3, 3);
  r(0, 0) = std::cos(a);
  r(0, 1) = -std::sin(a);
  r(1, 0) = std::sin(a);
  r(1, 1) = std::cos(a);
  return r;
}

Mat rot_z_d(double a) {
  Mat r = Mat::Zero(3, 3);
  r(0, 0) = -std::sin(a);
  r(0, 1) = -std::cos(a);
  r(1, 0) = std::cos(a);
  r(1, 1) = -std::sin(a);
  return r;
}

Mat rot_y(double a) {
  Mat r = Mat::Identity(3, 3);
  r(0, 0) = std::cos(a);
  r(0, 2) = std::sin(a);
  r(2, 0) = -std::sin(a);
  r(2, 2) = std::cos(a);
  return r;
}

Mat rot_y_d(double a) {
  Mat r = Mat::Zero(3, 3);
  r(0, 0) = -std::sin(a);
  r(0, 2) = std::cos(a);
  r(2, 0) = -std::cos(a);
  r(2, 2) = -std::sin(a);
  return r;
}

GroupChart se2_chart() {
  GroupChart c;
  c.name = "se2";
  c.dim = 3;
  c.to_matrix = [](const Vec& x) {
    Mat g = Mat::Identity(3, 3);
    g.topLeftCorner(3, 3) = rot_z(x(0));
    g(2, 2) = 1.0;
    g(0, 2) = x(1);
    g(1, 2) = x(2);
    return g;
  };
  c.partials = [](const Vec& x) {
    Mat d0 = Mat::Zero(3, 3);
    d0.topLeftCorner(2, 2) = rot_z_d(x(0)).topLeftCorner(2, 2);
    Mat d1 = Mat::Zero(3, 3);
    d1(0, 2) = 1.0;
    Mat d2 = Mat::Zero(3, 3);
    d2(1, 2) = 1.0;
    return std::vector<Mat>{d0, d1, d2};
  };
  c.from_matrix = [](const Mat& g) {
    Vec x(3);
    x << std::atan2(g(1, 0), g(0, 0)), g(0, 2), g(1, 2);
    return x;
  };
  return c;
}

GroupChart hom_chart(int n) {
  GroupChart c;
  c.name = "hom" + std::to_string(n);
  c.dim = n + 1;
  c.to_matrix = [n](const Vec& x) {
    Mat g = Mat::Identity(n + 1, n + 1);
    g.topLeftCorner(n, n) *= std::exp(x(0));
    for (int i = 0; i < n; ++i) g(i, n) = x(i + 1);
    return g;
  };
  c.partials = [n](const Vec& x) {
    std::vector<Mat> out;
    Mat d0 = Mat::Zero(n + 1, n + 1);
    d0.topLeftCorner(n, n) = std::exp(x(0)) * Mat::Identity(n, n);
    out.push_back(d0);
    for (int i = 0; i < n; ++i) {
      Mat d = Mat::Zero(n + 1, n + 1);
      d(i, n) = 1.0;
      out.push_back(d);
    }
    return out;
  };
  c.from_matrix = [n](const Mat& g) {
    Vec x(n + 1);
    x(0) = std::log(g(0, 0));
    for (int i = 0; i < n; ++i) x(i + 1) = g(i, n);
    return x;
  };
  return c;
}

GroupChart so3_chart() {
  GroupChart c;
  c.name = "so3";
  c.dim = 3;
  c.to_matrix = [](const Vec& x) { return Mat(rot_z(x(0)) * rot_y(x(1)) * rot_z(x(2))); };
  c.partials = [](const Vec& x) {
    return std::vector<Mat>{rot_z_d(x(0)) * rot_y(x(1)) * rot_z(x(2)),
                            rot_z(x(0)) * rot_y_d(x(1)) * rot_z(x(2)),
                            rot_z(x(0)) * rot_y(x(1)) * rot_z_d(x(2))};
  };
  c.from_matrix = [](const Mat& g) {
    Vec x(3);
    const double ct = std::clamp(g(2, 2), -1.0, 1.0);
    x(1) = std::acos(ct);
    if (std::sin(x(1)) < 1e-9) throw NumericalError("so3 chart is singular at this rotation");
    x(0) = std::atan2(g(1, 2), g(0, 2));
    x(2) = std::atan2(g(2, 1), -g(2, 0));
    return x;
  };
  return c;
}

}  // namespace

GroupChart make_group_chart(const Algebra& alg) {
  const std::string& n = alg.name();
  if (n == "se2") return se2_chart();
  if (n == "so3") return so3_chart();
  for (int k = 1; k <= 3; ++k)
    if (n == "hom" + std::to_string(k)) return hom_chart(k);
  throw UnknownGroup("no coordinate chart for group " + n);
}

Mat right_invariant_fields(const GroupChart& chart, const Algebra& alg, const Vec& x) {
  const std::vector<Mat> d = chart.partials(x);
  const Mat g = chart.to_matrix(x);
  const auto m2 = g.size();
  Mat jac(m2, chart.dim);
  for (int k = 0; k < chart.dim; ++k) jac.col(k) = d[static_cast<std::size_t>(k)].reshaped();
  Mat rhs(m2, alg.dim());
  for (int i = 0; i < alg.dim(); ++i) rhs.col(i) = (alg.basis(i) * g).reshaped();
  return jac.colPivHouseholderQr().solve(rhs);
}

}  // namespace lie_contact
