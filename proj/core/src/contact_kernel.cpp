#include "lie_contact/contact_kernel.hpp"

#include "lie_contact/errors.hpp"

#include <cmath>
#include <memory>

namespace lie_contact {

namespace {

constexpr double kDalphaStep = 1e-6;
constexpr double kGradientStep = 1e-5;
constexpr double kTangencyTol = 1e-9;
constexpr double kKernelTol = 1e-8;
constexpr double kRepinRatio = 1e-3;

Mat remove_index(const Mat& a, int skip) {
  const int n = static_cast<int>(a.rows());
  Mat out(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == skip) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == skip) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

Mat remove_pair(const Mat& a, int i, int j) {
  const int n = static_cast<int>(a.rows());
  Mat out(n - 2, n - 2);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == i || r == j) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == i || c == j) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

double pfaffian(const Mat& a) {
  const auto n = a.rows();
  if (n == 0) return 1.0;
  if (n % 2 == 1) return 0.0;
  double s = 0.0;
  for (int j = 1; j < n; ++j) {
    if (a(0, j) == 0.0) continue;
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    s += sign * a(0, j) * pfaffian(remove_pair(a, 0, j));
  }
  return s;
}

// Null space basis of the constraint rows together with the restricted form.
struct RestrictedForm {
  Mat kernel_basis;
  Mat restricted;
};

RestrictedForm restrict_form(const ContactChart& chart, const Vec& x) {
  if (!chart.surface_gradient) throw ValidationError("chart has no equation surface");
  const Vec a = chart.alpha_at(x);
  const Vec df = chart.surface_gradient(x);
  Mat rows(2, chart.dim);
  rows.row(0) = a.transpose() / std::max(a.norm(), 1e-300);
  rows.row(1) = df.transpose() / std::max(df.norm(), 1e-300);
  Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
  const Vec s = svd.singularValues();
  if (s(1) < kTangencyTol * s(0)) {
    throw TangencyPoint("contact hyperplane is tangent to the equation surface");
  }
  Mat k = svd.matrixV().rightCols(chart.dim - 2);
  return {k, k.transpose() * chart.dalpha_at(x) * k};
}

}  // namespace

Mat ContactChart::dalpha_at(const Vec& x) const {
  if (dalpha) return dalpha(x);
  Mat d(dim, dim);  // d(r, c) = d alpha_r / d x_c
  for (int c = 0; c < dim; ++c) {
    Vec xp = x;
    Vec xm = x;
    xp(c) += kDalphaStep;
    xm(c) -= kDalphaStep;
    d.col(c) = (alpha(xp) - alpha(xm)) / (2.0 * kDalphaStep);
  }
  return d.transpose() - d;
}

ContactChart standard_contact_chart() {
  ContactChart c;
  c.dim = 3;
  c.alpha = [](const Vec& x) {
    Vec a(3);
    a << -x(1), 0.0, 1.0;
    return a;
  };
  c.dalpha = [](const Vec&) {
    Mat o = Mat::Zero(3, 3);
    o(0, 1) = 1.0;
    o(1, 0) = -1.0;
    return o;
  };
  return c;
}

ContactChart integrable_chart() {
  ContactChart c;
  c.dim = 3;
  c.alpha = [](const Vec&) {
    Vec a(3);
    a << 0.0, 0.0, 1.0;
    return a;
  };
  return c;
}

ContactChart jet_space_chart(int n) {
  ContactChart c;
  c.dim = 2 * n + 1;
  c.alpha = [n](const Vec& z) {
    Vec a = Vec::Zero(2 * n + 1);
    a.head(n) = -z.tail(n);
    a(n) = 1.0;
    return a;
  };
  c.dalpha = [n](const Vec&) {
    Mat o = Mat::Zero(2 * n + 1, 2 * n + 1);
    for (int i = 0; i < n; ++i) {
      // alpha_{x_i} = -p_i
      o(n + 1 + i, i) = -1.0;
      o(i, n + 1 + i) = 1.0;
    }
    return o;
  };
  return c;
}

double contact_defect(const ContactChart& chart, const Vec& x) {
  if (chart.dim % 2 == 0) throw ValidationError("contact charts have odd dimension");
  const Vec a = chart.alpha_at(x);
  const Mat omega = chart.dalpha_at(x);
  const int k = (chart.dim - 1) / 2;
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  double s = 0.0;
  for (int i = 0; i < chart.dim; ++i) {
    if (a(i) == 0.0) continue;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    s += sign * a(i) * pfaffian(remove_index(omega, i));
  }
  return factorial * s;
}

int characteristic_kernel_dimension(const ContactChart& chart, const Vec& x) {
  const RestrictedForm rf = restrict_form(chart, x);
  Eigen::JacobiSVD<Mat> svd(rf.restricted);
  const Vec s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  int count = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= kKernelTol * scale) ++count;
  return count;
}

Vec characteristic_direction(const ContactChart& chart, const Vec& x) {
  const RestrictedForm rf = restrict_form(chart, x);
  Eigen::JacobiSVD<Mat> svd(rf.restricted, Eigen::ComputeFullV);
  const Vec s = svd.singularValues();
  const auto m = s.size();
  const double scale = std::max(1.0, s(0));
  if (m >= 2 && s(m - 2) <= kKernelTol * scale) {
    throw DegenerateKernel("characteristic kernel has dimension > 1");
  }
  Vec u = rf.kernel_basis * svd.matrixV().col(m - 1);
  return u.normalized();
}

Vec EquationChart::dF_dx(const Vec& x, const Vec& p) const {
  if (F_x) return F_x(x, p);
  Vec g(n);
  for (int k = 0; k < n; ++k) {
    const double step = kGradientStep * std::max(1.0, std::abs(x(k)));
    Vec xp = x;
    Vec xm = x;
    xp(k) += step;
    xm(k) -= step;
    g(k) = (F(xp, p) - F(xm, p)) / (2.0 * step);
  }
  return g;
}

EquationChart group_equation_chart(const ConeSpec& cone) {
  struct Data {
    ConeSpec cone;
    GroupChart chart;
  };
  auto data = std::make_shared<Data>(Data{cone, make_group_chart(cone.algebra())});
  EquationChart eq;
  eq.n = data->chart.dim;
  eq.homogeneous = true;
  eq.F = [data](const Vec& x, const Vec& p) {
    const Mat m = right_invariant_fields(data->chart, data->cone.algebra(), x);
    return data->cone.value(Momentum{m.transpose() * p});
  };
  eq.F_p = [data](const Vec& x, const Vec& p) {
    const Mat m = right_invariant_fields(data->chart, data->cone.algebra(), x);
    return Vec(m * data->cone.gradient(Momentum{m.transpose() * p}).coords);
  };
  eq.to_group = [data](const Vec& x) { return data->chart.to_matrix(x); };
  return eq;
}

EquationChart eikonal_chart(int n) {
  EquationChart eq;
  eq.n = n;
  eq.homogeneous = false;
  eq.F = [](const Vec&, const Vec& p) { return p.norm() - 1.0; };
  eq.F_p = [](const Vec&, const Vec& p) { return Vec(p / p.norm()); };
  eq.F_x = [n](const Vec&, const Vec&) { return Vec(Vec::Zero(n)); };
  return eq;
}

ChartPoint chart_point_from_state(const ConeSpec& cone, const GroupElement& g, const Momentum& alpha) {
  const GroupChart chart = make_group_chart(cone.algebra());
  ChartPoint pt;
  pt.x = chart.from_matrix(g.matrix);
  const Mat m = right_invariant_fields(chart, cone.algebra(), pt.x);
  pt.p = m.transpose().colPivHouseholderQr().solve(alpha.coords);
  pt.p.cwiseAbs().maxCoeff(&pt.pin);
  pt.p /= std::abs(pt.p(pt.pin));
  return pt;
}

Vec gauge_coordinates(const ChartPoint& pt) {
  const auto n = pt.x.size();
  Vec z(2 * n - 1);
  z.head(n) = pt.x;
  for (Eigen::Index j = 0, k = n; j < n; ++j) {
    if (j == pt.pin) continue;
    z(k++) = pt.p(j);
  }
  return z;
}

ContactChart gauge_contact_chart(const EquationChart& eq, const ChartPoint& pt) {
  if (!eq.homogeneous || pt.pin < 0) throw ValidationError("gauge charts need a homogeneous equation");
  const int n = eq.n;
  const int pin = pt.pin;
  const double pin_value = pt.p(pin);
  auto unpack = [n, pin, pin_value](const Vec& z) {
    Vec p(n);
    for (int j = 0, k = n; j < n; ++j) p(j) = (j == pin) ? pin_value : z(k++);
    return std::pair<Vec, Vec>{z.head(n), p};
  };
  ContactChart c;
  c.dim = 2 * n - 1;
  c.alpha = [n, unpack](const Vec& z) {
    Vec a = Vec::Zero(2 * n - 1);
    a.head(n) = unpack(z).second;
    return a;
  };
  c.dalpha = [n, pin](const Vec&) {
    Mat o = Mat::Zero(2 * n - 1, 2 * n - 1);
    for (int j = 0, k = n; j < n; ++j) {
      if (j == pin) continue;
      o(k, j) = 1.0;
      o(j, k) = -1.0;
      ++k;
    }
    return o;
  };
  c.surface = [eq, unpack](const Vec& z) {
    const auto [x, p] = unpack(z);
    return eq.F(x, p);
  };
  c.surface_gradient = [eq, n, pin, unpack](const Vec& z) {
    const auto [x, p] = unpack(z);
    Vec g(2 * n - 1);
    g.head(n) = eq.dF_dx(x, p);
    const Vec fp = eq.F_p(x, p);
    for (int j = 0, k = n; j < n; ++j) {
      if (j == pin) continue;
      g(k++) = fp(j);
    }
    return g;
  };
  return c;
}

CharacteristicCurve charpit_integrate(const EquationChart& eq, const ChartPoint& start, double T,
                                      double h) {
  if (!(h > 0.0) || !(T >= 0.0)) throw ValidationError("charpit_integrate needs h > 0 and T >= 0");
  const int n = eq.n;
  if (start.x.size() != n || start.p.size() != n) throw DimensionMismatch("chart point size");
  auto rhs = [&eq, n](const Vec& y) {
    const Vec x = y.head(n);
    const Vec p = y.tail(n);
    Vec d(2 * n);
    d.head(n) = eq.F_p(x, p);
    d.tail(n) = -eq.dF_dx(x, p);
    return d;
  };

  CharacteristicCurve curve;
  ChartPoint pt = start;
  curve.times.push_back(0.0);
  curve.points.push_back(pt);
  curve.max_surface_drift = std::abs(eq.F(pt.x, pt.p));

  // whole steps of size h, then one short step to land on T exactly
  const auto whole = static_cast<long long>(std::floor(T / h * (1.0 + 1e-12)));
  const double rest = T - static_cast<double>(whole) * h;
  const long long steps = whole + (rest > 1e-9 * h ? 1 : 0);
  double t = 0.0;
  for (long long i = 0; i < steps; ++i) {
    const double dt = i < whole ? h : rest;
    Vec y(2 * n);
    y << pt.x, pt.p;
    const Vec k1 = rhs(y);
    const Vec k2 = rhs(y + 0.5 * dt * k1);
    const Vec k3 = rhs(y + 0.5 * dt * k2);
    const Vec k4 = rhs(y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = i < whole ? static_cast<double>(i + 1) * h : T;
    pt.x = y.head(n);
    pt.p = y.tail(n);
    if (eq.homogeneous) {
      int largest = 0;
      const double pmax = pt.p.cwiseAbs().maxCoeff(&largest);
      if (std::abs(pt.p(pt.pin)) < kRepinRatio * pmax) {
        curve.events.push_back("re-pinned covector component " + std::to_string(pt.pin) + " -> " +
                               std::to_string(largest) + " at t = " + std::to_string(t));
        pt.pin = largest;
        ++curve.repins;
      }
      pt.p /= std::abs(pt.p(pt.pin));
    }
    curve.max_surface_drift = std::max(curve.max_surface_drift, std::abs(eq.F(pt.x, pt.p)));
    curve.times.push_back(t);
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace lie_contact
