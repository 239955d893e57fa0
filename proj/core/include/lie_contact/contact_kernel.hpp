#pragma once

// Pointwise contact linear algebra in coordinates, and the classical
// Lagrange-Charpit integrator used as a coordinate-level oracle for the
// trivialized group integrator.

#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/group_charts.hpp"
#include "lie_contact/lie_core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lie_contact {

/// Hyperplane field ker(alpha) on an open set of R^d, optionally with an
/// equation surface F = 0. dalpha follows Omega(a, b) = d_a alpha_b - d_b alpha_a.
struct ContactChart {
  int dim = 0;
  std::function<Vec(const Vec&)> alpha;
  std::function<Mat(const Vec&)> dalpha;  // empty: central differences, step 1e-6
  std::function<double(const Vec&)> surface;
  std::function<Vec(const Vec&)> surface_gradient;

  Vec alpha_at(const Vec& x) const { return alpha(x); }
  Mat dalpha_at(const Vec& x) const;
};

/// alpha = dz - y dx on (x, y, z).
ContactChart standard_contact_chart();
/// alpha = dz on (x, y, z).
ContactChart integrable_chart();
/// Jet space J^1(R^n), coordinates (x_1..x_n, u, p_1..p_n), alpha = du - p.dx.
ContactChart jet_space_chart(int n);

/// Coefficient of alpha ^ (dalpha)^k on e_1 ^ ... ^ e_{2k+1}.
double contact_defect(const ContactChart& chart, const Vec& x);

/// Dimension of the kernel of dalpha restricted to ker(alpha) n ker(dF).
int characteristic_kernel_dimension(const ContactChart& chart, const Vec& x);

/// Unit vector spanning the characteristic line at a point of F = 0.
/// Throws TangencyPoint if alpha is parallel to dF, DegenerateKernel if the
/// kernel is more than one-dimensional.
Vec characteristic_direction(const ContactChart& chart, const Vec& x);

/// First-order equation F(x, p) = 0 on the cotangent coordinates of an
/// n-dimensional chart. When `homogeneous` is set F has degree one in p and
/// covectors are only meaningful up to positive scale.
struct EquationChart {
  int n = 0;
  bool homogeneous = true;
  std::function<double(const Vec&, const Vec&)> F;
  std::function<Vec(const Vec&, const Vec&)> F_p;
  std::function<Vec(const Vec&, const Vec&)> F_x;  // empty: central differences
  std::function<Mat(const Vec&)> to_group;        // set for group charts

  Vec dF_dx(const Vec& x, const Vec& p) const;
};

/// Point of an EquationChart. For homogeneous charts p(pin) = +-1.
struct ChartPoint {
  Vec x;
  Vec p;
  int pin = -1;
};

/// Right-invariant equation surface of a cone, F(x, p) = f(M(x)^T p) where the
/// columns of M are the right-invariant fields in the chart.
EquationChart group_equation_chart(const ConeSpec& cone);

/// F(x, p) = |p| - 1 on R^n (not homogeneous).
EquationChart eikonal_chart(int n);

/// Chart point of a right-trivialized state (g, alpha), gauge pinned on the
/// largest covector component.
ChartPoint chart_point_from_state(const ConeSpec& cone, const GroupElement& g, const Momentum& alpha);

/// Contact chart of the projectivized cotangent bundle in the gauge of `pt`,
/// coordinates (x, p without the pinned slot), with surface F.
ContactChart gauge_contact_chart(const EquationChart& eq, const ChartPoint& pt);
Vec gauge_coordinates(const ChartPoint& pt);

struct CharacteristicCurve {
  std::vector<double> times;
  std::vector<ChartPoint> points;
  double max_surface_drift = 0.0;
  int repins = 0;
  std::vector<std::string> events;
};

/// Classical RK4 on xdot = F_p, pdot = -F_x. For homogeneous charts the pinned
/// component is renormalized to +-1 after every step and re-pinned on the
/// largest component when it degenerates.
CharacteristicCurve charpit_integrate(const EquationChart& eq, const ChartPoint& start, double T,
                                      double h);

}  // namespace lie_contact
