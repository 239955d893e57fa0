#pragma once

// Contact reduction data for a Lie algebra acting on the right of CG:
// hyperplanes l = ker(lambda), their stabilizers S(l) = {x : [x, l] in l},
// g_l = S(l) n l, and the resulting classification of homogeneous contact
// spaces. Also the reduced-to-full lift for the se2 wheel system.

#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/lie_core.hpp"
#include "lie_contact/lp_dynamics.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace lie_contact {

/// l = ker(lambda), lambda defined up to positive scale.
struct HyperplaneL {
  Momentum lambda;
};

inline constexpr const char* kCoadjointProjective = "coadjoint-projective";
inline constexpr const char* kPrincipalBundle = "principal-bundle-over-symplectic";

struct ReductionReport {
  std::string algebra;
  Vec lambda;
  std::vector<AlgebraVector> stabilizer_basis;
  std::vector<AlgebraVector> gl_basis;
  int residual_dim = 0;
  std::string case_tag;
  int ambient_dim = 0;
  int reduced_dim = 0;

  int stabilizer_dim() const { return static_cast<int>(stabilizer_basis.size()); }
  int gl_dim() const { return static_cast<int>(gl_basis.size()); }
  /// Tags and dimensions only; used for report-equality classing.
  std::tuple<int, int, int, std::string> key() const {
    return {stabilizer_dim(), gl_dim(), residual_dim, case_tag};
  }
};

HyperplaneL l_of_x(const TrivializedState& state, const Algebra& alg);

/// Orthonormal basis of S(l); rank tolerance 1e-10.
std::vector<AlgebraVector> stabilizer(const HyperplaneL& l, const Algebra& alg);

/// `ambient_dim` defaults to dim CG = 2 dim G - 1.
ReductionReport classify(const HyperplaneL& l, const Algebra& alg, int ambient_dim = -1);

struct OrbitSurvey {
  std::vector<std::tuple<int, int, int, std::string>> classes;
  int samples = 0;
  bool conjugation_invariant = true;
};

/// Samples hyperplanes (generic and coordinate-aligned), conjugates each by
/// random group elements and classes the reports.
OrbitSurvey survey_hyperplane_classes(const Algebra& alg, int samples, int conjugations,
                                      std::uint64_t seed);

/// Quotient map G -> B described in the left-invariant (body) frame: the
/// returned matrix maps body velocities y (tangent g y) to base velocities.
struct FibrationChart {
  std::string name;
  std::function<Mat(const GroupElement&)> body_differential;
};

FibrationChart identity_fibration(const Algebra& alg);
/// G -> G/R for a subgroup R, projecting the body frame onto the orthogonal
/// complement of R's generators.
FibrationChart coset_fibration(const SubgroupSpec& r, const Algebra& alg);

/// Image in the base of the contact hyperplane at the state, as a unit
/// covector. Throws NonTransversal when the hyperplane does not contain the
/// fibre directions (no image hyperplane exists).
Momentum projected_hyperplane(const TrivializedState& state, const Algebra& alg,
                              const FibrationChart& quotient);

/// Point with an oriented line through it. line_angle in [0, 2 pi).
struct Flag {
  Vec2 point;
  double line_angle = 0.0;
};

double normalize_angle(double a);

/// Oriented-line coordinates (psi, d) of the flag's line: direction angle and
/// signed distance x cross dir.
Vec2 line_coordinates(const Flag& flag);

/// Tangent-line family of the wheel in line coordinates: (theta + pi/2, h(theta)).
std::vector<Vec2> tangent_line_family(const WheelCurve& wheel, const std::vector<double>& thetas);

/// Lift of the reduced solution back to flags: point w - (s - s0) T, line
/// through w(theta) along T(theta).
std::vector<Flag> lift_tangent_family(const WheelCurve& wheel, const std::vector<double>& thetas,
                                      double s0);

}  // namespace lie_contact
