#pragma once

// Characteristics of a right-invariant equation surface E = G x {f = 0} in
// right-trivialized coordinates (g, alpha):
//
//   g' g^-1 = v = grad f(alpha),     alpha' = -coadjoint_ad(v, alpha).
//
// The spatial momentum m = coadjoint_Ad(g, alpha) is constant along solutions
// (Noether invariant of the right action); its kernel is l(x).

#include "lie_contact/cone_geometry.hpp"
#include "lie_contact/lie_core.hpp"

#include <string>
#include <vector>

namespace lie_contact {

struct TrivializedState {
  GroupElement g;
  Momentum alpha;
};

/// Validates |f(alpha)| <= 1e-8 and unit gauge, throwing ValidationError.
void check_state(const TrivializedState& state, const ConeSpec& cone);

/// Returns `state` with alpha pushed onto f = 0 and normalized.
TrivializedState normalized_state(const TrivializedState& state, const ConeSpec& cone);

struct CharacteristicField {
  AlgebraVector velocity;  // right-trivialized (spatial) group velocity
  Momentum alpha_dot;
};

CharacteristicField characteristic_field(const TrivializedState& state, const ConeSpec& cone);

Momentum spatial_momentum(const TrivializedState& state, const Algebra& alg);

struct Trajectory {
  std::vector<double> times;
  std::vector<TrivializedState> states;
  std::vector<double> f_drift;         // |f(alpha(t))|
  std::vector<double> momentum_drift;  // | m(t)/|m(t)| - m(0)/|m(0)| |
  double max_f_drift = 0.0;
  double max_momentum_drift = 0.0;
  double max_membership_residual = 0.0;
  int halvings = 0;
};

/// Fixed-step RK4 with projection back to the group and the unit gauge after
/// each step. A step whose f drift grows by more than 1e-6 is split in halves,
/// at most 20 times, before StepRejected is thrown. The last step is shortened
/// so that the trajectory ends at T.
Trajectory lp_integrate(const TrivializedState& start, const ConeSpec& cone, double T, double h);

enum class SubgroupKind {
  kRotations,         // se2 -> plane point
  kTranslationLine,   // se2 -> oriented line (psi, d)
  kDilations,         // homN -> affine point
  kAxisRotations,     // so3 -> unit sphere point g e3
};

struct SubgroupSpec {
  std::string name;
  SubgroupKind kind;
  std::vector<AlgebraVector> generators;
  /// Body direction of the translation line (se2 line quotients).
  Vec2 line_direction = Vec2::UnitY();
};

/// Built-ins: "rotations", "translation_line", "dilations", "axis_rotations".
SubgroupSpec make_subgroup(const std::string& name, const Algebra& alg);

/// Exact closure check of the generators under the bracket.
bool is_subalgebra(const SubgroupSpec& r, const Algebra& alg);

/// Coordinates of the coset g R.
Vec quotient_point(const GroupElement& g, const SubgroupSpec& r, const Algebra& alg);

std::vector<Vec> project(const Trajectory& traj, const SubgroupSpec& r, const Algebra& alg);

}  // namespace lie_contact
