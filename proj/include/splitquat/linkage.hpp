#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitquat/factorization.hpp"
#include "splitquat/geometry.hpp"

namespace splitquat {

/// One leg (h1, h2) of the linkage: fixed joint [h1 - conj h1], moving joint
/// [h2 - conj h2] in the initial position (t -> infinity).
struct Leg {
  Factorization factorization;
  ProjPoint fixed_joint;
  ProjPoint moving_joint_initial;
  std::optional<Label> label;
};

Leg make_leg(const Factorization& f);

struct FourBar {
  QuatPoly source;
  RealPoly norm;
  RootReport norm_roots;
  std::vector<Leg> legs;
  /// complement[i] is the index of the leg complementary to leg i.
  std::vector<std::optional<std::size_t>> complement;
  std::vector<std::string> warnings;

  [[nodiscard]] Signature signature() const { return source.signature(); }
  [[nodiscard]] Backend backend() const { return source.backend(); }
  /// Complementary pairs (i, j), i < j.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> complementary_pairs() const;
  /// Index of the leg carrying the label, if any.
  [[nodiscard]] std::optional<std::size_t> find(const Label& label) const;
};

/// Throws NonGeneric for non-generic input.
FourBar build_linkage(const QuatPoly& c);

/// eta(t) = (t - h1)(h2 - conj h2)(t - conj h1).
QuatPoly joint_path_polynomial(const Leg& leg);
/// [eta(t)]. Throws Degenerate where eta(t) = 0.
ProjPoint joint_path(const Leg& leg, const Scalar& t);

/// Coupler conic of two complementary legs H (h1, h2) and K (k1, k2).
struct CouplerConic {
  Leg leg_h;
  Leg leg_k;
  QuatPoly eta;    // path of the moving joint of leg_h
  QuatPoly kappa;  // path of the moving joint of leg_k
  /// (h1 x eta) x (k1 x kappa).
  QuatPoly sigma;
  /// Monic common factor of the coordinates of sigma.
  RealPoly content;
  /// Quadratic G with sigma = lambda * content * G for a constant lambda.
  QuatPoly reduced;
  /// G x G'; its value at t is the tangent of the conic at [G(t)].
  QuatPoly tangent;
  /// <G x G', G x G'>, whose real roots are the null-tangent parameters.
  RealPoly quartic;
  RootReport null_tangent_roots;
  std::vector<ProjLine> null_tangents;
  /// Real intersection points of null tangents, one per real quadratic
  /// divisor of the quartic.
  std::vector<ProjPoint> focal_points;
  std::vector<std::string> warnings;

  /// [G(t)].
  [[nodiscard]] ProjPoint point(const Scalar& t) const;
  /// [G(t) x G'(t)]. Throws Degenerate where it vanishes.
  [[nodiscard]] ProjLine tangent_at(const Scalar& t) const;
  /// Tangent at a possibly irrational parameter (surds evaluate in floats).
  [[nodiscard]] ProjLine tangent_at(const RealRoot& r) const;
};

/// Throws Degenerate when sigma vanishes identically or does not reduce to a
/// quadratic parametrization.
CouplerConic coupler_conic(const Leg& h, const Leg& k);

/// Meet of the lines H1 H2(t) and K1 K2(t); where they coincide or a joint
/// position vanishes, the point [G(t)] of the reduced parametrization.
ProjPoint coupler_point(const CouplerConic& conic, const Scalar& t);

/// One row of a sampled motion.
struct MotionSample {
  Scalar t;
  /// C C̄(t) = 0.
  bool null_position = false;
  /// Per leg; empty where the joint position is undefined.
  std::vector<std::optional<ProjPoint>> moving_joints;
  std::optional<ProjPoint> coupler;
  /// Images [C(t) x C̄(t)] of the tracer points.
  std::vector<std::optional<ProjPoint>> tracers;
};

struct Trajectory {
  std::vector<MotionSample> rows;
  std::vector<std::string> warnings;
};

/// n >= 2 uniformly spaced parameters from t_from to t_to (inclusive).
/// The coupler point uses the first complementary pair of legs.
Trajectory sample_motion(const FourBar& fb, const Scalar& t_from, const Scalar& t_to, int n,
                         const std::vector<ProjPoint>& tracers = {});

/// [C(t) x C̄(t)]; empty where the image vanishes.
std::optional<ProjPoint> move_point(const QuatPoly& c, const Scalar& t, const ProjPoint& x);

struct EqualQuadrilateral {
  /// Real midpoints of A12 and B34 used as reflection centers.
  std::vector<ProjPoint> centers;
  /// Candidate B12 for each center, in the same order.
  std::vector<ProjPoint> b12;
  bool exact = true;
};

/// B12 = image of A34 under the point reflection in each midpoint of A12 and
/// B34, so that q(A12, A34) = q(B12, B34) and q(A12, B12) = q(A34, B34).
/// Throws Degenerate when B34 = A34 or A12 = B34.
EqualQuadrilateral construct_equal_quadrilateral(const ProjPoint& a12, const ProjPoint& a34,
                                                 const ProjPoint& b34);

}  // namespace splitquat
