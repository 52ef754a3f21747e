#pragma once

#include <array>
#include <string>
#include <vector>

#include "splitquat/quaternion.hpp"

namespace splitquat {

/// ⟨a, b⟩ = Re(a conj(b)) for vectorial a, b:
///   split a1 b1 - a2 b2 - a3 b3, Hamiltonian a1 b1 + a2 b2 + a3 b3.
/// Throws std::invalid_argument for non-vectorial input.
Scalar inner_product(const Quaternion& a, const Quaternion& b);
/// 1/2 (ab - ba). Throws std::invalid_argument for non-vectorial input.
Quaternion cross_product(const Quaternion& a, const Quaternion& b);

namespace detail {

/// Common representation of points and lines of the projective plane: a
/// nonzero vectorial quaternion up to a nonzero real factor. The stored
/// representative is normalized (exact: coprime integers; float: unit
/// Euclidean length), with its first nonzero coordinate positive.
class Projective {
 public:
  explicit Projective(const Quaternion& rep);

  [[nodiscard]] const Quaternion& rep() const { return rep_; }
  [[nodiscard]] Signature signature() const { return rep_.signature(); }
  [[nodiscard]] Backend backend() const { return rep_.backend(); }
  /// The three coordinates (i, j, k) of the normalized representative.
  [[nodiscard]] std::array<Scalar, 3> coords() const { return {rep_.x(), rep_.y(), rep_.z()}; }
  /// "[i+3j+k]".
  [[nodiscard]] std::string to_string() const;

 protected:
  Quaternion rep_;
};

bool projectively_equal(const Quaternion& a, const Quaternion& b);

}  // namespace detail

class ProjPoint : public detail::Projective {
 public:
  using Projective::Projective;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return detail::projectively_equal(a.rep(), b.rep());
  }
};

class ProjLine : public detail::Projective {
 public:
  using Projective::Projective;
  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return detail::projectively_equal(a.rep(), b.rep());
  }
};

/// The same point with its representative converted to another backend.
ProjPoint in_backend(const ProjPoint& p, Backend b);

/// Throw Degenerate when the arguments coincide projectively.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// The point and the line with the same representative.
ProjPoint pole(const ProjLine& l);
ProjLine polar(const ProjPoint& p);

bool incident(const ProjLine& u, const ProjPoint& x);
bool is_null(const ProjPoint& p);
bool is_null(const ProjLine& l);

/// 1 - ⟨a,b⟩² / (⟨a,a⟩⟨b,b⟩). Throws NullPoint for a null argument.
Scalar quadrance(const ProjPoint& a, const ProjPoint& b);

/// [m x m] for the mirror representative m. Throws Degenerate for a null mirror.
ProjPoint reflect(const ProjLine& mirror, const ProjPoint& x);
/// [h x conj(h)]. Throws Degenerate when norm(h) = 0.
ProjPoint rotate(const Quaternion& h, const ProjPoint& x);
/// [h - conj(h)]. Throws Degenerate for real h.
ProjPoint rotation_center(const Quaternion& h);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

struct Midpoints {
  std::vector<ProjPoint> points;
  /// False when the square root involved was irrational and the points were
  /// computed in the float backend.
  bool exact = true;
};

/// Points M on the join of A and B with q(A, M) = q(M, B). Empty when A and B
/// span a null line or when no real solution exists; null candidates are
/// dropped. Throws NullPoint for null input, Degenerate for A = B.
Midpoints midpoints(const ProjPoint& a, const ProjPoint& b);

}  // namespace splitquat
