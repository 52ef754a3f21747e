#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitquat/quaternion.hpp"
#include "splitquat/scalar.hpp"

namespace splitquat {

/// Real polynomial, coefficient index = degree. Canonical form has a nonzero
/// leading coefficient; the zero polynomial has no coefficients.
/// In the float backend "zero" for trimming is relative to the largest
/// coefficient.
class RealPoly {
 public:
  explicit RealPoly(Backend b = Backend::Exact) : backend_(b) {}
  RealPoly(std::vector<Scalar> coeffs, Backend b);
  /// Exact polynomial from integer coefficients, lowest degree first.
  static RealPoly exact(std::initializer_list<long> coeffs);
  /// Monic (t - r).
  static RealPoly linear_root(const Scalar& r);

  [[nodiscard]] Backend backend() const { return backend_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] Scalar coeff(int i) const;
  [[nodiscard]] const Scalar& leading() const { return c_.back(); }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }

  [[nodiscard]] Scalar evaluate(const Scalar& t) const;
  [[nodiscard]] RealPoly derivative() const;
  [[nodiscard]] RealPoly monic() const;
  [[nodiscard]] RealPoly to_backend(Backend b) const;
  /// Largest coefficient magnitude, as a double.
  [[nodiscard]] double scale() const;

  RealPoly operator-() const;
  friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const Scalar& s, const RealPoly& p);
  friend bool operator==(const RealPoly& a, const RealPoly& b);

  /// "t^4 - 4t^3 + t^2 + 6t".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
  Backend backend_;
};

/// Quotient and remainder of Euclidean division. Throws NonInvertible when
/// the divisor is zero.
std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b);
/// Monic greatest common divisor (exact backend only).
RealPoly gcd(const RealPoly& a, const RealPoly& b);

/// Polynomial with quaternion coefficients in a central indeterminate t.
class QuatPoly {
 public:
  QuatPoly(Signature sig, Backend b) : sig_(sig), backend_(b) {}
  QuatPoly(std::vector<Quaternion> coeffs, Signature sig, Backend b);
  explicit QuatPoly(std::vector<Quaternion> coeffs);
  /// t - h.
  static QuatPoly linear(const Quaternion& h);
  /// Embeds a real polynomial.
  static QuatPoly from_real(const RealPoly& p, Signature sig);
  /// Assembles a vectorial polynomial from its i, j, k coordinate polynomials.
  static QuatPoly from_coordinates(const RealPoly& x, const RealPoly& y, const RealPoly& z,
                                   Signature sig);

  [[nodiscard]] Signature signature() const { return sig_; }
  [[nodiscard]] Backend backend() const { return backend_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] Quaternion coeff(int i) const;
  [[nodiscard]] const std::vector<Quaternion>& coeffs() const { return c_; }
  [[nodiscard]] bool is_monic() const;

  [[nodiscard]] QuatPoly conjugate() const;
  [[nodiscard]] QuatPoly derivative() const;
  /// Horner evaluation; t is real, hence central.
  [[nodiscard]] Quaternion evaluate(const Scalar& t) const;
  /// One coordinate (0..3) as a real polynomial.
  [[nodiscard]] RealPoly coordinate(int index) const;
  [[nodiscard]] QuatPoly to_backend(Backend b) const;

  friend QuatPoly operator+(const QuatPoly& a, const QuatPoly& b);
  friend QuatPoly operator-(const QuatPoly& a, const QuatPoly& b);
  friend QuatPoly operator*(const QuatPoly& a, const QuatPoly& b);
  friend bool operator==(const QuatPoly& a, const QuatPoly& b);

  /// "t^2 - (2+j+2k)t + (1-2i+j+2k)".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<Quaternion> c_;
  Signature sig_;
  Backend backend_;
};

QuatPoly poly_multiply(const QuatPoly& a, const QuatPoly& b);
QuatPoly poly_conjugate(const QuatPoly& p);

/// C * conj(C), projected to its real part. Throws std::logic_error if the
/// product has a non-vanishing vector part.
RealPoly norm_polynomial(const QuatPoly& c);

/// The unique h with r1 h + r0 = 0 for R = r1 t + r0, i.e. -r1^{-1} r0.
/// Throws NonGeneric when r1 is not invertible, Unsupported when deg R != 1.
Quaternion linear_zero(const QuatPoly& r);

/// Coefficient-wise cross product 1/2(ab - ba) of two polynomials.
QuatPoly cross(const QuatPoly& a, const QuatPoly& b);

/// Real polynomial sum_{a,b} <p_a, q_b> t^(a+b) for vectorial polynomials,
/// using the inner product of the signature.
RealPoly inner(const QuatPoly& p, const QuatPoly& q);

/// Divides every coordinate by a real polynomial, discarding remainders.
QuatPoly divide_coordinates(const QuatPoly& p, const RealPoly& d);

}  // namespace splitquat
