#pragma once

#include <array>
#include <string>
#include <string_view>

#include "splitquat/scalar.hpp"

namespace splitquat {

/// Which four-dimensional algebra the basis elements multiply in.
///   Hamiltonian: i^2 = j^2 = k^2 = ijk = -1
///   Split:       i^2 = -1, j^2 = k^2 = +1, ijk = 1
enum class Signature { Hamiltonian, Split };

std::string_view to_string(Signature s);

/// w + x i + y j + z k over one scalar backend and one signature.
/// All four coordinates always share the backend.
class Quaternion {
 public:
  Quaternion(Scalar w, Scalar x, Scalar y, Scalar z, Signature sig);

  static Quaternion real(Scalar w, Signature sig);
  static Quaternion zero(Signature sig, Backend b);
  static Quaternion one(Signature sig, Backend b);
  /// Basis element: index 0..3 for 1, i, j, k.
  static Quaternion basis(int index, Signature sig, Backend b = Backend::Exact);
  /// Convenience for tests and literals: integer/rational coordinates.
  static Quaternion exact(const mpq_class& w, const mpq_class& x, const mpq_class& y,
                          const mpq_class& z, Signature sig);

  [[nodiscard]] const Scalar& w() const { return c_[0]; }
  [[nodiscard]] const Scalar& x() const { return c_[1]; }
  [[nodiscard]] const Scalar& y() const { return c_[2]; }
  [[nodiscard]] const Scalar& z() const { return c_[3]; }
  [[nodiscard]] const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::array<Scalar, 4>& coords() const { return c_; }
  [[nodiscard]] Signature signature() const { return sig_; }
  [[nodiscard]] Backend backend() const { return c_[0].backend(); }

  [[nodiscard]] Quaternion conjugate() const;
  /// h * conj(h), a real number: w^2 + x^2 -/+ (y^2 + z^2).
  [[nodiscard]] Scalar norm() const;
  /// conj(h) / norm(h). Throws NonInvertible on a zero norm.
  [[nodiscard]] Quaternion inverse() const;
  [[nodiscard]] Quaternion vector_part() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_real() const;
  [[nodiscard]] bool is_vectorial() const { return c_[0].is_zero(); }

  [[nodiscard]] Quaternion to_backend(Backend b) const;
  [[nodiscard]] Quaternion to_float() const { return to_backend(Backend::Float); }

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Scalar& s, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& q, const Scalar& s) { return s * q; }
  friend Quaternion operator/(const Quaternion& q, const Scalar& s);

  /// Coordinate-wise (exact) or within tolerance (float).
  friend bool operator==(const Quaternion& a, const Quaternion& b);

  /// Compact form such as "1-2i+j+2k" or "1+8/5j+6/5k".
  [[nodiscard]] std::string to_string() const;

 private:
  std::array<Scalar, 4> c_;
  Signature sig_;
};

Quaternion multiply(const Quaternion& a, const Quaternion& b);

/// Throws MismatchError unless both operands share signature and backend.
void require_compatible(const Quaternion& a, const Quaternion& b);

}  // namespace splitquat
