#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace splitquat {

enum class Backend { Exact, Float };

/// Working type of the float backend. Extended precision where the platform
/// has it; reports and residuals use double.
using Real = long double;

std::string_view to_string(Backend b);

/// Absolute tolerance used by every zero/equality test in the float backend.
/// Defaults to 1e-9. Process-wide; reads and writes are atomic.
double tolerance();
void set_tolerance(double eps);

/// A real number carried either as an exact canonical rational (GMP) or as a
/// finite Real. Arithmetic between the two backends is rejected with
/// MismatchError.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(long n) : value_(mpq_class(n)) {}
  explicit Scalar(mpq_class q);

  static Scalar rational(long num, long den);
  static Scalar floating(Real v);
  static Scalar from_int(long n, Backend b);
  static Scalar zero(Backend b) { return from_int(0, b); }
  static Scalar one(Backend b) { return from_int(1, b); }
  /// Parses "p", "-p/q" or a decimal literal such as "2.25" as an exact
  /// rational. Throws std::invalid_argument on malformed input.
  static Scalar parse_exact(std::string_view text);

  [[nodiscard]] Backend backend() const {
    return std::holds_alternative<mpq_class>(value_) ? Backend::Exact : Backend::Float;
  }
  [[nodiscard]] bool is_exact() const { return backend() == Backend::Exact; }

  /// Throws MismatchError for float scalars.
  [[nodiscard]] const mpq_class& rational() const;
  [[nodiscard]] double to_double() const { return static_cast<double>(to_real()); }
  /// Nearest Real; exact values are rounded once.
  [[nodiscard]] Real to_real() const;
  [[nodiscard]] Scalar to_float() const { return floating(to_real()); }
  [[nodiscard]] Scalar to_backend(Backend b) const;
  /// An integer in the same backend as *this.
  [[nodiscard]] Scalar like(long n) const { return from_int(n, backend()); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Plain integers take the backend of the Scalar operand.
  friend Scalar operator+(const Scalar& a, long n) { return a + a.like(n); }
  friend Scalar operator+(long n, const Scalar& a) { return a.like(n) + a; }
  friend Scalar operator-(const Scalar& a, long n) { return a - a.like(n); }
  friend Scalar operator-(long n, const Scalar& a) { return a.like(n) - a; }
  friend Scalar operator*(const Scalar& a, long n) { return a * a.like(n); }
  friend Scalar operator*(long n, const Scalar& a) { return a.like(n) * a; }
  friend Scalar operator/(const Scalar& a, long n) { return a / a.like(n); }
  friend bool operator==(const Scalar& a, long n) { return a == a.like(n); }

  /// Exact: value equality. Float: |a - b| <= tolerance().
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Strict numeric ordering, no tolerance.
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "p" or "p/q" for exact values; floats print the shortest decimal that
  /// round-trips their double value.
  [[nodiscard]] std::string to_string() const;

 private:
  std::variant<mpq_class, Real> value_;
};

/// Exact square root when the argument is the square of a rational.
std::optional<Scalar> exact_sqrt(const Scalar& s);
/// Float square root (argument must be >= 0 within tolerance).
Scalar float_sqrt(const Scalar& s);

}  // namespace splitquat
