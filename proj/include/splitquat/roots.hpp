#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitquat/polynomial.hpp"

namespace splitquat {

/// A real root of a rational polynomial, stored as base + branch * sqrt(radicand).
/// Rational roots (and every float-backend root) have a zero radicand.
struct RealRoot {
  Scalar base;
  Scalar radicand;
  int branch = 0;  // +1 / -1 for quadratic surds, 0 otherwise

  static RealRoot rational(Scalar v) { return {v, v.like(0), 0}; }

  [[nodiscard]] bool is_surd() const { return branch != 0; }
  [[nodiscard]] Backend backend() const { return base.backend(); }
  /// The root as a Scalar. Throws Unsupported for surds.
  [[nodiscard]] Scalar value() const;
  [[nodiscard]] double approx() const;
  /// The root in the float backend.
  [[nodiscard]] Scalar to_float() const;
  [[nodiscard]] std::string to_string() const;
};

/// Exact for rational and surd roots; tolerance-based in the float backend.
bool same_root(const RealRoot& a, const RealRoot& b);

/// Real-root structure of a polynomial of degree <= 4.
struct RootReport {
  Backend backend = Backend::Exact;
  /// Real roots in ascending order, repeated according to multiplicity.
  std::vector<RealRoot> real;
  /// Monic quadratic factors without real roots.
  std::vector<RealPoly> complex_quadratics;
  /// Exact backend only: factors irreducible over the rationals whose real
  /// structure could not be resolved exactly (cubics, quartics).
  std::vector<RealPoly> unresolved;

  /// No repeated root, real or complex.
  bool square_free = true;

  [[nodiscard]] bool resolved() const { return unresolved.empty(); }
  [[nodiscard]] bool has_surds() const;
};

/// Real roots with multiplicity. Exact backend: rational roots, quadratic
/// surds and rational quadratic factors; float backend: numerical roots with
/// tolerance clustering. Throws Unsupported for degree > 4 and for the zero
/// polynomial.
RootReport real_roots(const RealPoly& p);

/// A monic real quadratic divisor, together with the indices (0-based, into
/// RootReport::real) of its two real roots when it has any.
struct QuadraticDivisor {
  RealPoly poly;
  std::optional<std::pair<int, int>> real_indices;
};

/// Every distinct monic real quadratic divisor of the polynomial described by
/// the report, in the report's backend. Returns nullopt when one of them has
/// irrational coefficients (exact backend with surds or unresolved factors);
/// callers then redo the computation in the float backend.
std::optional<std::vector<QuadraticDivisor>> quadratic_divisors(const RootReport& report);

/// All complex roots of a nonzero polynomial, computed numerically from the
/// double approximation of its coefficients.
std::vector<std::complex<double>> complex_roots(const RealPoly& p);

/// Expands the product of (t - r) over a list of rational or float roots.
RealPoly from_roots(const std::vector<RealRoot>& roots, Backend b);

}  // namespace splitquat
