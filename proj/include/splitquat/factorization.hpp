#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitquat/polynomial.hpp"
#include "splitquat/roots.hpp"

namespace splitquat {

/// 1-based indices {i, j}, i < j, of the two norm roots of a factorization's
/// quadratic divisor.
using Label = std::array<int, 2>;

bool labels_intersect(const Label& a, const Label& b);
bool labels_disjoint(const Label& a, const Label& b);
/// The complementary 2-subset of {1, 2, 3, 4}.
Label complement(const Label& l);
std::string to_string(const Label& l);

/// C = (t - h1)(t - h2), with divisor = (t - h2)(t - conj h2).
struct Factorization {
  Quaternion h1;
  Quaternion h2;
  RealPoly divisor;
  std::optional<Label> label;
};

struct GenericityReport {
  bool coefficients_independent = false;
  bool invertible_leading_remainders = false;
  bool norm_square_free = false;
  bool verdict = false;
  std::vector<std::string> reasons;
};

/// Tests linear independence of {1, c1, c0}, invertibility of c1 - m1 for
/// every monic quadratic divisor M of the norm polynomial and
/// square-freeness of the norm polynomial. Throws Unsupported unless C is a
/// monic quadratic.
GenericityReport check_generic(const QuatPoly& c);

/// R := C - M, h2 := zero of R, h1 := -c1 - h2. Throws NonGeneric if the
/// leading coefficient of R is not invertible, std::invalid_argument if M
/// does not produce a right factor.
Factorization factor_from_divisor(const QuatPoly& c, const RealPoly& m);

/// All factorizations, ordered by divisor (linear coefficient, then
/// constant). Throws NonGeneric for non-generic input. Exact input whose
/// divisors are irrational is recomputed in the float backend.
std::vector<Factorization> all_factorizations(const QuatPoly& c);

/// The complementary factorization: k2 is the zero of C - (t - h1)(t - conj h1),
/// so with d = h2 - conj(h1), k2 = d^-1 h1 d and k1 = d^-1 h2 d.
/// Throws NonGeneric when d is not invertible.
Factorization complementary(const Factorization& f, const QuatPoly& c);

/// Assigns labels {i, j} by matching each divisor against the ascending
/// real norm roots. Leaves labels empty unless there are four real roots.
std::vector<Factorization> label_factorizations(std::vector<Factorization> fs,
                                                const RootReport& roots);

/// Everything the factorization front end reports for one polynomial.
struct FactorizationSet {
  /// The polynomial actually factored (float copy after a fallback).
  QuatPoly polynomial;
  RealPoly norm;
  RootReport roots;
  GenericityReport genericity;
  std::vector<Factorization> factorizations;
  /// complement[i] is the index of the factorization complementary to i.
  std::vector<std::optional<std::size_t>> complement;
  std::vector<std::string> warnings;
  [[nodiscard]] bool fell_back_to_float(Backend requested) const {
    return polynomial.backend() != requested;
  }
};

FactorizationSet factorize(const QuatPoly& c);

/// Definition-based test: the left factors' norm quadratics multiply to the
/// norm polynomial.
bool are_complementary(const Factorization& f, const Factorization& g, const RealPoly& norm);

}  // namespace splitquat
