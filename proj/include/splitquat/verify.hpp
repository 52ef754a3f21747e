#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitquat/linkage.hpp"

namespace splitquat {

enum class CheckStatus { Passed, Failed, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Skipped;
  /// Number of individual comparisons carried out.
  int comparisons = 0;
  /// Largest residual seen; always 0 for exact comparisons.
  double max_residual = 0;
  /// Offending parameter values and residuals.
  std::vector<std::string> failures;
  /// Why comparisons or the whole check were skipped.
  std::vector<std::string> notes;
};

struct VerificationReport {
  Backend backend = Backend::Exact;
  Signature signature = Signature::Split;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckResult* find(std::string_view id) const;
};

struct VerifyOptions {
  /// Motion parameters at which the time-dependent statements are checked.
  /// Empty means a fixed default set of rationals.
  std::vector<Scalar> samples;
};

std::vector<Scalar> default_samples();

/// Checks, by id:
///   theorem1   equal opposite quadrances, initially and at each sample
///   theorem2   reflection in the conic tangent swaps fixed and moving
///              joints; H1 and K1 are focal points
///   corollary1 fixed joints, and moving joints at each sample, form a
///              complete quadrilateral with null sides; the focal points are
///              the fixed joints
///   corollary2 linked vertices are collinear
///   corollary3 every norm root is a null-tangent parameter
///   figure     leg lines concur at S(t), tangent poles lie on a conic,
///              joins of linked vertices are null
VerificationReport verify_linkage(const FourBar& fb, const VerifyOptions& options = {});

}  // namespace splitquat
