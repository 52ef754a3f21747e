#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitquat/linkage.hpp"
#include "splitquat/verify.hpp"

namespace splitquat::cli {

using Json = nlohmann::ordered_json;

/// Exact scalars as "p/q" (or "p") strings; floats as JSON numbers.
Json to_json(const Scalar& s);
/// {"text": "1+2k", "coords": [w, x, y, z]}.
Json to_json(const Quaternion& q);
/// Integer coordinate triple for exact points, unit triple for floats.
Json to_json(const ProjPoint& p);
Json to_json(const ProjLine& l);
/// {"text": ..., "coeffs": [...]}, lowest degree first.
Json to_json(const RealPoly& p);
Json to_json(const QuatPoly& p);
Json to_json(const RealRoot& r);
Json to_json(const RootReport& r);

Scalar scalar_from_json(const Json& j);
Quaternion quaternion_from_json(const Json& j, Signature sig);

Json factor_report(const FactorizationSet& fs);
Json norm_report(const QuatPoly& c, const RealPoly& norm, const RootReport& roots);
Json linkage_report(const FourBar& fb, const std::vector<std::optional<CouplerConic>>& conics);
Json verify_report(const FourBar& fb, const VerificationReport& report);
Json trajectory_report(const FourBar& fb, const Trajectory& traj, const std::vector<ProjPoint>& tracers);
Json midpoints_report(const ProjPoint& a, const ProjPoint& b, const Midpoints& m);
Json quadrilateral_report(const ProjPoint& a12, const ProjPoint& a34, const ProjPoint& b34,
                          const EqualQuadrilateral& q);
Json error_report(const std::string& type, const std::string& message);

/// One row per factorization.
std::string factor_csv(const FactorizationSet& fs);
/// One row per sample: t, null flag, moving joints, coupler point, tracers.
std::string trajectory_csv(const FourBar& fb, const Trajectory& traj, std::size_t tracer_count);

/// Name of a leg for output: "14" for label {1,4}, else its 1-based index.
std::string leg_name(const FourBar& fb, std::size_t index);

}  // namespace splitquat::cli
