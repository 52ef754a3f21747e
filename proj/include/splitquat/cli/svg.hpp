#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitquat/linkage.hpp"

namespace splitquat::cli {

/// Affine chart X = x2/x1, Y = x3/x1. Split scenes draw the null conic as the
/// unit circle; points with x1 = 0 or outside the view become direction
/// markers on the frame.
///
/// Fixed joints A.., initial moving joints B.., and for the first pair with a
/// coupler conic: the conic, its null tangents and its focal points.
std::string linkage_svg(const FourBar& fb, const std::vector<std::optional<CouplerConic>>& conics);

/// Fixed joints plus the sampled paths of moving joints, coupler point and tracers.
std::string trajectory_svg(const FourBar& fb, const Trajectory& traj);

}  // namespace splitquat::cli
