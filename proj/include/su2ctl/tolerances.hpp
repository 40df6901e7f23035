#pragma once

namespace su2ctl {

// Algebraic identities (unitarity, composition, closed-form consistency).
inline constexpr double kUnitarityTol = 1e-12;

// Curve/containment comparisons and root-finding termination.
inline constexpr double kGeometryTol = 1e-9;

// Final-state distance accepted by the ODE verifier.
inline constexpr double kVerifyTol = 1e-6;

// Default oracle step in t-units.
inline constexpr double kDefaultOracleDt = 1e-4;

}  // namespace su2ctl
