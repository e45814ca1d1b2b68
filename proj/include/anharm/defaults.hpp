#pragma once

namespace anharm::defaults {

inline constexpr int kTaylorOrder = 30;        // local series order
inline constexpr double kStepFloor = 1e-12;    // substep floor before StepUnderflow
inline constexpr double kPropagateTol = 1e-10; // per-unit-step relative error
inline constexpr double kEigenTol = 1e-8;      // eigenvalue tolerance
inline constexpr double kZeroTol = 1e-6;       // zero position tolerance
inline constexpr double kActionShoot = 40.0;   // exponent separation for shooting radius
inline constexpr double kActionAsym = 18.0;    // exponent target for asymptotic-value radius
inline constexpr double kBarrier = 25.0;       // P(R) - lambda margin at the shooting radius
inline constexpr double kBoundaryFloor = 1e-10; // |y|/|dy| floor on counting contours
inline constexpr double kJitterRel = 1e-3;     // relative contour jitter on BoundaryZero
inline constexpr int kJitterRetries = 3;
inline constexpr int kRefineCap = 1 << 16;     // max contour nodes per rectangle side

}  // namespace anharm::defaults
