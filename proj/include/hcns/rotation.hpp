#pragma once

/**
 * Rotations of 3-vectors by unit quaternions, r' = q r q^-1, computed with the
 * generic multiplication over the built-in quaternion system H, plus an
 * independent axis-angle matrix path used to cross-check it.
 */

#include "hcns/algebra.hpp"
#include "hcns/hcnumber.hpp"

#include <array>

namespace hcns {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

struct RotationSpec {
    Vec3 axis{};
    double angle = 0.0;  // radians
};

/// The built-in quaternion system H.
const AlgebraDef& quaternion_algebra();

/// [cos(angle/2), sin(angle/2) * axis/|axis|]; throws ZeroAxis.
HNumber quat_from_rotation(const RotationSpec& spec);

/// Angle 2*acos(a1/|q|) and axis from the direction cosines of the vector
/// part. A quaternion without vector part maps to angle 0 about (1, 0, 0).
RotationSpec rotation_from_quat(const HNumber& q);

/// q r q^-1 with q normalized first; throws ZeroQuaternion.
Vec3 rotate(const Vec3& r, const HNumber& q);

/// p q r q^-1 p^-1: rotation by q followed by rotation by p.
Vec3 rotate2(const Vec3& r, const HNumber& q, const HNumber& p);

/// Rodrigues matrix I cos t + sin t [u]x + (1 - cos t) u u^T; throws ZeroAxis.
Mat3 rotation_matrix_oracle(const RotationSpec& spec);

Vec3 apply(const Mat3& m, const Vec3& v);
Mat3 compose(const Mat3& a, const Mat3& b);
double norm(const Vec3& v);

}  // namespace hcns
