#include "hcns/rotation.hpp"

#include "hcns/ops.hpp"
#include "hcns/registry.hpp"

#include <algorithm>
#include <cmath>

namespace hcns {

namespace {

Vec3 unit_axis(const Vec3& axis) {
    const double n = norm(axis);
    if (!(n > 0.0) || !std::isfinite(n)) throw Error(Errc::ZeroAxis, "rotation axis must be a nonzero vector");
    return {axis[0] / n, axis[1] / n, axis[2] / n};
}

// Float copy of q scaled to unit norm, and its inverse (the conjugate).
std::pair<HNumber, HNumber> normalized(const HNumber& q) {
    const AlgebraDef& h = quaternion_algebra();
    if (q.dim() != 4) throw Error(Errc::DimMismatch, "rotation quaternions have 4 components");
    const HNumber f = q.is_float() ? q : q.to_float();
    const double n2 = norma(f, h).to_double();
    if (!(n2 > 0.0)) throw Error(Errc::ZeroQuaternion, "cannot rotate by the zero quaternion");
    const HNumber unit_q = scalar_mul(Scalar::from_double(1.0 / std::sqrt(n2)), f);
    return {unit_q, conjug(unit_q, h)};
}

HNumber embed(const Vec3& r) { return HNumber::from_doubles({0.0, r[0], r[1], r[2]}); }

Vec3 vector_part(const HNumber& x) {
    const auto v = x.to_doubles();
    return {v[1], v[2], v[3]};
}

}  // namespace

const AlgebraDef& quaternion_algebra() {
    static const AlgebraDef h = [] {
        for (const auto& def : builtin_algebras())
            if (def.name == "H") return def;
        throw Error(Errc::NotFound, "built-in quaternion system missing");
    }();
    return h;
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

HNumber quat_from_rotation(const RotationSpec& spec) {
    const Vec3 u = unit_axis(spec.axis);
    const double c = std::cos(spec.angle / 2);
    const double s = std::sin(spec.angle / 2);
    return HNumber::from_doubles({c, s * u[0], s * u[1], s * u[2]});
}

RotationSpec rotation_from_quat(const HNumber& q) {
    const auto v = (q.is_float() ? q : q.to_float()).to_doubles();
    if (v.size() != 4) throw Error(Errc::DimMismatch, "rotation quaternions have 4 components");
    const double full = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    if (!(full > 0.0)) throw Error(Errc::ZeroQuaternion, "the zero quaternion is not a rotation");
    const double vec = std::sqrt(v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    RotationSpec spec;
    spec.angle = 2.0 * std::acos(std::clamp(v[0] / full, -1.0, 1.0));
    spec.axis = vec > 0.0 ? Vec3{v[1] / vec, v[2] / vec, v[3] / vec} : Vec3{1.0, 0.0, 0.0};
    return spec;
}

Vec3 rotate(const Vec3& r, const HNumber& q) {
    const AlgebraDef& h = quaternion_algebra();
    const auto [qn, qinv] = normalized(q);
    return vector_part(in_multi(in_multi(qn, embed(r), h), qinv, h));
}

Vec3 rotate2(const Vec3& r, const HNumber& q, const HNumber& p) {
    const AlgebraDef& h = quaternion_algebra();
    const auto [qn, qinv] = normalized(q);
    const auto [pn, pinv] = normalized(p);
    const HNumber pq = in_multi(pn, qn, h);
    return vector_part(in_multi(in_multi(in_multi(pq, embed(r), h), qinv, h), pinv, h));
}

Mat3 rotation_matrix_oracle(const RotationSpec& spec) {
    const Vec3 u = unit_axis(spec.axis);
    const double c = std::cos(spec.angle);
    const double s = std::sin(spec.angle);
    const double t = 1.0 - c;
    const Mat3 cross{{{0.0, -u[2], u[1]}, {u[2], 0.0, -u[0]}, {-u[1], u[0], 0.0}}};
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? c : 0.0) + s * cross[i][j] + t * u[i] * u[j];
    return m;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

Mat3 compose(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

}  // namespace hcns
