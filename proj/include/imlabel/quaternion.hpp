#pragma once

#include <cmath>

namespace imlabel {

// Unit quaternions represent rotations; q and -q are the same rotation.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quaternion normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

// Hamilton product.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Rotation about the (not necessarily unit) axis (ux,uy,uz) by angle radians.
inline Quaternion axis_angle(double ux, double uy, double uz, double angle) {
  const double len = std::sqrt(ux * ux + uy * uy + uz * uz);
  const double s = std::sin(angle / 2.0) / len;
  return {std::cos(angle / 2.0), s * ux, s * uy, s * uz};
}

}  // namespace imlabel
