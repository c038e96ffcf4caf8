#pragma once

#include <cmath>

#include "quatcat/errors.hpp"

namespace quatcat {

// Guard widths for the polar decomposition. Inside kAxisEps of the real
// axis the rotation axis is numerically meaningless and is replaced by i;
// inside kBranchEps of theta = pi the principal logarithm sits on its
// discontinuity and is refused outright.
inline constexpr double kAxisEps = 1e-12;
inline constexpr double kBranchEps = 1e-9;

/// Quaternion w + x*i + y*j + z*k over doubles, basis convention i*j = k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    w += q.w;
    x += q.x;
    y += q.y;
    z += q.z;
    return *this;
  }

  constexpr Quaternion& operator-=(const Quaternion& q) {
    w -= q.w;
    x -= q.x;
    y -= q.y;
    z -= q.z;
    return *this;
  }
};

inline constexpr Quaternion kQOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQK{0.0, 0.0, 0.0, 1.0};

[[nodiscard]] constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
  p += q;
  return p;
}

[[nodiscard]] constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
  p -= q;
  return p;
}

[[nodiscard]] constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

[[nodiscard]] constexpr Quaternion operator*(const Quaternion& q, double s) {
  return {q.w * s, q.x * s, q.y * s, q.z * s};
}

[[nodiscard]] constexpr Quaternion operator*(double s, const Quaternion& q) {
  return q * s;
}

[[nodiscard]] constexpr Quaternion conj(const Quaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

[[nodiscard]] constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

[[nodiscard]] inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

[[nodiscard]] inline double imag_norm(const Quaternion& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// q = modulus * (cos(theta) + sin(theta) * axis), theta in [0, pi], axis a
/// unit imaginary quaternion. When q is within axis_eps of the real axis the
/// axis is arbitrary; it is pinned to i and flagged degenerate.
struct PolarForm {
  double modulus = 0.0;
  double theta = 0.0;
  Quaternion axis = kQI;
  bool degenerate_axis = false;
};

/// Polar decomposition. Throws ZeroQuaternion on q = 0.
[[nodiscard]] PolarForm polar(const Quaternion& q, double axis_eps = kAxisEps);

/// Rebuild the quaternion a PolarForm describes.
[[nodiscard]] Quaternion reconstruct(const PolarForm& p);

/// Principal logarithm log|q| + theta * axis. Throws ZeroQuaternion on q = 0
/// and NegativeRealAxis once theta lands within branch_eps of pi.
[[nodiscard]] Quaternion qlog(const Quaternion& q, double branch_eps = kBranchEps,
                              double axis_eps = kAxisEps);

/// Exponential exp(Re q) * (cos|v| + sin|v| * v / |v|), v the imaginary part.
[[nodiscard]] Quaternion qexp(const Quaternion& q, double axis_eps = kAxisEps);

/// Whether p and q lie in the same conjugation orbit: equal norms and equal
/// real parts, both within tol.
[[nodiscard]] bool similar(const Quaternion& p, const Quaternion& q, double tol);

}  // namespace quatcat
