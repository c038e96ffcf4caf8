#include "quatcat/quaternion.hpp"

#include <cmath>
#include <numbers>

namespace quatcat {

PolarForm polar(const Quaternion& q, double axis_eps) {
  const double m = norm(q);
  if (m == 0.0) throw ZeroQuaternion("polar: zero quaternion has no polar form");
  const double vn = imag_norm(q);
  PolarForm p;
  p.modulus = m;
  // atan2(|v|, w) equals acos(w / |q|) but stays fully conditioned at both
  // ends of [0, pi]; the acos form loses ~1e-16/sin(theta) near the axis.
  p.theta = std::atan2(vn, q.w);
  if (vn > axis_eps) {
    p.axis = Quaternion{0.0, q.x / vn, q.y / vn, q.z / vn};
    p.degenerate_axis = false;
  } else {
    p.axis = kQI;
    p.degenerate_axis = true;
  }
  return p;
}

Quaternion reconstruct(const PolarForm& p) {
  const Quaternion dir = Quaternion::real(std::cos(p.theta)) + std::sin(p.theta) * p.axis;
  return p.modulus * dir;
}

Quaternion qlog(const Quaternion& q, double branch_eps, double axis_eps) {
  const PolarForm p = polar(q, axis_eps);
  if (p.theta >= std::numbers::pi - branch_eps)
    throw NegativeRealAxis("qlog: argument within branch_eps of the negative real axis");
  const double lm = std::log(p.modulus);
  return {lm, p.theta * p.axis.x, p.theta * p.axis.y, p.theta * p.axis.z};
}

Quaternion qexp(const Quaternion& q, double axis_eps) {
  const double vn = imag_norm(q);
  const double ew = std::exp(q.w);
  if (vn <= axis_eps) return Quaternion::real(ew);
  const double s = ew * std::sin(vn) / vn;
  return {ew * std::cos(vn), s * q.x, s * q.y, s * q.z};
}

bool similar(const Quaternion& p, const Quaternion& q, double tol) {
  return std::abs(norm(p) - norm(q)) <= tol && std::abs(p.w - q.w) <= tol;
}

}  // namespace quatcat
