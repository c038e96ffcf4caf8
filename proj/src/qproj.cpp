#include "quatcat/qproj.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "quatcat/rng.hpp"

namespace quatcat {

QPoint phi(const HVector& x, const Quaternion& lambda, double unit_eps) {
  if (x.size() == 0) throw SizeMismatch("phi: empty vector");
  if (std::abs(dot(x, x).w - 1.0) > unit_eps) throw NotUnit("phi: x is not a unit vector");
  if (std::abs(norm(lambda) - 1.0) > unit_eps) throw NotUnit("phi: lambda is not unit");
  HMatrix m = rank_one(x, lambda - kQOne) + HMatrix::identity(x.size());
  return QPoint{x, lambda, std::move(m)};
}

std::optional<QPoint> recover(const HMatrix& a, double tol) {
  const std::size_t n = a.dim();
  if (n == 0) throw SizeMismatch("recover: empty matrix");
  const HMatrix b = a - HMatrix::identity(n);
  if (fro_norm(b) <= tol)
    return QPoint{HVector::basis(n, 0), kQOne, HMatrix::identity(n)};

  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += norm_sq(b(i, j));
    if (s > best) {
      best = s;
      pivot = j;
    }
  }
  HVector c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = b(i, pivot);
  const double cn = norm(c);
  if (cn == 0.0) return std::nullopt;
  const HVector x = c * Quaternion::real(1.0 / cn);
  const Quaternion lambda = dot(x, apply(a, x));
  if (std::abs(norm(lambda) - 1.0) > tol) return std::nullopt;
  HMatrix m = rank_one(x, lambda - kQOne) + HMatrix::identity(n);
  if (fro_norm(m - a) > tol * (1.0 + fro_norm(a))) return std::nullopt;
  return QPoint{x, lambda, std::move(m)};
}

bool equivalent(const QPoint& p, const QPoint& q, double tol) {
  if (p.x.size() != q.x.size())
    throw SizeMismatch("equivalent: points live in different dimensions");
  if (norm(p.lambda - kQOne) <= tol && norm(q.lambda - kQOne) <= tol) return true;
  return fro_norm(p.matrix - q.matrix) <= tol;
}

QPoint char_map(std::size_t n, const HVector& y, const std::array<double, 3>& v) {
  constexpr double ball_eps = 1e-12;
  if (n == 0) throw SizeMismatch("char_map: n must be at least 1");
  if (y.size() != n - 1)
    throw SizeMismatch("char_map: y must have n - 1 = " + std::to_string(n - 1) + " entries");
  const double yn = norm(y);
  if (yn > 1.0 + ball_eps) throw OutOfBall("char_map: |y| exceeds 1");
  const double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (vn > 1.0 + ball_eps) throw OutOfBall("char_map: |v| exceeds 1");

  HVector x(n);
  for (std::size_t i = 0; i + 1 < n; ++i) x[i] = y[i];
  x[n - 1] = Quaternion::real(std::sqrt(std::max(0.0, 1.0 - yn * yn)));
  const double xn = norm(x);
  if (xn == 0.0) throw OutOfBall("char_map: degenerate lift");
  const HVector xu = x * Quaternion::real(1.0 / xn);

  constexpr double pi = std::numbers::pi;
  // sin(pi t)/t extends continuously through t = 0 with value pi.
  const double s = vn > 0.0 ? std::sin(pi * vn) / vn : pi;
  const Quaternion lambda{std::cos(pi * vn), s * v[0], s * v[1], s * v[2]};
  return phi(xu, lambda);
}

int NormalCell::dimension() const {
  int d = 0;
  for (int i : indices) d += 4 * i - 1;
  return d;
}

std::vector<NormalCell> cells(int n) {
  if (n < 1) throw DomainError("cells: n must be at least 1");
  if (n > 24) throw DomainError("cells: the list has 2^n entries; n is capped at 24");
  std::vector<NormalCell> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    NormalCell c;
    for (int i = n; i >= 1; --i)
      if (mask & (std::uint32_t{1} << (i - 1))) c.indices.push_back(i);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const NormalCell& a, const NormalCell& b) {
    const int da = a.dimension();
    const int db = b.dimension();
    if (da != db) return da < db;
    return a.indices < b.indices;
  });
  return out;
}

std::vector<long long> poincare_polynomial(int n) {
  const std::vector<NormalCell> cs = cells(n);
  std::vector<long long> coeffs(static_cast<std::size_t>(2 * n * n + n) + 1, 0);
  for (const NormalCell& c : cs) coeffs[static_cast<std::size_t>(c.dimension())] += 1;
  return coeffs;
}

QPoint sample_qn(std::size_t n, std::uint64_t seed) {
  rng::Engine eng = rng::engine(seed);
  const HVector x = rng::unit_vector(n, eng);
  const Quaternion lambda = rng::unit_quaternion(eng);
  return phi(x, lambda);
}

HMatrix sample_sp_product(std::size_t n, int k, std::uint64_t seed) {
  rng::Engine eng = rng::engine(seed);
  HMatrix m = HMatrix::identity(n);
  for (int i = 0; i < k; ++i) {
    const HVector x = rng::unit_vector(n, eng);
    const Quaternion lambda = rng::unit_quaternion(eng);
    m = m * phi(x, lambda).matrix;
  }
  return m;
}

}  // namespace quatcat
