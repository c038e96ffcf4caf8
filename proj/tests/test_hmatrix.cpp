#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quatcat/hmatrix.hpp"
#include "quatcat/rng.hpp"

using namespace quatcat;

namespace {

bool entrywise_equal(const HMatrix& a, const HMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Unit rank-one bump; symplectic for |lambda| = 1. Built from hmat
// primitives only.
HMatrix bump(const HVector& x, const Quaternion& lambda) {
  return rank_one(x, lambda - kQOne) + HMatrix::identity(x.size());
}

}  // namespace

TEST_CASE("identity is neutral and exact") {
  rng::Engine eng = rng::engine(21);
  for (std::size_t n = 1; n <= 4; ++n) {
    const HMatrix a = rng::gaussian_matrix(n, eng);
    const HMatrix id = HMatrix::identity(n);
    CHECK(entrywise_equal(a * id, a));
    CHECK(entrywise_equal(id * a, a));
    CHECK(fro_norm(id) == doctest::Approx(std::sqrt(double(n))).epsilon(1e-15));
  }
}

TEST_CASE("fixed small products") {
  HMatrix a(2), b(2);
  a(0, 0) = kQI;
  a(1, 1) = kQI;
  b(0, 0) = kQJ;
  b(1, 1) = kQJ;
  const HMatrix c = a * b;
  CHECK(c(0, 0) == kQK);
  CHECK(c(1, 1) == kQK);
  CHECK(c(0, 1) == Quaternion{});

  HMatrix two(1);
  two(0, 0) = Quaternion::real(2.0);
  CHECK(symplectic_residual(two) == 3.0);
  CHECK(symplectic_residual(HMatrix::identity(3)) == 0.0);
}

TEST_CASE("matmul adjoint and apply agree with the real model") {
  rng::Engine eng = rng::engine(22);
  for (std::size_t n = 1; n <= 4; ++n) {
    const HMatrix a = rng::gaussian_matrix(n, eng);
    const HMatrix b = rng::gaussian_matrix(n, eng);
    const HVector v = rng::gaussian_vector(n, eng);
    const double scale = 1.0 + fro_norm(a) * (fro_norm(b) + norm(v));

    CHECK(oracle::frob(oracle::sub(oracle::rep(a * b),
                                   oracle::mul(oracle::rep(a), oracle::rep(b)))) <=
          1e-12 * scale);
    CHECK(oracle::frob(oracle::sub(oracle::rep(adjoint(a)), oracle::transpose(oracle::rep(a)))) ==
          0.0);
    CHECK(oracle::frob(oracle::sub(oracle::rep(apply(a, v)),
                                   oracle::mul(oracle::rep(a), oracle::rep(v)))) <=
          1e-12 * scale);
  }
}

TEST_CASE("adjoint laws") {
  rng::Engine eng = rng::engine(23);
  const HMatrix a = rng::gaussian_matrix(4, eng);
  const HMatrix b = rng::gaussian_matrix(4, eng);
  CHECK(entrywise_equal(adjoint(adjoint(a)), a));
  const double scale = 1.0 + fro_norm(a) * fro_norm(b);
  CHECK(fro_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) <= 1e-12 * scale);
}

TEST_CASE("right module law") {
  rng::Engine eng = rng::engine(24);
  for (std::size_t n = 1; n <= 4; ++n) {
    const HMatrix a = rng::gaussian_matrix(n, eng);
    const HVector v = rng::gaussian_vector(n, eng);
    const Quaternion s = rng::gaussian_quaternion(eng);
    CHECK(norm(apply(a, v * s) - apply(a, v) * s) <= 1e-12);
    // the real model sees the right action as a matrix on the other side
    CHECK(oracle::frob(oracle::sub(oracle::rep(v * s),
                                   oracle::mul(oracle::rep(v), oracle::rep(s)))) <= 1e-13);
  }
}

TEST_CASE("scalar product is conjugate-linear on the left") {
  rng::Engine eng = rng::engine(25);
  const HVector x = rng::gaussian_vector(3, eng);
  const HVector y = rng::gaussian_vector(3, eng);
  const Quaternion a = rng::gaussian_quaternion(eng);
  const Quaternion b = rng::gaussian_quaternion(eng);
  CHECK(norm(dot(x * a, y * b) - conj(a) * dot(x, y) * b) <= 1e-12);
  const Quaternion xx = dot(x, x);
  CHECK(std::abs(xx.x) <= 1e-14 * (1.0 + xx.w));
  CHECK(std::abs(xx.y) <= 1e-14 * (1.0 + xx.w));
  CHECK(std::abs(xx.z) <= 1e-14 * (1.0 + xx.w));
  CHECK(xx.w >= 0.0);
  CHECK(std::abs(xx.w - norm(x) * norm(x)) <= 1e-12 * xx.w);
}

TEST_CASE("symplectic residual of unit bumps and their products") {
  rng::Engine eng = rng::engine(26);
  for (std::size_t n = 1; n <= 4; ++n) {
    const HMatrix a = bump(rng::unit_vector(n, eng), rng::unit_quaternion(eng));
    const HMatrix b = bump(rng::unit_vector(n, eng), rng::unit_quaternion(eng));
    const double ra = symplectic_residual(a);
    const double rb = symplectic_residual(b);
    CHECK(ra <= 1e-12);
    CHECK(rb <= 1e-12);
    CHECK(symplectic_residual(a * b) <= 10.0 * (ra + rb) + 1e-12);
  }
}

TEST_CASE("embed is the corner inclusion") {
  HMatrix a(1);
  a(0, 0) = kQI;
  const HMatrix e = embed(a);
  CHECK(e.dim() == 2);
  CHECK(e(0, 0) == kQI);
  CHECK(e(1, 1) == kQOne);
  CHECK(e(0, 1) == Quaternion{});
  CHECK(e(1, 0) == Quaternion{});
  CHECK(entrywise_equal(embed(HMatrix::identity(2)), HMatrix::identity(3)));

  rng::Engine eng = rng::engine(27);
  const HMatrix s = bump(rng::unit_vector(3, eng), rng::unit_quaternion(eng));
  CHECK(symplectic_residual(embed(s)) == symplectic_residual(s));
}

TEST_CASE("rank one matrices") {
  rng::Engine eng = rng::engine(28);
  const HVector e1 = HVector::basis(3, 0);
  const Quaternion q{0.3, -0.4, 0.5, 0.6};
  const HMatrix m = rank_one(e1, q);
  CHECK(m(0, 0) == q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i || j) CHECK(m(i, j) == Quaternion{});

  for (int it = 0; it < 50; ++it) {
    const HVector x = rng::unit_vector(3, eng);
    const Quaternion s = rng::gaussian_quaternion(eng);
    const HMatrix r = rank_one(x, s);
    // unit x makes the bump an isometric copy of the scalar
    CHECK(std::abs(fro_norm(r) - norm(s)) <= 1e-13 * (1.0 + norm(s)));
    const HVector y = rng::gaussian_vector(3, eng);
    CHECK(norm(apply(r, y) - x * (s * dot(x, y))) <= 1e-12 * (1.0 + norm(s) * norm(y)));
  }
}

TEST_CASE("size mismatches throw") {
  const HMatrix a(2);
  const HMatrix b(3);
  const HVector v(3);
  CHECK_THROWS_AS((void)(a * b), SizeMismatch);
  CHECK_THROWS_AS((void)(a + b), SizeMismatch);
  CHECK_THROWS_AS((void)(a - b), SizeMismatch);
  CHECK_THROWS_AS((void)apply(a, v), SizeMismatch);
  CHECK_THROWS_AS((void)dot(HVector(2), v), SizeMismatch);
}
