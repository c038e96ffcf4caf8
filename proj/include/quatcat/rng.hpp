#pragma once

#include <cstdint>
#include <random>

#include "quatcat/hmatrix.hpp"
#include "quatcat/quaternion.hpp"

// Deterministic sampling. Every sample site owns its own engine, seeded
// through derive(), so results never depend on evaluation order or on how
// work is split across threads.

namespace quatcat::rng {

using Engine = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby seeds.
[[nodiscard]] constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

[[nodiscard]] constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return mix(mix(seed) ^ mix(index));
}

[[nodiscard]] constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream,
                                             std::uint64_t index) {
  return derive(derive(seed, stream), index);
}

[[nodiscard]] inline Engine engine(std::uint64_t seed) { return Engine(mix(seed)); }

[[nodiscard]] inline Quaternion gaussian_quaternion(Engine& eng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double w = g(eng);
  const double x = g(eng);
  const double y = g(eng);
  const double z = g(eng);
  return {w, x, y, z};
}

/// Uniform point on the unit quaternions.
[[nodiscard]] inline Quaternion unit_quaternion(Engine& eng) {
  for (;;) {
    const Quaternion q = gaussian_quaternion(eng);
    const double m = norm(q);
    if (m > 1e-8) return q * (1.0 / m);
  }
}

/// Uniform unit imaginary quaternion.
[[nodiscard]] inline Quaternion unit_imaginary(Engine& eng) {
  for (;;) {
    Quaternion q = gaussian_quaternion(eng);
    q.w = 0.0;
    const double m = norm(q);
    if (m > 1e-8) return q * (1.0 / m);
  }
}

[[nodiscard]] inline HVector gaussian_vector(std::size_t n, Engine& eng) {
  HVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = gaussian_quaternion(eng);
  return v;
}

/// Uniform point on the unit sphere of H^n.
[[nodiscard]] inline HVector unit_vector(std::size_t n, Engine& eng) {
  for (;;) {
    const HVector v = gaussian_vector(n, eng);
    const double m = norm(v);
    if (m > 1e-8) return v * Quaternion::real(1.0 / m);
  }
}

[[nodiscard]] inline HMatrix gaussian_matrix(std::size_t n, Engine& eng) {
  HMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gaussian_quaternion(eng);
  return a;
}

}  // namespace quatcat::rng
