#include "cfisac/rng.hpp"

#include <cmath>

namespace cfisac {
namespace {

// splitmix64; used only to turn (seed, stream) into a well-mixed engine seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : engine_(mix(mix(seed) ^ mix(stream_index * 0xda942042e4dd58b5ULL + 1))) {}

double RngStream::uniform() {
  // 53 mantissa bits -> [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RngStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

Complex RngStream::cnormal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

CVector RngStream::cnormal_vector(int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cnormal();
  return v;
}

bool RngStream::bernoulli(double p) { return uniform() < p; }

Vec2 RngStream::in_disk(const Vec2& center, double radius) {
  // Polar draw keeps the consumed-variate count fixed at two.
  const double r = radius * std::sqrt(uniform());
  const double a = 2.0 * M_PI * uniform();
  return center + Vec2(r * std::cos(a), r * std::sin(a));
}

}  // namespace cfisac
