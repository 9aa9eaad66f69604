#pragma once

#include <cstdint>
#include <random>

#include "cfisac/types.hpp"

namespace cfisac {

/// Deterministic random stream identified by (seed, stream index).
///
/// Distinct stream indices under the same seed give statistically independent
/// streams, and a given (seed, index) pair reproduces the same sequence on
/// every run regardless of which thread consumes it. Monte Carlo trials take
/// one stream per trial index so results do not depend on scheduling order.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  /// Uniform double in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Circularly-symmetric complex normal with unit variance:
  /// real and imaginary parts each N(0, 1/2).
  Complex cnormal();

  CVector cnormal_vector(int n);

  bool bernoulli(double p);

  /// Uniform point in the disk of given radius around center.
  Vec2 in_disk(const Vec2& center, double radius);

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cfisac
