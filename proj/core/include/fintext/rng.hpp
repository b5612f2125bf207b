#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fintext {

/// Seeded random source with explicitly coded transforms. The standard
/// distribution adapters are avoided on purpose: all draws here are a pure
/// function of the mt19937_64 stream, so identical seeds give identical
/// results on every platform and standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    auto v = std::size_t(uniform01() * double(n));
    return v < n ? v : n - 1;
  }

  /// Standard normal via Box-Muller (two fresh uniforms per draw).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze. shape must be > 0.
  double gamma(double shape);

  /// Symmetric Dirichlet of dimension k with concentration conc.
  std::vector<double> dirichlet(double conc, std::size_t k);

  /// Draws an index from an unnormalized cumulative weight array.
  std::size_t sample_cumulative(const std::vector<double>& cumulative);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fintext
