#pragma once

#include <cmath>
#include <cstdint>

namespace effrank {

// Counter-based generator: every 64-bit word is a pure function of
// (key, counter), so any (seed, replicate, setup, metric) tuple gets an
// independent stream that can be opened anywhere, in any order.
class CounterRng {
 public:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  CounterRng(std::uint64_t seed, std::uint64_t replicate, std::uint64_t setup,
             std::uint64_t metric) {
    std::uint64_t h = mix(seed);
    h = mix(h ^ (0x9e3779b97f4a7c15ULL * (replicate + 1)));
    h = mix(h ^ (0xbf58476d1ce4e5b9ULL * (setup + 1)));
    h = mix(h ^ (0x94d049bb133111ebULL * (metric + 1)));
    key_ = h;
  }

  std::uint64_t next_u64() { return mix(key_ ^ counter_++); }

  // Uniform on (0, 1]; never returns 0, so log() below is safe.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  // One Box-Muller normal per call (the cosine branch; the sine twin is
  // discarded to keep the draw count per metric fixed).
  double normal(double mu, double sigma) {
    double u1 = next_unit();
    double u2 = next_unit();
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    return mu + sigma * z;
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace effrank
