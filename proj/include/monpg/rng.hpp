#pragma once

#include <cstdint>
#include <string_view>

#include "monpg/types.hpp"

namespace monpg {

/// Deterministic counter-based generator (SplitMix64, Steele et al. 2014).
/// Output i for seed s is mix(s + (i+1)*0x9E3779B97F4A7C15), so every draw
/// is a pure function of (seed, counter) and results are reproducible across
/// platforms and thread schedules.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Componentwise uniform vector in [lb, ub).
  Vector next_in_box(const Vector& lb, const Vector& ub) {
    Vector x(lb.size());
    for (Index i = 0; i < lb.size(); ++i) x[i] = next_in(lb[i], ub[i]);
    return x;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a string, used when deriving sub-stream seeds from names.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Seed for the independent stream of start `index` of (problem, solver)
/// under `master`. Distinct tuples get decorrelated streams; equal tuples
/// always get the same stream, so any subset of starts is reproducible.
inline std::uint64_t stream_seed(std::uint64_t master, std::string_view problem,
                                 std::string_view solver, std::uint64_t index) {
  SplitMix64 mix(master ^ fnv1a(problem));
  std::uint64_t a = mix.next_u64();
  SplitMix64 mix2(a ^ fnv1a(solver));
  std::uint64_t b = mix2.next_u64();
  SplitMix64 mix3(b ^ (index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
  return mix3.next_u64();
}

}  // namespace monpg
