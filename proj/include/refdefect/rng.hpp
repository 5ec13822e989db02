#pragma once

#include <cstdint>
#include <string_view>

#include "refdefect/scalar.hpp"

namespace refdefect {

/// splitmix64. Byte-identical output on every platform, which the sweep
/// determinism contract depends on; std::uniform_int_distribution is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish in [0, n); n > 0.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  /// Inclusive range [lo, hi].
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  /// Rational with numerator in [-max_num, max_num] and denominator in
  /// [1, max_den].
  Rational rational(int max_num = 9, int max_den = 4) {
    Rational q(range(-max_num, max_num), range(1, max_den));
    q.canonicalize();
    return q;
  }

  Scalar scalar(int max_num = 9, int max_den = 4, bool with_imag = true) {
    Rational re = rational(max_num, max_den);
    Rational im = with_imag ? rational(max_num, max_den) : Rational(0);
    return Scalar(std::move(re), std::move(im));
  }

 private:
  std::uint64_t state_;
};

/// Deterministic per-case seed: FNV-1a of the tag folded into the base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = 14695981039346656037ULL ^ base;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace refdefect
