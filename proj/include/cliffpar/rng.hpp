#ifndef CLIFFPAR_RNG_HPP_
#define CLIFFPAR_RNG_HPP_

#include <cstdint>
#include <string_view>

#include "cliffpar/algebra.hpp"

namespace cliffpar {

/// SplitMix64 (Steele, Lea, Vigna): a 64-bit generator with published
/// constants, chosen so that reports are reproducible across platforms and
/// implementations. Every randomized check derives its own stream from
/// (seed, suite name); see suite_stream().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  long long int_in(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

/// Stream for one named check: seed XOR FNV-1a(name) feeds SplitMix64.
SplitMix64 suite_stream(std::uint64_t seed, std::string_view name);

/// Rational with |numerator| <= height_bound and 1 <= denominator <=
/// height_bound, before canonicalisation.
Rational sample_rational(SplitMix64& rng, long height_bound);

/// Element of GF(2)(s,t): numerator and denominator are random polynomials
/// of total degree <= min(height_bound, 2), denominator nonzero.
F2RatFun sample_f2ratfun(SplitMix64& rng, long height_bound);

template <FieldScalar K>
K sample_scalar(SplitMix64& rng, long height_bound) {
  if constexpr (K::kCharTwo) {
    return sample_f2ratfun(rng, height_bound);
  } else {
    return sample_rational(rng, height_bound);
  }
}

/// Nonzero coordinate vector (zero draws are rejected and resampled).
template <FieldScalar K>
Quat<K> sample_quat(SplitMix64& rng, long height_bound) {
  for (;;) {
    Quat<K> q(sample_scalar<K>(rng, height_bound),
              sample_scalar<K>(rng, height_bound),
              sample_scalar<K>(rng, height_bound),
              sample_scalar<K>(rng, height_bound));
    if (!q.is_zero()) return q;
  }
}

/// Nonzero vector outside F*1.
template <FieldScalar K>
Quat<K> sample_noncentral_quat(SplitMix64& rng, long height_bound) {
  for (;;) {
    Quat<K> q = sample_quat<K>(rng, height_bound);
    if (!q.is_central_scalar()) return q;
  }
}

/// Invertible element (nonzero norm; in a certified algebra any nonzero
/// element qualifies, in uncertified ones the draw is rejected).
template <FieldScalar K>
Quat<K> sample_unit(const AlgebraSpec<K>& alg, SplitMix64& rng,
                    long height_bound) {
  for (;;) {
    Quat<K> q = sample_quat<K>(rng, height_bound);
    if (!alg.norm(q).is_zero()) return q;
  }
}

}  // namespace cliffpar

#endif  // CLIFFPAR_RNG_HPP_
