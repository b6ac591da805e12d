#include "cliffpar/rng.hpp"

#include "cliffpar/intmath.hpp"

namespace cliffpar {

SplitMix64 suite_stream(std::uint64_t seed, std::string_view name) {
  return SplitMix64(seed ^ fnv1a64(name.data(), name.size()));
}

Rational sample_rational(SplitMix64& rng, long height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be positive");
  long num = rng.int_in(-height_bound, height_bound);
  long den = rng.int_in(1, height_bound);
  return Rational(mpz_class(num), mpz_class(den));
}

namespace {

Gf2BiPoly sample_poly(SplitMix64& rng, int max_total_degree) {
  Gf2BiPoly p;
  std::uint64_t bits = rng.next();
  int used = 0;
  for (int i = 0; i <= max_total_degree; ++i) {
    for (int j = 0; i + j <= max_total_degree; ++j) {
      if ((bits >> used) & 1) p = p + Gf2BiPoly::monomial(i, j);
      ++used;
    }
  }
  return p;
}

}  // namespace

F2RatFun sample_f2ratfun(SplitMix64& rng, long height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be positive");
  int deg = height_bound < 2 ? 1 : 2;
  Gf2BiPoly num = sample_poly(rng, deg);
  Gf2BiPoly den = sample_poly(rng, deg);
  while (den.is_zero()) den = sample_poly(rng, deg);
  return F2RatFun(num, den);
}

}  // namespace cliffpar
