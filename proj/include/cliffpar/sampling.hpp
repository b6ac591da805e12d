#ifndef CLIFFPAR_SAMPLING_HPP_
#define CLIFFPAR_SAMPLING_HPP_

#include <array>
#include <vector>

#include "cliffpar/rng.hpp"
#include "cliffpar/subspace.hpp"

namespace cliffpar {

template <FieldScalar K>
Subspace<K> sample_point(SplitMix64& rng, long height_bound) {
  return Subspace<K>::point(sample_quat<K>(rng, height_bound));
}

template <FieldScalar K>
Subspace<K> sample_line(SplitMix64& rng, long height_bound) {
  for (;;) {
    Subspace<K> s = Subspace<K>::span(
        {sample_quat<K>(rng, height_bound), sample_quat<K>(rng, height_bound)});
    if (s.is_line()) return s;
  }
}

/// A line through the unit point (a star line).
template <FieldScalar K>
Subspace<K> sample_star_line(SplitMix64& rng, long height_bound) {
  return Subspace<K>::span(
      {Quat<K>::one(), sample_noncentral_quat<K>(rng, height_bound)});
}

template <FieldScalar K>
Subspace<K> sample_plane_through(SplitMix64& rng, long height_bound,
                                 const Subspace<K>& line) {
  for (;;) {
    Subspace<K> s = join(line, Subspace<K>::point(sample_quat<K>(rng, height_bound)));
    if (s.is_plane()) return s;
  }
}

/// Three points spanning a plane (a triangle).
template <FieldScalar K>
std::array<Subspace<K>, 3> sample_triangle(SplitMix64& rng, long height_bound) {
  for (;;) {
    Quat<K> q0 = sample_quat<K>(rng, height_bound);
    Quat<K> q1 = sample_quat<K>(rng, height_bound);
    Quat<K> q2 = sample_quat<K>(rng, height_bound);
    if (Subspace<K>::span({q0, q1, q2}).dim() == 3) {
      return {Subspace<K>::point(q0), Subspace<K>::point(q1),
              Subspace<K>::point(q2)};
    }
  }
}

}  // namespace cliffpar

#endif  // CLIFFPAR_SAMPLING_HPP_
