#ifndef CLIFFPAR_INTMATH_HPP_
#define CLIFFPAR_INTMATH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cliffpar {

// Size guards. Coordinates and factorization inputs beyond these bounds
// abort with ResourceError instead of risking unbounded factorization.
inline constexpr std::size_t kCoordinateGuardBits = 4096;
inline constexpr unsigned long kTrialDivisionBound = 1u << 20;  // 1048576

/// Deterministic Miller-Rabin, valid for all n < 3.3e24 (first 13 prime
/// bases). Inputs beyond that bound raise ResourceError.
bool is_prime(const mpz_class& n);

/// Complete factorization by trial division up to kTrialDivisionBound.
/// Requires |n| < 2^40 so the trial bound certifies completeness.
/// Returns (prime, exponent) pairs for |n|; n must be nonzero.
std::vector<std::pair<mpz_class, int>> factor_small(const mpz_class& n);

/// Signed squarefree part: the unique squarefree d with n = d*m^2.
/// Strips primes below kTrialDivisionBound, then certifies the cofactor
/// (1, square, prime, or a semiprime below 10^18). Larger uncertifiable
/// cofactors raise ResourceError; n beyond kCoordinateGuardBits likewise.
mpz_class squarefree_part_int(const mpz_class& n);

/// Hilbert symbol (a,b)_p over Q_p; p = 0 encodes the real place.
/// a, b nonzero; p prime or 0. Returns +1 or -1.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

/// Whether the quaternion algebra (a,b | Q) with i^2=a, j^2=b, ji=-ij is a
/// skew field. Decided by Hilbert symbols at 2, the real place, and the odd
/// primes dividing a*b. Requires a, b nonzero with |a|,|b| < 2^40.
bool quaternion_algebra_is_division(const mpz_class& a, const mpz_class& b);

/// FNV-1a 64-bit hash, used to derive per-suite PRNG streams from names.
std::uint64_t fnv1a64(const char* data, std::size_t n);

}  // namespace cliffpar

#endif  // CLIFFPAR_INTMATH_HPP_
