#pragma once

// Brute-force verifiers and seeded generators. Nothing here shares code
// paths with the Fourier-Motzkin engine or the flag canonicalisation.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pospart/exactlin.hpp"
#include "pospart/positive.hpp"
#include "pospart/topo.hpp"

namespace pospart::oracle {

inline constexpr std::size_t kMaxBruteforcePoints = 8;
inline constexpr long kMaxBruteforceBound = 12;

/// Exhaustive search for multipliers in [1, bound] over nonempty subsets,
/// smallest subsets first (then by bitmask, then lexicographic multipliers).
/// Not complete: a certificate needing larger multipliers is missed.
std::optional<Certificate> gordan_bruteforce(const FinitePointSet &e,
                                             long bound);

/// Lexicographic sign of the raw forms at lambda, >= 0.
bool membership_oracle(std::span<const Covector> forms,
                       const LatticePoint &lambda);

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  LatticePoint point(std::size_t d, long box);
  LatticePoint nonzero_point(std::size_t d, long box);
  Covector form(std::size_t d, long box);
  Covector nonzero_form(std::size_t d, long box);
  IntMatrix matrix(std::size_t rows, std::size_t cols, long box);
  /// Valid flag of at most max_stages forms with entries in [-3, 3];
  /// forms that vanish on the current kernel are redrawn.
  PositivePart positive_part(std::size_t d, std::size_t max_stages);
  FinitePointSet point_set(std::size_t d, std::size_t max_size, long box);

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

PositivePart random_positive_part(std::uint64_t seed, std::size_t d,
                                  std::size_t max_stages);
LatticePoint random_point(std::uint64_t seed, std::size_t d, long box);

} // namespace pospart::oracle
