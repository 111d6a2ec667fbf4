#ifndef PSS_RANDOM_HPP
#define PSS_RANDOM_HPP

#include <cstdint>
#include <random>

namespace pss
{

/**
 * Seedable uniform stream.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard, so a seed reproduces the same draws on every conforming
 * implementation. Draws are converted to [0,1) by taking the top 53 bits of
 * each 64-bit word and scaling by 2^-53; std::uniform_real_distribution is
 * avoided because its algorithm is implementation-defined.
 *
 * A stream is single-owner. Parallel replicates each construct their own
 * stream from derive_seed().
 */
class RandomStream
{
public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Next draw in [0,1).
  double uniform()
  {
    ++position_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const noexcept { return seed_; }

  /// Number of draws consumed so far.
  std::uint64_t position() const noexcept { return position_; }

private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept
{
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/**
 * Seed for replicate `index` of a batch started from `base`.
 *
 * Splitting rule: splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15),
 * a pure function of (base, index).
 */
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
  return splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15ull);
}

}  // namespace pss

#endif  // PSS_RANDOM_HPP
