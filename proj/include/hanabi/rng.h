#ifndef HANABI_RNG_H_
#define HANABI_RNG_H_

#include <cstdint>
#include <random>

namespace hanabi {

using Rng = std::mt19937_64;

// Independent child stream of a root seed. Streams with different ids do
// not perturb each other.
inline std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(root),
                    static_cast<std::uint32_t>(root >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

inline Rng MakeRng(std::uint64_t root, std::uint64_t stream) {
  return Rng(DeriveSeed(root, stream));
}

// Uniform integer in [0, n). n must be positive.
inline int UniformIndex(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

// Well-known stream ids under a game's root seed.
namespace streams {
inline constexpr std::uint64_t kDeal = 0;
inline constexpr std::uint64_t kSeatBase = 1;       // + seat index
inline constexpr std::uint64_t kModelBase = 1000;   // + seat * 16 + model seat
}  // namespace streams

}  // namespace hanabi

#endif  // HANABI_RNG_H_
