#ifndef NILCOMM_SEEDING_HPP
#define NILCOMM_SEEDING_HPP

#include <cstdint>

namespace nilcomm {

/// Independent seed for trial `index` of a run seeded with `base`
/// (splitmix64 finaliser). Results keyed by trial index stay identical no
/// matter how trials are spread over workers.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace nilcomm

#endif  // NILCOMM_SEEDING_HPP
