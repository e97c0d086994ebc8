#pragma once

#include <cstdint>

namespace lcfpost {

// splitmix64 finalizer. Used to expand one user seed into independent
// substream seeds: substream k of seed s starts from
// splitmix64(s + k * 0x9E3779B97F4A7C15).
std::uint64_t splitmix64(std::uint64_t x);

// Counter-seeded xoshiro256** stream. Stream identity is (seed, stream
// index), so any number of streams can be created in any order, on any
// worker, and still produce the same draws. All randomness in the library
// flows through this type.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on (0, 1], 53-bit resolution. The open lower end keeps
  // -log(u) finite.
  double next_unit();

  // Uniform on [-1, 1).
  double next_symmetric();

private:
  std::uint64_t s_[4];
};

}  // namespace lcfpost
