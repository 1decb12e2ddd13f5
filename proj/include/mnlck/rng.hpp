/**
 * Seeded, splittable random number generation.
 *
 * Every randomized routine takes an explicit 64-bit seed and derives one
 * independent std::mt19937_64 per logical stream (sample point, sweep
 * direction, ...) via SplitMix64.  Parallel and serial runs therefore draw
 * identical numbers regardless of scheduling.
 */
#pragma once

#include <cstdint>
#include <random>

namespace mnlck {

/** SplitMix64 mixing step; used only to derive per-stream seeds. */
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/** Independent generator for stream `stream` under master seed `seed`. */
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701)));
}

}  // namespace mnlck
