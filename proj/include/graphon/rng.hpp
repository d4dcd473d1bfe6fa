#pragma once

#include <cstdint>

namespace graphon::rng {

// Counter-based random number generation.  Every draw is a pure function of
// a 64-bit key and one or two counters, so sampling is reproducible
// bit-for-bit regardless of evaluation order or thread scheduling, and the
// output is identical across platforms (no dependence on std::
// distributions, whose streams are implementation-defined).

// SplitMix64 finalizer: a bijective avalanche mix on 64-bit words.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of a running key with one more word.
inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (splitmix64(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// 53 random bits mapped to a double in [0, 1).
inline double u01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Purpose tags keep draws for unrelated uses on distinct streams even when
// the user-facing seed is the same.
enum class Tag : std::uint64_t {
  latents = 0x4c4154454e545355ULL,
  edges = 0x4544474553414d50ULL,
  trials = 0x545249414c53454cULL,
  matrices = 0x4d41545249584d4bULL,
};

inline std::uint64_t stream_key(std::uint64_t seed, Tag tag) {
  return combine(seed, static_cast<std::uint64_t>(tag));
}

// i-th uniform of the stream identified by `key`.
inline double uniform_at(std::uint64_t key, std::uint64_t i) {
  return u01(combine(key, i));
}

// Uniform attached to the ordered pair (i, j) of the stream `key`.
inline double uniform_at(std::uint64_t key, std::uint64_t i, std::uint64_t j) {
  return u01(combine(combine(key, i), j));
}

}  // namespace graphon::rng
