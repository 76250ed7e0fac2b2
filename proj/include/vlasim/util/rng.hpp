#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace vlasim {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent seed from a root seed and a stable stream label.
// Used so that per-worker streams do not shift when unrelated workers are
// added or removed from a run.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                 std::uint64_t index = 0) {
  std::uint64_t h = root ^ 0x8824a7155d1e9e31ull;
  for (char c : label) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return splitmix64(h ^ splitmix64(index));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t root, std::string_view label, std::uint64_t index = 0) {
  return Rng(derive_seed(root, label, index));
}

// Uniform in [0, 1). Implemented directly on the 64-bit output so the result
// does not depend on the standard library's distribution internals.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Integer in [lo, hi], inclusive, via rejection-free scaling of uniform01.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const double u = uniform01(rng);
  const auto span = static_cast<double>(hi - lo + 1);
  auto k = static_cast<std::int64_t>(u * span);
  if (k > hi - lo) k = hi - lo;
  return lo + k;
}

}  // namespace vlasim
