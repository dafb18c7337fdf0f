#pragma once

// Seeded random streams. One independent stream per worker, derived from (seed, worker).

#include <kostant/exact.hpp>

#include <boost/random/uniform_int_distribution.hpp>

#include <cstdint>
#include <random>

namespace kostant {

using Rng = std::mt19937_64;

/// Stream for `worker` under `seed`: std::seed_seq over the four 32-bit halves.
inline Rng make_stream(std::uint64_t seed, std::uint64_t worker = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32)};
  return Rng(seq);
}

// Uniform integer in [0, bound), bound >= 1.
template <class Gen>
std::uint64_t uniform_below(Gen& gen, std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(gen);
}

template <class Gen>
BigInt uniform_below(Gen& gen, const BigInt& bound) {
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    return BigInt(uniform_below(gen, bound.convert_to<std::uint64_t>()));
  }
  boost::random::uniform_int_distribution<BigInt> dist(0, bound - 1);
  return dist(gen);
}

}  // namespace kostant
