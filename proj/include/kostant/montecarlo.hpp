#pragma once

// Seeded Monte Carlo estimates of avoidance and Q_n-membership densities.
//
// Trials are cut into `workers` fixed blocks; block w holds trials [w*T/W, (w+1)*T/W) and
// draws from make_stream(seed, w). The sample set therefore depends on (seed, workers) but
// never on scheduling, and successes are summed exactly.

#include <kostant/error.hpp>
#include <kostant/parallel.hpp>
#include <kostant/patterns.hpp>
#include <kostant/permutation.hpp>
#include <kostant/random.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace kostant {

enum class Quantity { PermAvoidFraction, InvAvoidFraction, QMembershipFraction };

constexpr std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::PermAvoidFraction: return "perm_avoid_fraction";
    case Quantity::InvAvoidFraction: return "inv_avoid_fraction";
    case Quantity::QMembershipFraction: return "q_membership_fraction";
  }
  return "unknown";
}

enum class Population { Permutations, Involutions };

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

struct Estimate {
  Quantity quantity = Quantity::PermAvoidFraction;
  int n = 0;
  std::optional<int> k;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  Interval ci95;

  double half_width() const noexcept { return 0.5 * (ci95.high - ci95.low); }
  bool covers(double p) const noexcept { return ci95.low <= p && p <= ci95.high; }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `successes` out of `trials`.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95) {
  if (trials == 0) throw Error(ErrorCode::ZeroTrials, "interval needs at least one trial");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0), std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

namespace detail {

template <class Trial>
Estimate run_trials(Quantity quantity, int n, std::optional<int> k, std::uint64_t trials, std::uint64_t seed,
                    int workers, Trial&& trial) {
  if (trials == 0) throw Error(ErrorCode::ZeroTrials, "trials must be at least 1");
  if (workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be at least 1");
  const auto blocks = static_cast<std::uint64_t>(workers);
  const auto parts = parallel_map<std::uint64_t>(static_cast<std::size_t>(blocks), workers, [&](std::size_t w) {
    const std::uint64_t begin = trials * w / blocks;
    const std::uint64_t end = trials * (w + 1) / blocks;
    Rng rng = make_stream(seed, w);
    std::uint64_t hits = 0;
    for (std::uint64_t t = begin; t < end; ++t) hits += trial(rng) ? 1U : 0U;
    return hits;
  });
  Estimate e;
  e.quantity = quantity;
  e.n = n;
  e.k = k;
  e.trials = trials;
  e.seed = seed;
  e.workers = workers;
  for (const auto h : parts) e.successes += h;
  e.p_hat = static_cast<double>(e.successes) / static_cast<double>(trials);
  e.ci95 = wilson_interval(e.successes, trials);
  return e;
}

}  // namespace detail

/// Fraction of uniform samples from the population that avoid consecutive 2143.
inline Estimate estimate_avoidance(int n, Population population, std::uint64_t trials, std::uint64_t seed,
                                   int workers = 1) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  if (population == Population::Permutations) {
    return detail::run_trials(Quantity::PermAvoidFraction, n, std::nullopt, trials, seed, workers,
                              [n](Rng& rng) { return avoids_consecutive_2143(sample_permutation(n, rng)); });
  }
  return detail::run_trials(Quantity::InvAvoidFraction, n, std::nullopt, trials, seed, workers,
                            [n](Rng& rng) { return avoids_consecutive_2143(sample_involution(n, rng).permutation()); });
}

/// Fraction of uniform involutions of S_n lying in Q_n.
inline Estimate estimate_q_membership(int n, int k, std::uint64_t trials, std::uint64_t seed, int workers = 1) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n < 4 * k) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 4k = " + std::to_string(4 * k));
  return detail::run_trials(Quantity::QMembershipFraction, n, k, trials, seed, workers,
                            [n, k](Rng& rng) { return in_q(sample_involution(n, rng), k); });
}

}  // namespace kostant
