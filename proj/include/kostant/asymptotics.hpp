#pragma once

// Growth diagnostics for i_n and the closed-form bounds of the density arguments.

#include <kostant/error.hpp>
#include <kostant/exact.hpp>
#include <kostant/sequences.hpp>

#include <cmath>
#include <optional>
#include <vector>

namespace kostant {

/// ln i_n, taken from the exact big integer.
inline double log_involution_number(int n) { return log_of(involution_number(n)); }

/// r(n) = i_n / (n^{n/2} e^{-n/2 + sqrt n}), evaluated in log space.
inline double asymptotic_ratio(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "asymptotic_ratio needs n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(log_involution_number(n) - 0.5 * x * std::log(x) + 0.5 * x - std::sqrt(x));
}

/// (23/24)^k: the probability that k disjoint windows all avoid 2143 in a uniform permutation.
inline Rational theorem3_bound(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  return power(Rational(23, 24), static_cast<unsigned>(k));
}

/// 16 C(k,2) i_{n-2} / i_n, exact. Upper bound on the share of involutions outside Q_n.
inline Rational lemma6_bound_exact(int n, int k) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "lemma6_bound needs n >= 2");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "lemma6_bound needs k >= 1");
  const BigInt pairs = BigInt(k) * (k - 1) / 2;
  return Rational(16 * pairs * involution_number(n - 2), involution_number(n));
}

inline double lemma6_bound(int n, int k) { return to_double(lemma6_bound_exact(n, k)); }

/// Largest k with 4k^3 <= n (0 when n < 4).
inline int cube_regime_k(int n) {
  int k = 0;
  while (4L * (k + 1) * (k + 1) * (k + 1) <= n) ++k;
  return k;
}

struct AsymptoticsRow {
  int n = 0;
  BigInt involutions;
  BigInt motzkin;
  double ratio = 0.0;
  std::optional<double> lemma6;  // at k = cube_regime_k(n); absent when that k is 0
};

inline std::vector<AsymptoticsRow> asymptotics_table(int max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 1");
  std::vector<AsymptoticsRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    AsymptoticsRow row{n, involution_number(n), motzkin_number(n), asymptotic_ratio(n), std::nullopt};
    if (const int k = cube_regime_k(n); k >= 1 && n >= 2) row.lemma6 = lemma6_bound(n, k);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kostant
