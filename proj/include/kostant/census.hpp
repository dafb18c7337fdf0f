#pragma once

// Exact counting engines and verifiers for the block-window arguments.
//
// Permutation counts use backtracking over one-line prefixes: a prefix of length m >= 4 is
// cut as soon as its last window (positions m-3..m) is a checked window that shows 2143.
// Every window is examined exactly once, when it completes. Work is split by the first two
// entries; partial counts are summed in task order.

#include <kostant/error.hpp>
#include <kostant/exact.hpp>
#include <kostant/parallel.hpp>
#include <kostant/patterns.hpp>
#include <kostant/permutation.hpp>
#include <kostant/sequences.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kostant {

enum class CountKind { PermAvoiders, InvAvoiders, WindowAvoiders, QSize, CaseTotal, CaseViolators };

constexpr std::string_view to_string(CountKind kind) noexcept {
  switch (kind) {
    case CountKind::PermAvoiders: return "perm_avoiders";
    case CountKind::InvAvoiders: return "inv_avoiders";
    case CountKind::WindowAvoiders: return "window_avoiders";
    case CountKind::QSize: return "q_size";
    case CountKind::CaseTotal: return "case_total";
    case CountKind::CaseViolators: return "case_violators";
  }
  return "unknown";
}

struct CountParams {
  std::vector<int> blocks;      // window_avoiders
  std::optional<int> k;         // q_size
  std::optional<int> case_id;   // case_total, case_violators

  friend bool operator==(const CountParams&, const CountParams&) = default;
};

struct ExactCount {
  CountKind kind = CountKind::PermAvoiders;
  int n = 0;
  CountParams params;
  BigInt value;

  friend bool operator==(const ExactCount&, const ExactCount&) = default;
};

// Stable identity of a count, used as the cache key: "kind|n=..|blocks=..|k=..|case=..".
inline std::string count_key(CountKind kind, int n, const CountParams& params) {
  std::string key = std::string(to_string(kind)) + "|n=" + std::to_string(n);
  if (!params.blocks.empty()) {
    key += "|blocks=";
    for (std::size_t i = 0; i < params.blocks.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(params.blocks[i]);
    }
  }
  if (params.k) key += "|k=" + std::to_string(*params.k);
  if (params.case_id) key += "|case=" + std::to_string(*params.case_id);
  return key;
}

inline std::string count_key(const ExactCount& c) { return count_key(c.kind, c.n, c.params); }

namespace detail {

// Counts completions of `prefix` to a permutation of S_n in which no window whose start is
// flagged in `checked` (1-based starts) shows 2143.
class PrunedPermutationCounter {
 public:
  PrunedPermutationCounter(int n, std::vector<bool> checked) : n_(n), checked_(std::move(checked)) {
    // 64-bit used-value mask and 64-bit counts.
    require_degree_at_most(n_, 20, "pruned permutation counter");
    // last_checked_end_: largest position that closes a checked window, 0 if none.
    for (int s = 1; s + 3 <= n_; ++s) {
      if (checked_[static_cast<std::size_t>(s)]) last_checked_end_ = s + 3;
    }
    factorial_.assign(static_cast<std::size_t>(n_) + 1, 1);
    for (int i = 2; i <= n_; ++i) factorial_[static_cast<std::size_t>(i)] = factorial_[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  }

  std::uint64_t count(std::span<const int> prefix) const {
    std::vector<int> values(static_cast<std::size_t>(n_), 0);
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int v = prefix[i];
      if (v < 1 || v > n_ || (used >> v & 1U)) return 0;
      used |= std::uint64_t{1} << v;
      values[i] = v;
      if (closes_violation(values, static_cast<int>(i) + 1)) return 0;
    }
    return extend(values, static_cast<int>(prefix.size()), used);
  }

 private:
  bool closes_violation(const std::vector<int>& values, int length) const {
    const int start = length - 3;
    return start >= 1 && checked_[static_cast<std::size_t>(start)] && violates_window(values, start);
  }

  std::uint64_t extend(std::vector<int>& values, int length, std::uint64_t used) const {
    // Past the last checked window every completion survives.
    if (length >= last_checked_end_) return factorial_[static_cast<std::size_t>(n_ - length)];
    std::uint64_t total = 0;
    for (int v = 1; v <= n_; ++v) {
      if (used >> v & 1U) continue;
      values[static_cast<std::size_t>(length)] = v;
      if (!closes_violation(values, length + 1)) total += extend(values, length + 1, used | (std::uint64_t{1} << v));
    }
    return total;
  }

  int n_;
  std::vector<bool> checked_;
  int last_checked_end_ = 0;
  std::vector<std::uint64_t> factorial_;
};

inline BigInt count_pruned_permutations(int n, std::vector<bool> checked, int workers) {
  const PrunedPermutationCounter counter(n, std::move(checked));
  if (n < 2) return BigInt(counter.count({}));
  std::vector<std::array<int, 2>> prefixes;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) prefixes.push_back({a, b});
    }
  }
  const auto parts = parallel_map<std::uint64_t>(prefixes.size(), workers, [&](std::size_t i) { return counter.count(prefixes[i]); });
  BigInt total = 0;
  for (const auto part : parts) total += part;
  return total;
}

// Involution recursion with window pruning. Positions 1..a-1 are always assigned when the
// smallest open position is a, so every window ending before a is complete and checked once.
class PrunedInvolutionCounter {
 public:
  explicit PrunedInvolutionCounter(int n) : n_(n) {}

  std::uint64_t count_with_first_partner(int first_partner) const {
    std::vector<int> v(static_cast<std::size_t>(n_), 0);
    v[0] = first_partner;
    v[static_cast<std::size_t>(first_partner - 1)] = 1;
    return extend(v, 2, 0);
  }

 private:
  // Checks windows ending at checked_to+1 .. upto; false on a violation.
  bool check_windows(const std::vector<int>& v, int& checked_to, int upto) const {
    for (int end = checked_to + 1; end <= upto; ++end) {
      if (end >= 4 && violates_window(v, end - 3)) return false;
    }
    checked_to = std::max(checked_to, upto);
    return true;
  }

  std::uint64_t extend(std::vector<int>& v, int a, int checked_to) const {
    while (a <= n_ && v[static_cast<std::size_t>(a - 1)] != 0) ++a;
    if (!check_windows(v, checked_to, a - 1)) return 0;
    if (a > n_) return 1;
    std::uint64_t total = 0;
    v[static_cast<std::size_t>(a - 1)] = a;
    total += extend(v, a + 1, checked_to);
    v[static_cast<std::size_t>(a - 1)] = 0;
    for (int b = a + 1; b <= n_; ++b) {
      if (v[static_cast<std::size_t>(b - 1)] != 0) continue;
      v[static_cast<std::size_t>(a - 1)] = b;
      v[static_cast<std::size_t>(b - 1)] = a;
      total += extend(v, a + 1, checked_to);
      v[static_cast<std::size_t>(a - 1)] = 0;
      v[static_cast<std::size_t>(b - 1)] = 0;
    }
    return total;
  }

  int n_;
};

}  // namespace detail

/// Number of w in S_n with no consecutive 2143 occurrence.
inline ExactCount count_avoiding_permutations(int n, const Limits& limits = {}, int workers = 1) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  require_degree_at_most(n, limits.max_perm_degree, "count_avoiding_permutations");
  std::vector<bool> checked(static_cast<std::size_t>(n) + 1, true);
  return {CountKind::PermAvoiders, n, {}, detail::count_pruned_permutations(n, std::move(checked), workers)};
}

/// Number of involutions of S_n with no consecutive 2143 occurrence.
inline ExactCount count_avoiding_involutions(int n, const Limits& limits = {}, int workers = 1) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  require_degree_at_most(n, limits.max_involution_degree, "count_avoiding_involutions");
  const detail::PrunedInvolutionCounter counter(n);
  const auto parts = parallel_map<std::uint64_t>(static_cast<std::size_t>(n), workers, [&](std::size_t i) {
    return counter.count_with_first_partner(static_cast<int>(i) + 1);
  });
  BigInt total = 0;
  for (const auto part : parts) total += part;
  return {CountKind::InvAvoiders, n, {}, total};
}

/// Number of w in S_n with X_b true for every listed block. Duplicates are ignored and the
/// block list is normalized to increasing order.
inline ExactCount count_window_avoiders(int n, std::vector<int> blocks, const Limits& limits = {}, int workers = 1) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  for (const int b : blocks) {
    if (b < 1 || 4 * b > n) {
      throw Error(ErrorCode::BlockOutOfRange, "block " + std::to_string(b) + " does not fit in degree " + std::to_string(n));
    }
  }
  require_degree_at_most(n, limits.max_perm_degree, "count_window_avoiders");
  std::vector<bool> checked(static_cast<std::size_t>(n) + 1, false);
  for (const int b : blocks) checked[static_cast<std::size_t>(Block{b}.first())] = true;
  auto value = detail::count_pruned_permutations(n, std::move(checked), workers);
  return {CountKind::WindowAvoiders, n, {blocks, std::nullopt, std::nullopt}, std::move(value)};
}

// ---------------------------------------------------------------------------
// Involution families on one block.

struct CaseReport {
  int case_id = 1;
  int intersection = 4;  // |A ∩ w(A)|
  std::uint64_t total = 0;
  std::uint64_t violators = 0;
  std::vector<Permutation> violator_list;
};

/// Case c in 1..5 has |A ∩ w(A)| = 5 - c.
constexpr int case_intersection(int case_id) noexcept { return 5 - case_id; }

/// The family for block A = {1,2,3,4} with 4 - intersection external partners r_1 < r_2 < ...
/// placed at positions 5, 6, ... (all above A). Each external is paired with a distinct point
/// of A; the remaining points of A carry any involution among themselves. Members are listed
/// as involutions of degree 4 + #externals, externals assigned in lexicographic order.
inline std::vector<Permutation> block_case_family(int intersection) {
  if (intersection < 0 || intersection > 4) throw Error(ErrorCode::InvalidArgument, "intersection must be in 0..4");
  const int externals = 4 - intersection;
  const int n = 4 + externals;
  std::vector<Permutation> family;
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  auto fill_inside = [&](auto&& self, int a) -> void {
    while (a <= 4 && values[static_cast<std::size_t>(a - 1)] != 0) ++a;
    if (a > 4) {
      family.push_back(make_permutation(values));
      return;
    }
    values[static_cast<std::size_t>(a - 1)] = a;
    self(self, a + 1);
    values[static_cast<std::size_t>(a - 1)] = 0;
    for (int b = a + 1; b <= 4; ++b) {
      if (values[static_cast<std::size_t>(b - 1)] != 0) continue;
      values[static_cast<std::size_t>(a - 1)] = b;
      values[static_cast<std::size_t>(b - 1)] = a;
      self(self, a + 1);
      values[static_cast<std::size_t>(a - 1)] = 0;
      values[static_cast<std::size_t>(b - 1)] = 0;
    }
  };
  auto attach_external = [&](auto&& self, int j) -> void {
    if (j > externals) {
      fill_inside(fill_inside, 1);
      return;
    }
    const int r = 4 + j;
    for (int a = 1; a <= 4; ++a) {
      if (values[static_cast<std::size_t>(a - 1)] != 0) continue;
      values[static_cast<std::size_t>(a - 1)] = r;
      values[static_cast<std::size_t>(r - 1)] = a;
      self(self, j + 1);
      values[static_cast<std::size_t>(a - 1)] = 0;
      values[static_cast<std::size_t>(r - 1)] = 0;
    }
  };
  attach_external(attach_external, 1);
  return family;
}

/// Totals and violators of the block window for case 1..5.
inline CaseReport verify_case(int case_id) {
  if (case_id < 1 || case_id > 5) throw Error(ErrorCode::InvalidCaseId, "case must be 1..5, got " + std::to_string(case_id));
  CaseReport report;
  report.case_id = case_id;
  report.intersection = case_intersection(case_id);
  for (auto& w : block_case_family(report.intersection)) {
    ++report.total;
    if (!window_event(w, 1)) {
      ++report.violators;
      report.violator_list.push_back(std::move(w));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Block events over Q_n.

/// Intersection profile of one involution: |A_b ∩ w(A_b)| for b = 1..k.
inline std::vector<int> block_intersections(const Permutation& w, int k) {
  std::vector<int> out(static_cast<std::size_t>(k), 0);
  for (int a = 1; a <= 4 * k; ++a) {
    if (Block::of(w(a)) == Block::of(a)) ++out[static_cast<std::size_t>(Block::of(a) - 1)];
  }
  return out;
}

struct ProfileTally {
  std::vector<int> intersections;       // |A_b ∩ w(A_b)| per block
  std::uint64_t count = 0;              // members of Q_n with this profile
  std::vector<std::uint64_t> avoiders;  // members with X_b, per block
  std::uint64_t joint_avoiders = 0;     // members with every X_b
};

struct QStats {
  int n = 0;
  int k = 0;
  BigInt involutions;              // i_n
  BigInt q_size;                   // |Q_n|
  std::vector<Rational> p_event;   // P(X_b) over Q_n, b = 1..k
  Rational p_joint;                // P(∩ X_b) over Q_n
  std::vector<ProfileTally> profiles;  // sorted by intersection profile

  /// P(X_b | |A_b ∩ w(A_b)| = c) for each c that occurs, per block.
  std::vector<std::map<int, Rational>> conditional() const {
    std::vector<std::map<int, std::pair<std::uint64_t, std::uint64_t>>> acc(static_cast<std::size_t>(k));
    for (const auto& p : profiles) {
      for (int b = 0; b < k; ++b) {
        auto& slot = acc[static_cast<std::size_t>(b)][p.intersections[static_cast<std::size_t>(b)]];
        slot.first += p.count;
        slot.second += p.avoiders[static_cast<std::size_t>(b)];
      }
    }
    std::vector<std::map<int, Rational>> out(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
      for (const auto& [c, tally] : acc[static_cast<std::size_t>(b)]) {
        out[static_cast<std::size_t>(b)][c] = Rational(BigInt(tally.second), BigInt(tally.first));
      }
    }
    return out;
  }

  Rational product_of_events() const {
    Rational product = 1;
    for (const auto& p : p_event) product *= p;
    return product;
  }

  /// P(∩ X_b) == ∏ P(X_b) exactly.
  bool independent() const { return p_joint == product_of_events(); }

  /// Within every intersection profile the joint frequency factorizes exactly.
  bool conditionally_independent() const {
    for (const auto& p : profiles) {
      Rational product = 1;
      for (const auto a : p.avoiders) product *= Rational(BigInt(a), BigInt(p.count));
      if (Rational(BigInt(p.joint_avoiders), BigInt(p.count)) != product) return false;
    }
    return true;
  }
};

/// Exhaustive statistics of the block events over Q_n (uniform law on Q_n).
inline QStats q_statistics(int n, int k, const Limits& limits = {}, int workers = 1) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n < 4 * k) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 4k = " + std::to_string(4 * k));
  require_degree_at_most(n, limits.max_involution_degree, "q_statistics");

  using Tallies = std::map<std::vector<int>, ProfileTally>;
  const auto parts = parallel_map<Tallies>(static_cast<std::size_t>(n), workers, [&](std::size_t i) {
    Tallies tallies;
    for_each_involution_with_first_partner(n, static_cast<int>(i) + 1, [&](const Permutation& w) {
      for (int a = 1; a <= 4 * k; ++a) {
        const int b = w(a);
        if (b <= 4 * k && Block::of(b) != Block::of(a)) return;
      }
      auto profile = block_intersections(w, k);
      auto& t = tallies[profile];
      if (t.count == 0) {
        t.intersections = std::move(profile);
        t.avoiders.assign(static_cast<std::size_t>(k), 0);
      }
      ++t.count;
      bool all = true;
      for (int blk = 1; blk <= k; ++blk) {
        const bool avoid = !violates_window(w.values(), Block{blk}.first());
        t.avoiders[static_cast<std::size_t>(blk - 1)] += avoid;
        all = all && avoid;
      }
      t.joint_avoiders += all;
    });
    return tallies;
  });

  Tallies merged;
  for (const auto& part : parts) {
    for (const auto& [profile, t] : part) {
      auto& m = merged[profile];
      if (m.count == 0) {
        m.intersections = profile;
        m.avoiders.assign(static_cast<std::size_t>(k), 0);
      }
      m.count += t.count;
      for (int b = 0; b < k; ++b) m.avoiders[static_cast<std::size_t>(b)] += t.avoiders[static_cast<std::size_t>(b)];
      m.joint_avoiders += t.joint_avoiders;
    }
  }

  QStats stats;
  stats.n = n;
  stats.k = k;
  stats.involutions = involution_number(n);
  std::uint64_t size = 0;
  std::uint64_t joint = 0;
  std::vector<std::uint64_t> events(static_cast<std::size_t>(k), 0);
  for (auto& [profile, t] : merged) {
    size += t.count;
    joint += t.joint_avoiders;
    for (int b = 0; b < k; ++b) events[static_cast<std::size_t>(b)] += t.avoiders[static_cast<std::size_t>(b)];
    stats.profiles.push_back(std::move(t));
  }
  // Q_n always contains the identity, so size >= 1.
  stats.q_size = size;
  for (const auto e : events) stats.p_event.emplace_back(BigInt(e), BigInt(size));
  stats.p_joint = Rational(BigInt(joint), BigInt(size));
  return stats;
}

}  // namespace kostant
