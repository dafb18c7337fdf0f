#pragma once

// Consecutive and classical 2143 occurrences, and the block events X_b.

#include <kostant/error.hpp>
#include <kostant/permutation.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kostant {

enum class OccurrenceKind { Consecutive, Classical };

constexpr std::string_view to_string(OccurrenceKind kind) noexcept {
  return kind == OccurrenceKind::Consecutive ? "consecutive" : "classical";
}

struct Occurrence {
  int start = 1;
  OccurrenceKind kind = OccurrenceKind::Consecutive;
  std::array<int, 4> witness{};

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// The 2143 shape on four values: b < a < d < c.
constexpr bool is_2143(int a, int b, int c, int d) noexcept { return b < a && a < d && d < c; }

// Window at 1-based start i over raw one-line values (caller guarantees i+3 <= n).
constexpr bool violates_window(std::span<const int> values, int start) noexcept {
  const auto s = static_cast<std::size_t>(start - 1);
  return is_2143(values[s], values[s + 1], values[s + 2], values[s + 3]);
}

/// All i in [1, n-3] with w(i+1) < w(i) < w(i+3) < w(i+2), ascending.
inline std::vector<Occurrence> consecutive_occurrences(const Permutation& w) {
  std::vector<Occurrence> out;
  const auto values = w.values();
  for (int i = 1; i + 3 <= w.degree(); ++i) {
    if (violates_window(values, i)) out.push_back({i, OccurrenceKind::Consecutive, {i, i + 1, i + 2, i + 3}});
  }
  return out;
}

inline bool avoids_consecutive_2143(std::span<const int> values) noexcept {
  for (int i = 1; i + 3 <= static_cast<int>(values.size()); ++i) {
    if (violates_window(values, i)) return false;
  }
  return true;
}

inline bool avoids_consecutive_2143(const Permutation& w) noexcept { return avoids_consecutive_2143(w.values()); }

/// X_b: true iff w avoids 2143 on the positions of block b.
inline bool window_event(const Permutation& w, int block) {
  if (block < 1 || 4 * block > w.degree()) {
    throw Error(ErrorCode::BlockOutOfRange,
                "block " + std::to_string(block) + " does not fit in degree " + std::to_string(w.degree()));
  }
  return !violates_window(w.values(), Block{block}.first());
}

/// First classical occurrence p1<p2<p3<p4 with w(p2)<w(p1)<w(p4)<w(p3), by brute force.
inline std::optional<Occurrence> find_classical_2143(const Permutation& w) {
  const int n = w.degree();
  for (int p1 = 1; p1 <= n; ++p1) {
    for (int p2 = p1 + 1; p2 <= n; ++p2) {
      if (w(p2) >= w(p1)) continue;
      for (int p3 = p2 + 1; p3 <= n; ++p3) {
        if (w(p3) <= w(p1)) continue;
        for (int p4 = p3 + 1; p4 <= n; ++p4) {
          if (is_2143(w(p1), w(p2), w(p3), w(p4))) return Occurrence{p1, OccurrenceKind::Classical, {p1, p2, p3, p4}};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool contains_classical_2143(const Permutation& w) { return find_classical_2143(w).has_value(); }

}  // namespace kostant
