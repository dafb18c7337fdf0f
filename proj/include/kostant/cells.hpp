#pragma once

// Robinson-Schensted row insertion, left cells as fibres of the recording tableau,
// and negativity certificates from consecutive 2143 occurrences.
//
// A consecutive 2143 occurrence in w forces L_w to be Kostant negative, and Kostant
// negativity is constant on Kazhdan-Lusztig left cells. A cell is therefore certified
// negative as soon as one member has an occurrence. The converse is open, so the
// classifier never reports positivity.

#include <kostant/error.hpp>
#include <kostant/patterns.hpp>
#include <kostant/permutation.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kostant {

class StandardTableau {
 public:
  using Row = std::vector<int>;

  // Validates shape (weakly decreasing, non-empty rows), entries 1..n each once,
  // and strict increase along rows and down columns.
  static StandardTableau from_rows(std::vector<Row> rows) {
    int n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) throw Error(ErrorCode::NotStandard, "empty row");
      if (r > 0 && rows[r].size() > rows[r - 1].size()) throw Error(ErrorCode::NotStandard, "rows not weakly decreasing");
      n += static_cast<int>(rows[r].size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const int v = rows[r][c];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
          throw Error(ErrorCode::NotStandard, "entries must be 1..n each once");
        }
        seen[static_cast<std::size_t>(v)] = true;
        if (c > 0 && rows[r][c - 1] >= v) throw Error(ErrorCode::NotStandard, "row not increasing");
        if (r > 0 && rows[r - 1][c] >= v) throw Error(ErrorCode::NotStandard, "column not increasing");
      }
    }
    return StandardTableau(std::move(rows));
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }

  std::vector<int> shape() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(static_cast<int>(row.size()));
    return out;
  }

  int size() const noexcept {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  explicit StandardTableau(std::vector<Row> rows) : rows_(std::move(rows)) {}
  std::vector<Row> rows_;

  friend struct TableauBuilder;
};

// Unchecked construction for algorithms whose output is standard by construction.
struct TableauBuilder {
  static StandardTableau adopt(std::vector<StandardTableau::Row> rows) { return StandardTableau(std::move(rows)); }
  static std::vector<StandardTableau::Row>& rows(StandardTableau& t) noexcept { return t.rows_; }
};

struct RskPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Row-inserts w(1), ..., w(n).
inline RskPair rsk(const Permutation& w) {
  std::vector<StandardTableau::Row> p;
  std::vector<StandardTableau::Row> q;
  for (int i = 1; i <= w.degree(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto& row = p[r];
      const auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {TableauBuilder::adopt(std::move(p)), TableauBuilder::adopt(std::move(q))};
}

/// The unique w with rsk(w) = (insertion, recording).
inline Permutation inverse_rsk(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape()) throw Error(ErrorCode::ShapeMismatch, "P and Q shapes differ");
  auto p = insertion.rows();
  auto q = recording.rows();
  const int n = insertion.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    // i sits at the end of some row of Q.
    std::size_t r = 0;
    while (q[r].back() != i) ++r;
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (r > 0) {
      --r;
      auto& row = p[r];
      // Largest entry smaller than x is bumped out by x.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    values[static_cast<std::size_t>(i - 1)] = x;
  }
  return PermutationBuilder::adopt(std::move(values));
}

/// Visits every standard tableau of `shape`. Entries 1..n are placed in order, each in the
/// highest row that can take it first, so the order is deterministic.
template <class Visitor>
void for_each_standard_tableau(const std::vector<int>& shape, Visitor&& visit) {
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] < 1 || (r > 0 && shape[r] > shape[r - 1])) throw Error(ErrorCode::NotStandard, "invalid shape");
  }
  int n = 0;
  for (const int len : shape) n += len;
  auto t = TableauBuilder::adopt(std::vector<StandardTableau::Row>(shape.size()));
  auto& rows = TableauBuilder::rows(t);
  auto place = [&](auto&& self, int next) -> void {
    if (next > n) {
      visit(static_cast<const StandardTableau&>(t));
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) == shape[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(next);
      self(self, next + 1);
      rows[r].pop_back();
    }
  };
  place(place, 1);
}

/// Number of standard tableaux of a shape by the hook-length formula.
inline BigInt hook_length_count(const std::vector<int>& shape) {
  int n = 0;
  for (const int len : shape) n += len;
  BigInt num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < shape.size() && shape[s] > c; ++s) ++below;
      den *= shape[r] - c - 1 + below + 1;
    }
  }
  return num / den;
}

/// The unique involution in the left cell of w: inverse_rsk(Q(w), Q(w)).
inline Involution cell_involution(const Permutation& w) {
  const auto q = rsk(w).recording;
  return as_involution(inverse_rsk(q, q));
}

/// Visits every u with Q(u) = Q(w), sweeping P over the standard tableaux of the shape.
template <class Visitor>
void for_each_cell_member(const Permutation& w, Visitor&& visit, const Limits& limits = {}) {
  require_degree_at_most(w.degree(), limits.max_cell_degree, "cell_members");
  const auto q = rsk(w).recording;
  for_each_standard_tableau(q.shape(), [&](const StandardTableau& p) { visit(inverse_rsk(p, q)); });
}

inline std::vector<Permutation> cell_members(const Permutation& w, const Limits& limits = {}) {
  std::vector<Permutation> out;
  for_each_cell_member(w, [&](Permutation u) { out.push_back(std::move(u)); }, limits);
  return out;
}

enum class VerdictTag { Negative, NoCertificate };
enum class ClassifyMode { Quick, Cell };

struct NegativityWitness {
  Permutation member;
  Occurrence occurrence;
};

struct KostantVerdict {
  VerdictTag tag = VerdictTag::NoCertificate;
  std::optional<NegativityWitness> witness;  // present iff tag == Negative

  bool negative() const noexcept { return tag == VerdictTag::Negative; }
};

namespace detail {

inline std::optional<NegativityWitness> witness_in(const Permutation& u) {
  const auto occ = consecutive_occurrences(u);
  if (occ.empty()) return std::nullopt;
  return NegativityWitness{u, occ.front()};
}

inline KostantVerdict verdict_from(std::optional<NegativityWitness> witness) {
  if (!witness) return {};
  return {VerdictTag::Negative, std::move(witness)};
}

}  // namespace detail

/// Quick: checks w, then its cell involution. Cell: checks every cell member in sweep order;
/// the witness is the first member found.
inline KostantVerdict classify_kostant(const Permutation& w, ClassifyMode mode, const Limits& limits = {}) {
  if (mode == ClassifyMode::Quick) {
    if (auto found = detail::witness_in(w)) return detail::verdict_from(std::move(found));
    return detail::verdict_from(detail::witness_in(cell_involution(w).permutation()));
  }
  require_degree_at_most(w.degree(), limits.max_cell_degree, "classify_kostant(cell)");
  std::optional<NegativityWitness> found;
  for_each_cell_member(
      w,
      [&](const Permutation& u) {
        if (!found) found = detail::witness_in(u);
      },
      limits);
  return detail::verdict_from(std::move(found));
}

}  // namespace kostant
