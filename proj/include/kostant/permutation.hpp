#pragma once

// Permutations and involutions of S_n in one-line notation, 1-based throughout.

#include <kostant/error.hpp>
#include <kostant/exact.hpp>
#include <kostant/random.hpp>
#include <kostant/sequences.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kostant {

class Permutation {
 public:
  static Permutation identity(int n) {
    if (n < 1) throw Error(ErrorCode::EmptyInput, "degree must be at least 1");
    Permutation w;
    w.values_.resize(static_cast<std::size_t>(n));
    std::iota(w.values_.begin(), w.values_.end(), 1);
    return w;
  }

  // Validating constructor: values must be a bijection on {1,...,n}.
  static Permutation from_values(std::span<const int> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "permutation needs at least one value");
    const auto n = static_cast<int>(values.size());
    std::vector<bool> seen(values.size() + 1, false);
    for (const int v : values) {
      if (v < 1 || v > n) {
        throw Error(ErrorCode::NotABijection, "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::NotABijection, "value " + std::to_string(v) + " occurs twice");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::vector<int>(values.begin(), values.end()));
  }

  static Permutation from_values(std::initializer_list<int> values) {
    return from_values(std::span<const int>(values.begin(), values.size()));
  }

  int degree() const noexcept { return static_cast<int>(values_.size()); }

  // w(i) for 1 <= i <= n.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  // (*this ∘ other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const {
    if (other.degree() != degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch in composition");
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = (*this)(other.values_[i]);
    return Permutation(std::move(out));
  }

  bool is_involution() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[static_cast<std::size_t>(values_[i] - 1)] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;

  template <class Visitor>
  friend void for_each_permutation_with_prefix(int, std::span<const int>, Visitor&&);
  template <class Visitor>
  friend void detail_for_each_involution(int, int, Visitor&&);
  friend Permutation unrank_involution_permutation(int, BigInt);
  template <class Rng>
  friend Permutation sample_permutation(int, Rng&);
  friend class PermutationBuilder;
};

// Unchecked construction from values already known to be a bijection (internal use by
// algorithms whose output is a permutation by construction).
class PermutationBuilder {
 public:
  static Permutation adopt(std::vector<int> values) { return Permutation(std::move(values)); }
};

inline Permutation make_permutation(std::span<const int> values) { return Permutation::from_values(values); }

inline Permutation make_permutation(std::initializer_list<int> values) { return Permutation::from_values(values); }

// Comma-separated one-line notation, e.g. "2,1,4,3". Whitespace around entries is ignored.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) {
      if (text.empty()) break;
      throw Error(ErrorCode::InvalidArgument, "empty entry in permutation text");
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || end != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidArgument, "not an integer: '" + std::string(field) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return make_permutation(values);
}

inline std::string to_string(const Permutation& w) {
  std::string out;
  for (const int v : w.values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

/// Involution view of a permutation: pairs {a,b} with w(a)=b, a<b, and fixed points.
class Involution {
 public:
  const Permutation& permutation() const noexcept { return w_; }
  int degree() const noexcept { return w_.degree(); }
  int partner(int i) const { return w_(i); }
  int operator()(int i) const { return w_(i); }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= degree(); ++a) {
      if (w_(a) > a) out.emplace_back(a, w_(a));
    }
    return out;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> out;
    for (int a = 1; a <= degree(); ++a) {
      if (w_(a) == a) out.push_back(a);
    }
    return out;
  }

  // Display-only cycle rendering, e.g. "(1 2)(3 4)"; "()" for the identity.
  std::string cycles() const {
    std::string out;
    for (const auto& [a, b] : pairs()) out += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  explicit Involution(Permutation w) : w_(std::move(w)) {}
  Permutation w_;

  friend Involution as_involution(Permutation w);
};

inline Involution as_involution(Permutation w) {
  if (!w.is_involution()) throw Error(ErrorCode::NotAnInvolution, to_string(w) + " is not its own inverse");
  return Involution(std::move(w));
}

inline std::string to_string(const Involution& w) { return to_string(w.permutation()); }

/// Block A_b = {4b-3, 4b-2, 4b-1, 4b}.
struct Block {
  int index = 1;

  constexpr int first() const noexcept { return 4 * index - 3; }
  constexpr int last() const noexcept { return 4 * index; }
  constexpr std::array<int, 4> positions() const noexcept { return {first(), first() + 1, first() + 2, first() + 3}; }
  constexpr bool contains(int p) const noexcept { return p >= first() && p <= last(); }
  // Block index of a position (1-based).
  static constexpr int of(int position) noexcept { return (position + 3) / 4; }
};

// ---------------------------------------------------------------------------
// Enumeration. Every enumerator yields in lexicographic order of one-line notation
// and reuses one buffer: copy the visited value if it must outlive the callback.

/// Visits every permutation of S_n whose one-line notation starts with `prefix`.
template <class Visitor>
void for_each_permutation_with_prefix(int n, std::span<const int> prefix, Visitor&& visit) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (const int v : prefix) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) return;
    used[static_cast<std::size_t>(v)] = true;
    values.push_back(v);
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) values.push_back(v);
  }
  Permutation w(std::move(values));
  const auto tail = w.values_.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    visit(static_cast<const Permutation&>(w));
  } while (std::next_permutation(tail, w.values_.end()));
}

/// Visits each element of S_n exactly once, lexicographically.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit, const Limits& limits = {}) {
  require_degree_at_most(n, limits.max_perm_degree, "enumerate_permutations");
  for_each_permutation_with_prefix(n, {}, std::forward<Visitor>(visit));
}

// Pair/fix recursion on the smallest unassigned position. Choosing the fixed point first,
// then partners in increasing order, gives lexicographic order. `first_partner` restricts
// w(1) when positive (used to partition work); 0 means unrestricted.
template <class Visitor>
void detail_for_each_involution(int n, int first_partner, Visitor&& visit) {
  Permutation w;
  w.values_.assign(static_cast<std::size_t>(n), 0);
  auto& v = w.values_;
  auto recurse = [&](auto&& self, int a) -> void {
    while (a <= n && v[static_cast<std::size_t>(a - 1)] != 0) ++a;
    if (a > n) {
      visit(static_cast<const Permutation&>(w));
      return;
    }
    const bool restricted = a == 1 && first_partner > 0;
    if (!restricted || first_partner == 1) {
      v[static_cast<std::size_t>(a - 1)] = a;
      self(self, a + 1);
      v[static_cast<std::size_t>(a - 1)] = 0;
    }
    for (int b = a + 1; b <= n; ++b) {
      if (v[static_cast<std::size_t>(b - 1)] != 0) continue;
      if (restricted && b != first_partner) continue;
      v[static_cast<std::size_t>(a - 1)] = b;
      v[static_cast<std::size_t>(b - 1)] = a;
      self(self, a + 1);
      v[static_cast<std::size_t>(a - 1)] = 0;
      v[static_cast<std::size_t>(b - 1)] = 0;
    }
  };
  recurse(recurse, 1);
}

/// Visits each involution of S_n exactly once (generated directly, never by filtering S_n).
/// The visitor receives the involution as a `const Permutation&`.
template <class Visitor>
void for_each_involution(int n, Visitor&& visit, const Limits& limits = {}) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  require_degree_at_most(n, limits.max_involution_degree, "enumerate_involutions");
  detail_for_each_involution(n, 0, std::forward<Visitor>(visit));
}

/// Involutions with w(1) = first_partner (first_partner = 1 means 1 is fixed).
template <class Visitor>
void for_each_involution_with_first_partner(int n, int first_partner, Visitor&& visit) {
  if (first_partner < 1 || first_partner > n) return;
  detail_for_each_involution(n, first_partner, std::forward<Visitor>(visit));
}

inline std::vector<Permutation> all_permutations(int n, const Limits& limits = {}) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); }, limits);
  return out;
}

inline std::vector<Involution> all_involutions(int n, const Limits& limits = {}) {
  std::vector<Involution> out;
  for_each_involution(n, [&](const Permutation& w) { out.push_back(as_involution(w)); }, limits);
  return out;
}

// ---------------------------------------------------------------------------
// Sampling.

/// The involution of lexicographic rank `rank` in [0, i_n). The smallest open position is
/// fixed when rank < i_{m-1} (m open positions), otherwise the rank picks its partner among
/// the other m-1 open positions and a remainder rank in [0, i_{m-2}).
inline Permutation unrank_involution_permutation(int n, BigInt rank) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  if (rank < 0 || rank >= involution_number(n)) throw Error(ErrorCode::InvalidArgument, "rank out of range");
  std::vector<int> open(static_cast<std::size_t>(n));
  std::iota(open.begin(), open.end(), 1);
  Permutation w;
  w.values_.assign(static_cast<std::size_t>(n), 0);
  std::size_t head = 0;  // open positions are open[head..], kept increasing
  while (head < open.size()) {
    const int m = static_cast<int>(open.size() - head);
    const int a = open[head];
    const BigInt fixed_block = involution_number(m - 1);
    if (rank < fixed_block) {
      w.values_[static_cast<std::size_t>(a - 1)] = a;
      ++head;
      continue;
    }
    rank -= fixed_block;
    const BigInt pair_block = involution_number(m - 2);
    const BigInt choice = rank / pair_block;
    rank %= pair_block;
    const auto offset = static_cast<std::size_t>(choice.convert_to<long long>()) + 1;
    const int b = open[head + offset];
    w.values_[static_cast<std::size_t>(a - 1)] = b;
    w.values_[static_cast<std::size_t>(b - 1)] = a;
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(head + offset));
    ++head;
  }
  return w;
}

inline Involution unrank_involution(int n, const BigInt& rank) {
  return as_involution(unrank_involution_permutation(n, rank));
}

/// Exactly uniform over S_n (Fisher-Yates); deterministic given the generator state.
template <class Rng>
Permutation sample_permutation(int n, Rng& rng) {
  Permutation w = Permutation::identity(n);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(w.values_[static_cast<std::size_t>(i)], w.values_[j]);
  }
  return w;
}

/// Exactly uniform over the involutions of S_n: unranks a uniform rank in [0, i_n).
/// n = 0 has the empty involution only and is rejected here since degree-0 permutations
/// are not representable; callers handle it.
template <class Rng>
Involution sample_involution(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  return as_involution(unrank_involution_permutation(n, uniform_below(rng, involution_number(n))));
}

/// Membership in Q_n: w(A_i) ∩ A_j = ∅ for all 1 <= i < j <= k.
inline bool in_q(const Involution& w, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (w.degree() < 4 * k) {
    throw Error(ErrorCode::DegreeTooSmall,
                "degree " + std::to_string(w.degree()) + " < 4k = " + std::to_string(4 * k));
  }
  for (int a = 1; a <= 4 * k; ++a) {
    const int b = w(a);
    if (b <= 4 * k && Block::of(b) != Block::of(a)) return false;
  }
  return true;
}

}  // namespace kostant
