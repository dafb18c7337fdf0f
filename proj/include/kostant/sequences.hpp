#pragma once

// Involution numbers (OEIS A000085) and Motzkin numbers (OEIS A001006), memoized.

#include <kostant/error.hpp>
#include <kostant/exact.hpp>

#include <mutex>
#include <string>
#include <vector>

namespace kostant {

namespace detail {

class SequenceCache {
 public:
  using Step = BigInt (*)(const std::vector<BigInt>&, int);

  explicit SequenceCache(Step step) : step_(step), values_{1, 1} {}

  BigInt at(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "sequence index must be non-negative");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) {
      values_.push_back(step_(values_, static_cast<int>(values_.size())));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  Step step_;
  std::mutex mutex_;
  std::vector<BigInt> values_;
};

inline BigInt involution_step(const std::vector<BigInt>& v, int n) {
  return v[n - 1] + BigInt(n - 1) * v[n - 2];
}

// (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}; the division is exact.
inline BigInt motzkin_step(const std::vector<BigInt>& v, int n) {
  return (BigInt(2 * n + 1) * v[n - 1] + BigInt(3 * (n - 1)) * v[n - 2]) / (n + 2);
}

inline SequenceCache& involution_cache() {
  static SequenceCache cache(&involution_step);
  return cache;
}

inline SequenceCache& motzkin_cache() {
  static SequenceCache cache(&motzkin_step);
  return cache;
}

}  // namespace detail

/// Number of involutions of S_n: i_0 = i_1 = 1, i_n = i_{n-1} + (n-1) i_{n-2}.
inline BigInt involution_number(int n) { return detail::involution_cache().at(n); }

/// Motzkin number M_n.
inline BigInt motzkin_number(int n) { return detail::motzkin_cache().at(n); }

enum class SequenceName { Involutions, Motzkin };

struct SequenceTable {
  SequenceName name;
  std::vector<BigInt> values;  // values[n] for n = 0..max_n
};

inline SequenceTable sequence_table(SequenceName name, int max_n) {
  if (max_n < 0) throw Error(ErrorCode::InvalidArgument, "max_n must be non-negative");
  SequenceTable table{name, {}};
  table.values.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    table.values.push_back(name == SequenceName::Involutions ? involution_number(n) : motzkin_number(n));
  }
  return table;
}

}  // namespace kostant
