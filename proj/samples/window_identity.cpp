// Prints the exact share of S_n avoiding 2143 on k disjoint blocks next to (23/24)^k.

#include <kostant/asymptotics.hpp>
#include <kostant/census.hpp>

#include <iostream>
#include <numeric>
#include <vector>

int main() {
  using namespace kostant;
  for (int n = 4; n <= 9; ++n) {
    std::vector<int> blocks(static_cast<std::size_t>(n / 4));
    std::iota(blocks.begin(), blocks.end(), 1);
    BigInt factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    const auto windows = count_window_avoiders(n, blocks);
    const auto everywhere = count_avoiding_permutations(n);
    std::cout << "n=" << n << "  blocks=" << blocks.size() << "  block avoiders " << windows.value << "/" << factorial
              << " = " << to_decimal(Rational(windows.value, factorial)) << "  (23/24)^k = "
              << to_decimal(theorem3_bound(static_cast<int>(blocks.size()))) << "  avoid everywhere "
              << everywhere.value << "\n";
  }
}
