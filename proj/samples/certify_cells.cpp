// Counts the left cells of S_n that carry a negativity certificate.

#include <kostant/cells.hpp>

#include <iostream>
#include <set>

int main(int argc, char** argv) {
  using namespace kostant;
  const int n = argc > 1 ? std::stoi(argv[1]) : 6;
  int cells = 0;
  int certified = 0;
  for_each_involution(n, [&](const Permutation& w) {
    ++cells;
    if (classify_kostant(w, ClassifyMode::Cell).negative()) ++certified;
  });
  std::cout << "S_" << n << ": " << certified << " of " << cells << " left cells certified Kostant negative\n";
}
