// Left cells of W_n for weights (a, b), next to the r-cells they are
// expected to match when (a, b) = (2, 2r+1).

#include <cstdlib>
#include <iostream>

#include "dckl/dckl.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 2;
  const int r = argc > 2 ? std::atoi(argv[2]) : 1;
  const dckl::KLBasis kl = dckl::KLBasis::build(n, {2, 2 * r + 1});
  const dckl::CellPartition cp = dckl::cell_partition(kl, dckl::Side::Left);
  const dckl::GroupTable& G = kl.group();
  std::cout << "W_" << n << ", (a,b) = (2," << 2 * r + 1 << "): " << cp.count() << " left cells\n";
  for (const auto& cell : cp.cells()) {
    std::cout << "Q^" << r << " = " << dckl::domino_pair(G.element(cell.front()), r).Q.to_string() << ":";
    for (int w : cell) std::cout << ' ' << G.element(w).to_string();
    std::cout << "\n";
  }
  return 0;
}
