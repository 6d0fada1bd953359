// Domino insertion of one signed permutation for several core ranks, with
// the cycles of each recording tableau.

#include <iostream>

#include "dckl/dckl.hpp"

int main(int argc, char** argv) {
  const dckl::SignedPerm w = dckl::parse_perm(argc > 1 ? argv[1] : "[5,6,1,4,2,-3]");
  for (int r = 0; r <= w.rank(); ++r) {
    const dckl::DominoPair pq = dckl::domino_pair(w, r);
    std::cout << "r=" << r << " shape " << pq.P.shape().to_string() << "\n"
              << "  P " << pq.P.to_string() << "\n"
              << "  Q " << pq.Q.to_string() << "\n";
    for (const dckl::Cycle& c : dckl::cycles(pq.Q))
      std::cout << "  cycle " << c.to_string() << (dckl::is_open(pq.Q, c) ? " open" : " closed") << "\n";
    if (dckl::from_pair(pq.P, pq.Q) != w) {
      std::cerr << "round trip failed\n";
      return 1;
    }
  }
  return 0;
}
