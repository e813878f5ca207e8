#include <iostream>

#include "jblocks/rep_ring.hpp"

int main() {
  using namespace jblocks;
  auto x = structure_constants(4, 4, FormalGroupLaw::multiplicative(), FieldSpec(2));
  std::cout << x.to_string() << '\n';
  return x.to_string() == "4·J4" ? 0 : 1;
}
