#pragma once

// Independent brute-force oracles shared by the unit tests and the
// acceptance binary. None of them uses Smith normal form.

#include "ogkit/gmod.hpp"

#include <cstddef>

namespace oracle {

struct Counts {
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t order() const { return coboundaries == 0 ? 0 : cocycles / coboundaries; }
};

// |Z^n| and |B^n| of the normalized cochain complex, by enumerating every
// cochain (finite stalks, small chain counts). Returns nullopt-like zero
// counts when the enumeration would exceed `limit` cochains.
Counts category_cohomology(const ogkit::GModule& m, std::size_t n, std::size_t limit = 1u << 18);

// Classical group cohomology of Z/n with trivial coefficients Z/m via
// normalized inhomogeneous cochains.
Counts cyclic_group_cohomology(int n, int m, std::size_t degree);

// Number of crossed homomorphisms Z/n -> Z/m (trivial action).
std::size_t cyclic_derivations(int n, int m);

}  // namespace oracle
