#pragma once

#include <cstddef>

#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::permcore {

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
// Order 2n, acting on the n vertices of a polygon.
PermGroup dihedral_group(std::size_t n);

// PSL2(p), PGL2(p) for a prime p on the projective line; points 0..p-1 are
// field elements, point p is infinity.
PermGroup psl2_prime(std::size_t p);
PermGroup pgl2_prime(std::size_t p);

// Direct product acting on the disjoint union of the point sets.
PermGroup direct_product(PermGroup const &a, PermGroup const &b);

}  // namespace groupfact::permcore
