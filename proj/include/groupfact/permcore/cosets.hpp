#pragma once

#include <cstddef>
#include <vector>

#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::permcore {

inline constexpr std::size_t kDefaultIndexBound = 200000;

// Canonical element of the right coset Hx: among hx (h in H) the one whose
// images of H's base points are lexicographically least.
Permutation canonical_coset_rep(StabilizerChain const &h_chain, Permutation const &x);

struct CosetAction {
  PermGroup image;                       // generator images on [G:H]
  std::vector<Permutation> transversal;  // canonical reps; transversal[0] lies in H
};

// Right-multiplication action of g on the right cosets of h.
CosetAction coset_action(PermGroup const &g, PermGroup const &h,
                         std::size_t bound = kDefaultIndexBound);

// Size of the orbit of the trivial coset K under right multiplication by l.
// Does not require enumerating all of [G:K].
std::size_t coset_orbit_size(PermGroup const &k, PermGroup const &l,
                             std::size_t bound = kDefaultIndexBound);

// Kernel of g acting through the given generator images (one per generator
// of g, all on the same point set).
PermGroup action_kernel(PermGroup const &g, PermGroup const &image);

// Largest normal subgroup of g inside h.
PermGroup core(PermGroup const &g, PermGroup const &h, std::size_t bound = kDefaultIndexBound);

// {x in g : m^x = m} by scanning a right transversal of m.
PermGroup normalizer(PermGroup const &g, PermGroup const &m,
                     std::size_t bound = kDefaultIndexBound);

}  // namespace groupfact::permcore
