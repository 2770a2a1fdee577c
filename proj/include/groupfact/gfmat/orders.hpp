#pragma once

#include <cstdint>
#include <string>

#include "groupfact/bigint.hpp"

namespace groupfact::gfmat {

enum class Family {
  SL, GL, GU, SU, Sp,
  GOplus, GOminus, GOodd,
  OmegaPlus, OmegaMinus, OmegaOdd,
  PSL, PSU, PSp,
  POmegaPlus, POmegaMinus, POmegaOdd,
};

std::string to_string(Family f);
Family parse_family(std::string const &name);

// Exact order of the classical group of dimension n over GF(q). For odd
// dimension in characteristic 2 the orthogonal groups are taken as Sp_{n-1}(q).
BigInt classical_order(Family family, std::uint64_t n, std::uint64_t q);

// |Out(L)| for the simple group L of the given family; only the projective
// simple families (and OmegaOdd) are accepted.
BigInt out_order(Family family, std::uint64_t n, std::uint64_t q);

// True iff (family, n, q) names a nonabelian simple group in the ranges
// accepted by out_order.
bool is_simple_classical(Family family, std::uint64_t n, std::uint64_t q);

}  // namespace groupfact::gfmat
