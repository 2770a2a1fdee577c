#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace groupfact {

using BigInt = mpz_class;

inline BigInt big(std::uint64_t v)
{
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_string(BigInt const &v) { return v.get_str(); }

// Throws std::overflow_error if v does not fit.
std::uint64_t to_u64(BigInt const &v);

BigInt pow_big(BigInt const &base, unsigned long exp);
BigInt pow_big(std::uint64_t base, unsigned long exp);

BigInt gcd_big(BigInt const &a, BigInt const &b);
BigInt lcm_big(BigInt const &a, BigInt const &b);

bool divides(BigInt const &d, BigInt const &n);

}  // namespace groupfact
