#include "groupfact/bigint.hpp"

#include <stdexcept>

namespace groupfact {

std::uint64_t to_u64(BigInt const &v)
{
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());

  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

BigInt pow_big(BigInt const &base, unsigned long exp)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt pow_big(std::uint64_t base, unsigned long exp)
{
  return pow_big(big(base), exp);
}

BigInt gcd_big(BigInt const &a, BigInt const &b)
{
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm_big(BigInt const &a, BigInt const &b)
{
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(BigInt const &d, BigInt const &n)
{
  if (d == 0)
    return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace groupfact
