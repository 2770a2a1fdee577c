#include "groupfact/gfmat/orders.hpp"

#include <array>

#include "groupfact/errors.hpp"
#include "groupfact/gfmat/field.hpp"

namespace groupfact::gfmat {

namespace {

struct Name {
  Family f;
  char const *s;
};

constexpr std::array<Name, 17> kNames{{
    {Family::SL, "SL"},
    {Family::GL, "GL"},
    {Family::GU, "GU"},
    {Family::SU, "SU"},
    {Family::Sp, "Sp"},
    {Family::GOplus, "GOplus"},
    {Family::GOminus, "GOminus"},
    {Family::GOodd, "GOodd"},
    {Family::OmegaPlus, "OmegaPlus"},
    {Family::OmegaMinus, "OmegaMinus"},
    {Family::OmegaOdd, "OmegaOdd"},
    {Family::PSL, "PSL"},
    {Family::PSU, "PSU"},
    {Family::PSp, "PSp"},
    {Family::POmegaPlus, "POmegaPlus"},
    {Family::POmegaMinus, "POmegaMinus"},
    {Family::POmegaOdd, "POmegaOdd"},
}};

BigInt qpow(std::uint64_t q, std::uint64_t e) { return pow_big(big(q), e); }

BigInt gcd_u(BigInt const &a, std::uint64_t b) { return gcd_big(a, big(b)); }

// prod_{i=1}^{k} (q^{2i} - 1)
BigInt sp_product(std::uint64_t q, std::uint64_t k)
{
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r *= qpow(q, 2 * i) - 1;
  return r;
}

void invalid(Family f, std::uint64_t n, std::uint64_t q)
{
  throw PreconditionError("invalid parameters " + to_string(f) + "(" + std::to_string(n) + "," +
                          std::to_string(q) + ")");
}

}  // namespace

std::string to_string(Family f)
{
  for (auto const &n : kNames)
    if (n.f == f)
      return n.s;
  return "?";
}

Family parse_family(std::string const &name)
{
  for (auto const &n : kNames)
    if (name == n.s)
      return n.f;
  throw PreconditionError("unknown family '" + name + "'");
}

BigInt classical_order(Family family, std::uint64_t n, std::uint64_t q)
{
  auto [p, f] = prime_power(q);
  if (p == 0 || n < 1)
    invalid(family, n, q);
  bool even = n % 2 == 0;
  std::uint64_t m = n / 2;
  BigInt qm = qpow(q, m);

  switch (family) {
  case Family::GL: {
    BigInt r = qpow(q, n * (n - 1) / 2);
    for (std::uint64_t i = 1; i <= n; ++i)
      r *= qpow(q, i) - 1;
    return r;
  }
  case Family::SL:
    return classical_order(Family::GL, n, q) / big(q - 1);
  case Family::PSL:
    return classical_order(Family::SL, n, q) / gcd_u(big(n), q - 1);
  case Family::GU: {
    BigInt r = qpow(q, n * (n - 1) / 2);
    for (std::uint64_t i = 1; i <= n; ++i)
      r *= i % 2 ? BigInt(qpow(q, i) + 1) : BigInt(qpow(q, i) - 1);
    return r;
  }
  case Family::SU:
    return classical_order(Family::GU, n, q) / big(q + 1);
  case Family::PSU:
    return classical_order(Family::SU, n, q) / gcd_u(big(n), q + 1);
  case Family::Sp:
    if (!even)
      invalid(family, n, q);
    return qpow(q, m * m) * sp_product(q, m);
  case Family::PSp:
    if (!even)
      invalid(family, n, q);
    return classical_order(Family::Sp, n, q) / (p == 2 ? 1 : 2);
  case Family::GOplus:
  case Family::GOminus: {
    if (!even || n < 2)
      invalid(family, n, q);
    BigInt eps = family == Family::GOplus ? BigInt(qm - 1) : BigInt(qm + 1);
    return 2 * qpow(q, m * (m - 1)) * eps * sp_product(q, m - 1);
  }
  case Family::OmegaPlus:
  case Family::OmegaMinus: {
    Family go = family == Family::OmegaPlus ? Family::GOplus : Family::GOminus;
    return classical_order(go, n, q) / (p == 2 ? 2 : 4);
  }
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    Family om = family == Family::POmegaPlus ? Family::OmegaPlus : Family::OmegaMinus;
    BigInt eps = family == Family::POmegaPlus ? BigInt(qm - 1) : BigInt(qm + 1);
    BigInt center = gcd_u(eps, 4) / (p == 2 ? 1 : 2);
    return classical_order(om, n, q) / center;
  }
  case Family::GOodd:
    if (even)
      invalid(family, n, q);
    if (p == 2)
      return classical_order(Family::Sp, n - 1, q);
    return 2 * qpow(q, m * m) * sp_product(q, m);
  case Family::OmegaOdd:
  case Family::POmegaOdd:
    if (even)
      invalid(family, n, q);
    if (p == 2)
      return classical_order(Family::Sp, n - 1, q);
    return qpow(q, m * m) * sp_product(q, m) / 2;
  }
  invalid(family, n, q);
  return 0;
}

bool is_simple_classical(Family family, std::uint64_t n, std::uint64_t q)
{
  auto [p, f] = prime_power(q);
  if (p == 0)
    return false;
  switch (family) {
  case Family::PSL:
    return n >= 2 && !(n == 2 && q <= 3);
  case Family::PSU:
    return n >= 3 && !(n == 3 && q == 2);
  case Family::PSp:
    return n >= 4 && n % 2 == 0 && !(n == 4 && q == 2);
  case Family::OmegaOdd:
  case Family::POmegaOdd:
    return n >= 7 && n % 2 == 1 && p != 2;
  case Family::POmegaPlus:
  case Family::POmegaMinus:
    return n >= 8 && n % 2 == 0;
  default:
    return false;
  }
}

BigInt out_order(Family family, std::uint64_t n, std::uint64_t q)
{
  if (!is_simple_classical(family, n, q))
    invalid(family, n, q);
  auto [p, f] = prime_power(q);
  std::uint64_t m = n / 2;
  BigInt qm = qpow(q, m);
  std::uint64_t d2 = p == 2 ? 1 : 2;  // (2, q-1)
  switch (family) {
  case Family::PSL:
    if (n == 2)
      return big(d2 * f);
    return 2 * gcd_u(big(n), q - 1) * f;
  case Family::PSU:
    return 2 * gcd_u(big(n), q + 1) * f;
  case Family::PSp:
    if (n == 4 && p == 2)
      return big(2 * f);
    return big(d2 * f);
  case Family::OmegaOdd:
  case Family::POmegaOdd:
    return big(2 * f);
  case Family::POmegaMinus:
    if (qm % 4 == 3)
      return big(8 * f);
    return big(2 * d2 * f);
  case Family::POmegaPlus:
    if (n == 8)
      return big((p == 2 ? 6 : 24) * f);
    if (qm % 4 == 1)
      return big(8 * f);
    return big(2 * d2 * f);
  default:
    invalid(family, n, q);
  }
  return 0;
}

}  // namespace groupfact::gfmat
