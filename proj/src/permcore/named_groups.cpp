#include "groupfact/permcore/named_groups.hpp"

#include <numeric>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

namespace {

std::vector<Point> iota_points(std::size_t n)
{
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Permutation cycle_on(std::size_t n, std::size_t len, std::size_t start = 0)
{
  auto v = iota_points(n);
  for (std::size_t i = 0; i < len; ++i)
    v[start + i] = static_cast<Point>(start + (i + 1) % len);
  return Permutation(std::move(v));
}

std::size_t mod_pow(std::size_t a, std::size_t e, std::size_t p)
{
  std::size_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

void require_prime(std::size_t p)
{
  if (p < 2)
    throw PreconditionError("expected a prime");
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw PreconditionError("expected a prime, got " + std::to_string(p));
}

std::size_t primitive_root(std::size_t p)
{
  for (std::size_t a = 1; a < p; ++a) {
    bool ok = true;
    std::size_t m = p - 1;
    for (std::size_t r = 2; r <= m && ok; ++r)
      if ((p - 1) % r == 0) {
        bool prime = true;
        for (std::size_t d = 2; d * d <= r; ++d)
          if (r % d == 0)
            prime = false;
        if (prime && mod_pow(a, (p - 1) / r, p) == 1)
          ok = false;
      }
    if (ok)
      return a;
  }
  return 1;
}

// x -> x+1 and x -> -1/x on the projective line.
std::vector<Permutation> psl2_gens(std::size_t p)
{
  std::vector<Point> t(p + 1), s(p + 1);
  for (std::size_t x = 0; x < p; ++x) {
    t[x] = static_cast<Point>((x + 1) % p);
    s[x] = x == 0 ? static_cast<Point>(p) : static_cast<Point>((p - mod_pow(x, p - 2, p)) % p);
  }
  t[p] = static_cast<Point>(p);
  s[p] = 0;
  return {Permutation(std::move(t)), Permutation(std::move(s))};
}

}  // namespace

PermGroup symmetric_group(std::size_t n)
{
  if (n < 1)
    throw PreconditionError("symmetric_group: n must be positive");
  if (n < 2)
    return PermGroup(n, {});
  if (n == 2)
    return PermGroup(n, {cycle_on(2, 2)});
  return PermGroup(n, {cycle_on(n, n), cycle_on(n, 2)});
}

PermGroup alternating_group(std::size_t n)
{
  if (n < 1)
    throw PreconditionError("alternating_group: n must be positive");
  if (n < 3)
    return PermGroup(n, {});
  // 3-cycles (0 1 i) generate A_n.
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    auto v = iota_points(n);
    v[0] = 1;
    v[1] = static_cast<Point>(i);
    v[i] = 0;
    gens.emplace_back(std::move(v));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n)
{
  if (n < 1)
    throw PreconditionError("cyclic_group: n must be positive");
  return PermGroup(n, {cycle_on(n, n)});
}

PermGroup dihedral_group(std::size_t n)
{
  if (n < 3)
    throw PreconditionError("dihedral_group: n must be at least 3");
  std::vector<Point> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, n), Permutation(std::move(r))});
}

PermGroup psl2_prime(std::size_t p)
{
  require_prime(p);
  return PermGroup(p + 1, psl2_gens(p));
}

PermGroup pgl2_prime(std::size_t p)
{
  require_prime(p);
  auto gens = psl2_gens(p);
  std::size_t a = primitive_root(p);
  std::vector<Point> m(p + 1);
  for (std::size_t x = 0; x < p; ++x)
    m[x] = static_cast<Point>(x * a % p);
  m[p] = static_cast<Point>(p);
  gens.emplace_back(std::move(m));
  return PermGroup(p + 1, std::move(gens));
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &g : a.generators()) {
    auto v = iota_points(n);
    for (Point x = 0; x < a.degree(); ++x)
      v[x] = g[x];
    gens.emplace_back(std::move(v));
  }
  for (auto const &g : b.generators()) {
    auto v = iota_points(n);
    for (Point x = 0; x < b.degree(); ++x)
      v[a.degree() + x] = static_cast<Point>(a.degree() + g[x]);
    gens.emplace_back(std::move(v));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace groupfact::permcore
