#include "groupfact/gfmat/field.hpp"

#include "groupfact/errors.hpp"

namespace groupfact::gfmat {

bool is_prime_u64(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> small_prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q)
{
  if (q < 2)
    return {0, 0};
  auto ps = small_prime_factors(q);
  if (ps.size() != 1)
    return {0, 0};
  std::uint32_t f = 0;
  while (q > 1) {
    q /= ps[0];
    ++f;
  }
  return {static_cast<std::uint32_t>(ps[0]), f};
}

namespace {

// Polynomial helpers over an arbitrary field.
Poly poly_mulmod(Field const &F, Poly const &a, Poly const &b, Poly const &g)
{
  std::size_t m = g.size() - 1;
  std::vector<Fq> prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  // g is monic
  for (std::size_t k = prod.size(); k-- > m;) {
    Fq c = prod[k];
    if (c == 0)
      continue;
    for (std::size_t i = 0; i <= m; ++i)
      prod[k - m + i] = F.sub(prod[k - m + i], F.mul(c, g[i]));
  }
  prod.resize(m);
  return prod;
}

Poly poly_pow_x(Field const &F, std::uint64_t e, Poly const &g)
{
  std::size_t m = g.size() - 1;
  Poly result(m, 0);
  result[0] = 1;
  Poly base(m, 0);
  if (m == 1)
    base[0] = F.neg(g[0]);
  else
    base[1] = 1;
  while (e) {
    if (e & 1)
      result = poly_mulmod(F, result, base, g);
    base = poly_mulmod(F, base, base, g);
    e >>= 1;
  }
  return result;
}

bool is_one(Poly const &p)
{
  if (p.empty() || p[0] != 1)
    return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0)
      return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t m)
{
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (r > (std::uint64_t{1} << 62) / q)
      throw BoundError("field size power exceeds 2^62");
    r *= q;
  }
  return r;
}

}  // namespace

bool is_primitive_polynomial(Field const &F, Poly const &g)
{
  if (g.size() < 2 || g.back() != 1 || g[0] == 0)
    return false;
  std::uint64_t n = checked_pow(F.q(), static_cast<std::uint32_t>(g.size() - 1)) - 1;
  if (!is_one(poly_pow_x(F, n, g)))
    return false;
  for (auto r : small_prime_factors(n))
    if (is_one(poly_pow_x(F, n / r, g)))
      return false;
  return true;
}

Poly primitive_polynomial(Field const &F, std::uint32_t m)
{
  if (m < 1)
    throw PreconditionError("primitive_polynomial: degree must be positive");
  std::uint64_t q = F.q();
  std::uint64_t count = checked_pow(q, m);
  // Index k enumerates (c_0, ..., c_{m-1}) with c_0 most significant.
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly g(m + 1, 0);
    std::uint64_t t = k;
    for (std::uint32_t i = m; i-- > 0;) {
      g[i] = static_cast<Fq>(t % q);
      t /= q;
    }
    g[m] = 1;
    if (g[0] == 0)
      continue;
    if (is_primitive_polynomial(F, g))
      return g;
  }
  throw InvariantError("no primitive polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t f)
{
  if (!is_prime_u64(p) || f < 1)
    throw PreconditionError("Field: need prime p and f >= 1");
  std::uint64_t q64 = checked_pow(p, f);
  if (q64 > (1u << 20))
    throw BoundError("Field: q = " + std::to_string(q64) + " exceeds 2^20");
  std::shared_ptr<Field> F(new Field());
  F->p_ = p;
  F->f_ = f;
  F->q_ = static_cast<std::uint32_t>(q64);
  std::uint32_t q = F->q_;
  F->exp_.resize(q - 1);
  F->log_.assign(q, 0);

  if (f == 1) {
    // x + c with root -c primitive; smallest c.
    std::uint32_t root = 1;
    for (std::uint32_t c = 1; c < p; ++c) {
      std::uint32_t r = (p - c) % p;
      bool prim = true;
      for (auto d : small_prime_factors(p - 1)) {
        std::uint64_t acc = 1, b = r, e = (p - 1) / d;
        while (e) {
          if (e & 1)
            acc = acc * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (acc == 1)
          prim = false;
      }
      if (prim) {
        root = r;
        F->modulus_ = {c, 1};
        break;
      }
    }
    std::uint64_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      F->exp_[i] = static_cast<Fq>(x);
      x = x * root % p;
    }
  } else {
    auto prime = Field::make(p, 1);
    F->modulus_ = primitive_polynomial(*prime, f);
    std::vector<std::uint32_t> c(f, 0);
    c[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      Fq code = 0;
      for (std::uint32_t k = f; k-- > 0;)
        code = code * p + c[k];
      F->exp_[i] = code;
      // multiply by x and reduce
      std::uint32_t top = c[f - 1];
      for (std::uint32_t k = f - 1; k > 0; --k)
        c[k] = c[k - 1];
      c[0] = 0;
      for (std::uint32_t k = 0; k < f; ++k)
        c[k] = (c[k] + (p - top) * F->modulus_[k]) % p;
    }
  }
  for (std::uint32_t i = 0; i + 1 < q; ++i)
    F->log_[F->exp_[i]] = i;

  F->neg_.resize(q);
  for (Fq a = 0; a < q; ++a) {
    Fq r = 0, pw = 1, t = a;
    for (std::uint32_t k = 0; k < f; ++k) {
      r += ((p - t % p) % p) * pw;
      t /= p;
      pw *= p;
    }
    F->neg_[a] = r;
  }
  if (q <= 256 && p != 2) {
    F->add_table_.resize(static_cast<std::size_t>(q) * q);
    for (Fq a = 0; a < q; ++a)
      for (Fq b = 0; b < q; ++b) {
        Fq r = 0, pw = 1, x = a, y = b;
        for (std::uint32_t k = 0; k < f; ++k) {
          r += ((x % p + y % p) % p) * pw;
          x /= p;
          y /= p;
          pw *= p;
        }
        F->add_table_[static_cast<std::size_t>(a) * q + b] = r;
      }
  }
  return F;
}

FieldPtr Field::of_order(std::uint64_t q)
{
  auto [p, f] = prime_power(q);
  if (p == 0)
    throw PreconditionError("Field: " + std::to_string(q) + " is not a prime power");
  return make(p, f);
}

Fq Field::add(Fq a, Fq b) const
{
  if (p_ == 2)
    return a ^ b;
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  if (f_ == 1)
    return (a + b) % p_;
  Fq r = 0, pw = 1;
  for (std::uint32_t k = 0; k < f_; ++k) {
    r += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Fq Field::neg(Fq a) const { return neg_[a]; }

Fq Field::inv(Fq a) const
{
  if (a == 0)
    throw PreconditionError("field: inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Fq Field::pow(Fq a, std::int64_t e) const
{
  if (a == 0) {
    if (e < 0)
      throw PreconditionError("field: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  std::int64_t n = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (k < 0)
    k += n;
  return exp_[static_cast<std::size_t>(k)];
}

Fq Field::frobenius(Fq a, std::uint32_t k) const
{
  std::int64_t e = 1;
  for (std::uint32_t i = 0; i < k % f_; ++i)
    e *= p_;
  return pow(a, e);
}

std::uint32_t Field::log(Fq a) const
{
  if (a == 0)
    throw PreconditionError("field: log of zero");
  return log_[a];
}

Fq Field::from_int(std::int64_t n) const
{
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Fq>(r);
}

bool Field::is_square(Fq a) const
{
  if (a == 0 || p_ == 2)
    return true;
  return log_[a] % 2 == 0;
}

std::vector<std::uint32_t> Field::coefficients(Fq a) const
{
  std::vector<std::uint32_t> c(f_);
  for (std::uint32_t k = 0; k < f_; ++k) {
    c[k] = a % p_;
    a /= p_;
  }
  return c;
}

std::vector<Fq> Field::prime_basis() const
{
  std::vector<Fq> b;
  Fq pw = 1;
  for (std::uint32_t k = 0; k < f_; ++k) {
    b.push_back(pw);  // code p^k is the monomial x^k
    pw *= p_;
  }
  return b;
}

FqElem field_arith(FqElem const &a, FqElem const &b, FieldOp op)
{
  if (!a.field)
    throw PreconditionError("field_arith: missing field");
  if (op == FieldOp::add || op == FieldOp::mul)
    if (!b.field || !(*a.field == *b.field))
      throw PreconditionError("field_arith: operands from different fields");
  Field const &F = *a.field;
  switch (op) {
  case FieldOp::add:
    return {a.field, F.add(a.code, b.code)};
  case FieldOp::mul:
    return {a.field, F.mul(a.code, b.code)};
  case FieldOp::inv:
    return {a.field, F.inv(a.code)};
  case FieldOp::frobenius:
    return {a.field, F.frobenius(a.code)};
  }
  return a;
}

}  // namespace groupfact::gfmat
