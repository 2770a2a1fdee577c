#include "groupfact/gfmat/forms.hpp"

#include "groupfact/errors.hpp"

namespace groupfact::gfmat {

std::string to_string(FormKind k)
{
  switch (k) {
  case FormKind::symplectic:
    return "symplectic";
  case FormKind::unitary:
    return "unitary";
  case FormKind::quadratic_plus:
    return "quadratic-plus";
  case FormKind::quadratic_minus:
    return "quadratic-minus";
  case FormKind::quadratic_odd:
    return "quadratic-odd";
  }
  return "?";
}

Fq FormedSpace::conj(Fq x) const
{
  if (kind != FormKind::unitary)
    return x;
  return field->pow(x, static_cast<std::int64_t>(q));
}

Vec FormedSpace::basis_vector(std::size_t idx) const
{
  Vec v(dim, 0);
  v.at(idx) = 1;
  return v;
}

Fq smallest_nonsquare(Field const &F)
{
  for (Fq a = 1; a < F.q(); ++a)
    if (!F.is_square(a))
      return a;
  throw PreconditionError("no non-square in characteristic 2");
}

Fq smallest_minus_sigma(Field const &F)
{
  // x^2 + x + s irreducible iff it has no root.
  for (Fq s = 0; s < F.q(); ++s) {
    bool root = false;
    for (Fq x = 0; x < F.q() && !root; ++x)
      root = F.add(F.add(F.mul(x, x), x), s) == 0;
    if (!root)
      return s;
  }
  throw InvariantError("no irreducible x^2+x+sigma");
}

Fq smallest_unitary_mu(Field const &F, std::uint64_t q)
{
  for (Fq a = 0; a < F.q(); ++a)
    if (F.add(a, F.pow(a, static_cast<std::int64_t>(q))) != 0)
      return a;
  throw InvariantError("no unitary mu");
}

MatFq reduce_quadratic(MatFq const &m)
{
  Field const &F = *m.field();
  MatFq r(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      r.set(i, j, i == j ? m.at(i, i) : F.add(m.at(i, j), m.at(j, i)));
  return r;
}

FormedSpace make_formed_space(FormKind kind, std::size_t dim, std::uint64_t q)
{
  auto [p, f] = prime_power(q);
  if (p == 0)
    throw PreconditionError("formed space: q must be a prime power");
  FormedSpace s;
  s.kind = kind;
  s.dim = dim;
  s.q = q;
  bool odd = kind == FormKind::quadratic_odd || (kind == FormKind::unitary && dim % 2 == 1);
  if (dim < 1 || (!odd && dim % 2 != 0) || (kind == FormKind::quadratic_odd && dim % 2 != 1))
    throw PreconditionError("formed space: dimension incompatible with " + to_string(kind));
  if (kind != FormKind::unitary && kind != FormKind::quadratic_odd && dim < 2)
    throw PreconditionError("formed space: dimension too small");
  s.m = dim / 2;
  s.field = kind == FormKind::unitary ? Field::make(p, 2 * f) : Field::make(p, f);
  Field const &F = *s.field;
  std::size_t m = s.m;

  s.gram = MatFq(s.field, dim, dim);
  if (kind == FormKind::symplectic) {
    for (std::size_t i = 1; i <= m; ++i) {
      s.gram.set(s.e(i), s.f(i), 1);
      s.gram.set(s.f(i), s.e(i), F.neg(1));
    }
    return s;
  }
  if (kind == FormKind::unitary) {
    for (std::size_t i = 1; i <= m; ++i) {
      s.gram.set(s.e(i), s.f(i), 1);
      s.gram.set(s.f(i), s.e(i), 1);
    }
    if (dim % 2 == 1)
      s.gram.set(s.d(), s.d(), 1);
    s.mu = smallest_unitary_mu(F, q);
    return s;
  }

  MatFq u(s.field, dim, dim);
  for (std::size_t i = 1; i <= m; ++i)
    u.set(s.e(i), s.f(i), 1);
  if (kind == FormKind::quadratic_minus) {
    s.sigma = smallest_minus_sigma(F);
    u.set(s.e(m), s.e(m), 1);
    u.set(s.f(m), s.f(m), s.sigma);
  }
  if (kind == FormKind::quadratic_odd) {
    u.set(s.d(), s.d(), 1);
    if (p != 2)
      s.mu = smallest_nonsquare(F);
  }
  s.gram = u + u.transpose();
  s.quad = u;
  return s;
}

Fq eval_form(FormedSpace const &s, Vec const &u, Vec const &v)
{
  if (u.size() != s.dim || v.size() != s.dim)
    throw PreconditionError("eval_form: dimension mismatch");
  Field const &F = *s.field;
  Vec w = vec_mul(u, s.gram);
  Fq r = 0;
  for (std::size_t i = 0; i < s.dim; ++i)
    r = F.add(r, F.mul(w[i], s.conj(v[i])));
  return r;
}

Fq eval_quadratic(FormedSpace const &s, Vec const &v)
{
  if (!s.quad)
    throw PreconditionError("eval_quadratic: " + to_string(s.kind) + " space has no quadratic form");
  if (v.size() != s.dim)
    throw PreconditionError("eval_quadratic: dimension mismatch");
  Field const &F = *s.field;
  Vec w = vec_mul(v, *s.quad);
  Fq r = 0;
  for (std::size_t i = 0; i < s.dim; ++i)
    r = F.add(r, F.mul(w[i], v[i]));
  return r;
}

bool preserves_form(FormedSpace const &s, MatFq const &g)
{
  if (g.rows() != s.dim || g.cols() != s.dim || !(*g.field() == *s.field))
    return false;
  if (s.quad)
    return reduce_quadratic(g * *s.quad * g.transpose()) == *s.quad;
  MatFq gc = g;
  if (s.kind == FormKind::unitary) {
    auto [p, f] = prime_power(s.q);
    (void)p;
    gc = g.frobenius(f);
  }
  return g * s.gram * gc.transpose() == s.gram;
}

}  // namespace groupfact::gfmat
