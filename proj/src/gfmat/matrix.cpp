#include "groupfact/gfmat/matrix.hpp"

#include "groupfact/errors.hpp"

namespace groupfact::gfmat {

MatFq::MatFq(FieldPtr field, std::size_t rows, std::size_t cols)
  : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
  if (!field_ || rows == 0 || cols == 0)
    throw PreconditionError("MatFq: need a field and positive dimensions");
}

MatFq MatFq::identity(FieldPtr field, std::size_t n)
{
  MatFq m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

MatFq MatFq::from_rows(FieldPtr field, std::vector<Vec> const &rows)
{
  if (rows.empty())
    throw PreconditionError("MatFq: no rows");
  MatFq m(std::move(field), rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw PreconditionError("MatFq: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j] >= m.field_->q())
        throw PreconditionError("MatFq: entry outside the field");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Vec MatFq::row(std::size_t i) const
{
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

MatFq MatFq::operator*(MatFq const &o) const
{
  if (cols_ != o.rows_ || !(*field_ == *o.field_))
    throw PreconditionError("MatFq: shape or field mismatch in product");
  Field const &F = *field_;
  MatFq r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Fq a = at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.data_[i * o.cols_ + j] = F.add(r.data_[i * o.cols_ + j], F.mul(a, o.at(k, j)));
    }
  return r;
}

MatFq MatFq::operator+(MatFq const &o) const
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("MatFq: shape mismatch in sum");
  MatFq r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = field_->add(data_[i], o.data_[i]);
  return r;
}

MatFq MatFq::transpose() const
{
  MatFq r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.set(j, i, at(i, j));
  return r;
}

MatFq MatFq::frobenius(std::uint32_t k) const
{
  MatFq r = *this;
  for (auto &x : r.data_)
    x = field_->frobenius(x, k);
  return r;
}

MatFq MatFq::pow(std::uint64_t e) const
{
  if (rows_ != cols_)
    throw PreconditionError("MatFq: power of a non-square matrix");
  MatFq r = identity(field_, rows_);
  MatFq b = *this;
  while (e) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Fq MatFq::det() const
{
  if (rows_ != cols_)
    throw PreconditionError("MatFq: determinant of a non-square matrix");
  Field const &F = *field_;
  std::size_t n = rows_;
  std::vector<Fq> a = data_;
  Fq d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[c * n + j], a[piv * n + j]);
      d = F.neg(d);
    }
    Fq pv = a[c * n + c];
    d = F.mul(d, pv);
    Fq ip = F.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      Fq factor = F.mul(a[i * n + c], ip);
      if (factor == 0)
        continue;
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] = F.sub(a[i * n + j], F.mul(factor, a[c * n + j]));
    }
  }
  return d;
}

MatFq MatFq::inverse() const
{
  if (rows_ != cols_)
    throw PreconditionError("MatFq: inverse of a non-square matrix");
  Field const &F = *field_;
  std::size_t n = rows_;
  std::vector<Fq> a = data_;
  MatFq inv = identity(field_, n);
  auto &b = inv.data_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0)
      ++piv;
    if (piv == n)
      throw PreconditionError("MatFq: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[piv * n + j]);
      std::swap(b[c * n + j], b[piv * n + j]);
    }
    Fq ip = F.inv(a[c * n + c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] = F.mul(a[c * n + j], ip);
      b[c * n + j] = F.mul(b[c * n + j], ip);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c] == 0)
        continue;
      Fq factor = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = F.sub(a[i * n + j], F.mul(factor, a[c * n + j]));
        b[i * n + j] = F.sub(b[i * n + j], F.mul(factor, b[c * n + j]));
      }
    }
  }
  return inv;
}

bool MatFq::is_identity() const
{
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

Vec vec_mul(Vec const &v, MatFq const &m)
{
  if (v.size() != m.rows())
    throw PreconditionError("vec_mul: dimension mismatch");
  Field const &F = *m.field();
  Vec r(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      r[j] = F.add(r[j], F.mul(v[i], m.at(i, j)));
  }
  return r;
}

Vec vec_add(Field const &F, Vec const &a, Vec const &b)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_scale(Field const &F, Fq c, Vec const &v)
{
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = F.mul(c, v[i]);
  return r;
}

bool is_zero(Vec const &v)
{
  for (Fq x : v)
    if (x != 0)
      return false;
  return true;
}

std::uint64_t matrix_order_dividing(MatFq const &m, std::uint64_t n)
{
  if (!m.pow(n).is_identity())
    throw PreconditionError("matrix_order_dividing: order does not divide n");
  for (auto r : small_prime_factors(n))
    while (n % r == 0 && m.pow(n / r).is_identity())
      n /= r;
  return n;
}

std::uint64_t vec_index(Field const &F, Vec const &v)
{
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;)
    idx = idx * F.q() + v[i];
  return idx;
}

Vec vec_from_index(Field const &F, std::size_t n, std::uint64_t idx)
{
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Fq>(idx % F.q());
    idx /= F.q();
  }
  return v;
}

}  // namespace groupfact::gfmat
