#include "groupfact/permcore/permutation.hpp"

#include <numeric>
#include <sstream>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images)
{
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= degree || used[x])
        throw PreconditionError("invalid cycle notation");
      used[x] = true;
      p.images_[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Permutation acc(degree());
  while (n) {
    if (n & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

BigInt Permutation::order() const
{
  BigInt r = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned long len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    r = lcm_big(r, BigInt(len));
  }
  return r;
}

std::uint64_t Permutation::order_u64() const { return to_u64(order()); }

Point Permutation::first_moved() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i)
        os << ' ';
      os << j;
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw PreconditionError("compose: degree mismatch");
  std::vector<Point> out(p.degree());
  for (Point i = 0; i < out.size(); ++i)
    out[i] = q[p[i]];
  return Permutation::unchecked(std::move(out));
}

void compose_into(Permutation const &p, Permutation const &q, std::vector<Point> &out)
{
  out.resize(p.degree());
  for (Point i = 0; i < out.size(); ++i)
    out[i] = q[p[i]];
}

Permutation conjugate(Permutation const &p, Permutation const &x)
{
  // x^-1 p x maps x(i) to x(p(i)).
  std::vector<Point> out(p.degree());
  for (Point i = 0; i < out.size(); ++i)
    out[x[i]] = x[p[i]];
  return Permutation::unchecked(std::move(out));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

}  // namespace groupfact::permcore
