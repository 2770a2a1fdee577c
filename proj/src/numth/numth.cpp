#include "groupfact/numth/numth.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "groupfact/errors.hpp"
#include "groupfact/gfmat/field.hpp"

namespace groupfact::numth {

using gfmat::Family;

bool is_probable_prime(BigInt const &n)
{
  if (n < 2)
    return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

BigInt pollard_brent(BigInt const &n, std::uint64_t seed)
{
  if (n % 2 == 0)
    return 2;
  std::mt19937_64 rng(seed);
  while (true) {
    BigInt y = big(rng()) % n, c = big(rng()) % (n - 1) + 1, g = 1, r = 1, q = 1, x, ys;
    std::uint64_t const m = 128;
    auto step = [&](BigInt const &v) -> BigInt { return (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i)
        y = step(y);
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < m && k + i < r; ++i) {
          y = step(y);
          q = q * abs(BigInt(x - y)) % n;
        }
        g = gcd_big(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_big(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(BigInt n, std::map<BigInt, unsigned> &out)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n, mpz_sizeinbase(n.get_mpz_t(), 2));
  factor_into(d, out);
  factor_into(n / d, out);
}

BigInt ipow(BigInt const &b, std::uint64_t e) { return pow_big(b, static_cast<unsigned long>(e)); }

BigInt powmod(BigInt const &b, BigInt const &e, BigInt const &m)
{
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t m)
{
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i <= m; ++i)
    if (m % i == 0)
      d.push_back(i);
  return d;
}

int mobius(std::uint64_t n)
{
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      mu = -mu;
    }
  if (n > 1)
    mu = -mu;
  return mu;
}

}  // namespace

std::map<BigInt, unsigned> factor(BigInt const &n)
{
  if (n < 1)
    throw PreconditionError("factor: n must be positive");
  std::map<BigInt, unsigned> out;
  BigInt m = n;
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2))
    while (m % p == 0) {
      ++out[BigInt(p)];
      m /= p;
    }
  factor_into(m, out);
  return out;
}

std::vector<BigInt> prime_divisors(BigInt const &n)
{
  std::vector<BigInt> out;
  for (auto const &[p, e] : factor(n))
    out.push_back(p);
  return out;
}

BigInt multiplicative_order(BigInt const &a, BigInt const &r)
{
  if (!is_probable_prime(r))
    throw PreconditionError("multiplicative_order: r = " + r.get_str() + " is not prime");
  BigInt ar = ((a % r) + r) % r;
  if (ar == 0)
    throw PreconditionError("multiplicative_order: r divides a");
  BigInt ord = r - 1;
  for (auto const &[p, e] : factor(r - 1))
    for (unsigned i = 0; i < e && ord % p == 0 && powmod(ar, ord / p, r) == 1; ++i)
      ord /= p;
  return ord;
}

BigInt cyclotomic_value(BigInt const &a, unsigned m)
{
  if (m == 0)
    throw PreconditionError("cyclotomic_value: m must be positive");
  BigInt num = 1, den = 1;
  for (std::uint64_t d : divisors_of(m)) {
    int mu = mobius(m / d);
    if (mu == 1)
      num *= ipow(a, d) - 1;
    else if (mu == -1)
      den *= ipow(a, d) - 1;
  }
  return num / den;
}

PpdResult primitive_prime_divisors(BigInt const &a, unsigned m)
{
  if (a < 2 || m < 2)
    throw PreconditionError("primitive_prime_divisors: a, m must be >= 2");
  PpdResult res;
  res.a = a;
  res.m = m;
  // a^m - 1 is the product of the cyclotomic values over d | m.
  std::map<BigInt, unsigned> fac;
  for (std::uint64_t d : divisors_of(m))
    for (auto const &[p, e] : factor(cyclotomic_value(a, static_cast<unsigned>(d))))
      fac[p] += e;
  for (auto const &[r, e] : fac)
    if (a % r != 0 && multiplicative_order(a, r) == m)
      res.primes.push_back(r);
  BigInt ap1 = a + 1;
  bool pow2 = (ap1 & (ap1 - 1)) == 0;
  res.is_exception = (a == 2 && m == 6) || (m == 2 && pow2);
  return res;
}

BigInt r_part(BigInt const &n, BigInt const &r)
{
  if (n < 1 || r < 2)
    throw PreconditionError("r_part: need n >= 1 and r prime");
  BigInt part = 1, m = n;
  while (m % r == 0) {
    m /= r;
    part *= r;
  }
  return part;
}

BigInt r_prime_part(BigInt const &n, BigInt const &r) { return n / r_part(n, r); }

std::vector<char> RPartReport::violated() const
{
  std::vector<char> v;
  if (!a_holds)
    v.push_back('a');
  if (b_applicable && !b_holds)
    v.push_back('b');
  if (c_applicable && !c_holds)
    v.push_back('c');
  return v;
}

RPartReport check_r_part_lemma(std::uint64_t t, std::uint64_t f, std::uint64_t r)
{
  if (t < 2 || f < 1 || !gfmat::is_prime_u64(r))
    throw PreconditionError("check_r_part_lemma: need t > 1, f >= 1, r prime");
  BigInt R = big(r);
  BigInt r0 = r == 2 ? 4 : R;
  BigInt tf1 = ipow(big(t), f) - 1;
  std::uint64_t f_r = to_u64(r_part(big(f), R));
  std::uint64_t f_rp = f / f_r;

  RPartReport rep;
  bool lhs = tf1 % R == 0;
  bool rhs = (ipow(big(t), f_rp) - 1) % R == 0;
  rep.a_holds = lhs == rhs;

  if (big(t) % r0 == 1) {
    rep.b_applicable = true;
    rep.b_holds = r_part(tf1, R) == big(f_r) * r_part(big(t - 1), R);
  }
  if (tf1 % r0 == 0) {
    rep.c_applicable = true;
    rep.c_holds = r_part(tf1, R) >= r0 * big(f_r);
  }
  return rep;
}

FactorialPart factorial_p_part(std::uint64_t n, std::uint64_t p)
{
  if (n < 1 || !gfmat::is_prime_u64(p))
    throw PreconditionError("factorial_p_part: need n >= 1 and p prime");
  FactorialPart fp;
  for (std::uint64_t pk = p; pk <= n; pk *= p) {
    fp.exponent += n / pk;
    if (pk > n / p)
      break;
  }
  fp.value = ipow(big(p), fp.exponent);
  // exponent < n/(p-1)  <=>  exponent * (p-1) < n
  fp.bound_holds = fp.exponent * (p - 1) < n;
  return fp;
}

bool dixon_bound_check(std::uint64_t n, BigInt const &solvable_order, bool *equality)
{
  if (n < 1)
    throw PreconditionError("dixon_bound_check: n must be >= 1");
  BigInt lhs = ipow(solvable_order, 3);
  BigInt rhs = ipow(BigInt(24), n - 1);
  if (equality)
    *equality = lhs == rhs;
  return lhs <= rhs;
}

// ---------------------------------------------------------------- simple groups

namespace {

struct SporadicRow {
  char const *name;
  char const *order;
  unsigned out;
  unsigned min_index;
};

SporadicRow const kSporadic[] = {
  {"M11", "7920", 1, 11},          {"M12", "95040", 2, 12},
  {"J1", "175560", 1, 266},        {"M22", "443520", 2, 22},
  {"J2", "604800", 2, 100},        {"M23", "10200960", 1, 23},
  {"HS", "44352000", 2, 100},      {"J3", "50232960", 2, 6156},
  {"M24", "244823040", 1, 24},     {"McL", "898128000", 2, 275},
};

SporadicRow const *find_sporadic(std::string const &name)
{
  for (auto const &row : kSporadic)
    if (name == row.name)
      return &row;
  return nullptr;
}

bool lie_family_ok(Family f)
{
  switch (f) {
  case Family::PSL:
  case Family::PSU:
  case Family::PSp:
  case Family::OmegaOdd:
  case Family::POmegaOdd:
  case Family::POmegaPlus:
  case Family::POmegaMinus:
    return true;
  default:
    return false;
  }
}

BigInt factorial(std::uint64_t n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

SimpleGroupId SimpleGroupId::lie(Family f, std::uint64_t n, std::uint64_t q)
{
  if (!lie_family_ok(f) || !gfmat::is_simple_classical(f, n, q))
    throw PreconditionError("not a simple classical group: " + gfmat::to_string(f) + "(" +
                            std::to_string(n) + "," + std::to_string(q) + ")");
  SimpleGroupId id;
  id.kind = Kind::lie;
  id.family = f == Family::POmegaOdd ? Family::OmegaOdd : f;
  id.n = n;
  id.q = q;
  return id;
}

SimpleGroupId SimpleGroupId::alternating(std::uint64_t n)
{
  if (n < 5)
    throw PreconditionError("A" + std::to_string(n) + " is not nonabelian simple");
  SimpleGroupId id;
  id.kind = Kind::alternating;
  id.n = n;
  return id;
}

SimpleGroupId SimpleGroupId::sporadic_group(std::string const &name)
{
  if (!find_sporadic(name))
    throw PreconditionError("unknown sporadic group: " + name);
  SimpleGroupId id;
  id.kind = Kind::sporadic;
  id.sporadic = name;
  return id;
}

// Accepts "A7", "M11", "PSL(2,9)" and "PSL2(9)".
SimpleGroupId SimpleGroupId::parse(std::string const &text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.size() >= 2 && s[0] == 'A' && std::all_of(s.begin() + 1, s.end(), ::isdigit))
    return alternating(std::stoull(s.substr(1)));
  if (find_sporadic(s))
    return sporadic_group(s);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw PreconditionError("cannot parse simple group name: " + text);
  std::string head = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::size_t digits = head.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(head[digits - 1])))
    --digits;
  std::uint64_t n = 0, q = 0;
  try {
    if (digits < head.size()) {
      n = std::stoull(head.substr(digits));
      q = std::stoull(args);
    } else {
      auto comma = args.find(',');
      if (comma == std::string::npos)
        throw PreconditionError("missing dimension");
      n = std::stoull(args.substr(0, comma));
      q = std::stoull(args.substr(comma + 1));
    }
  } catch (std::logic_error const &) {
    throw PreconditionError("cannot parse simple group name: " + text);
  }
  return lie(gfmat::parse_family(head.substr(0, digits)), n, q);
}

std::string SimpleGroupId::name() const
{
  switch (kind) {
  case Kind::alternating:
    return "A" + std::to_string(n);
  case Kind::sporadic:
    return sporadic;
  default:
    return gfmat::to_string(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  }
}

BigInt simple_order(SimpleGroupId const &id)
{
  switch (id.kind) {
  case SimpleGroupId::Kind::alternating:
    return factorial(id.n) / 2;
  case SimpleGroupId::Kind::sporadic:
    return BigInt(find_sporadic(id.sporadic)->order);
  default:
    return gfmat::classical_order(id.family, id.n, id.q);
  }
}

BigInt simple_out_order(SimpleGroupId const &id)
{
  switch (id.kind) {
  case SimpleGroupId::Kind::alternating:
    return id.n == 6 ? 4 : 2;
  case SimpleGroupId::Kind::sporadic:
    return find_sporadic(id.sporadic)->out;
  default:
    return gfmat::out_order(id.family, id.n, id.q);
  }
}

std::vector<SimpleGroupId> isomorphic_names(SimpleGroupId const &id)
{
  using K = SimpleGroupId::Kind;
  std::vector<std::vector<SimpleGroupId>> classes = {
    {SimpleGroupId::alternating(5), SimpleGroupId::lie(Family::PSL, 2, 4),
     SimpleGroupId::lie(Family::PSL, 2, 5)},
    {SimpleGroupId::alternating(6), SimpleGroupId::lie(Family::PSL, 2, 9)},
    {SimpleGroupId::alternating(8), SimpleGroupId::lie(Family::PSL, 4, 2)},
    {SimpleGroupId::lie(Family::PSL, 3, 2), SimpleGroupId::lie(Family::PSL, 2, 7)},
    {SimpleGroupId::lie(Family::PSU, 4, 2), SimpleGroupId::lie(Family::PSp, 4, 3)},
  };
  auto same = [](SimpleGroupId const &a, SimpleGroupId const &b) {
    if (a.kind != b.kind)
      return false;
    if (a.kind == K::sporadic)
      return a.sporadic == b.sporadic;
    if (a.kind == K::alternating)
      return a.n == b.n;
    return a.family == b.family && a.n == b.n && a.q == b.q;
  };
  for (auto const &cls : classes)
    for (auto const &x : cls)
      if (same(x, id))
        return cls;
  return {id};
}

// ------------------------------------------------------------ |T|_r vs |Out|_r

namespace {

bool predicate_single(SimpleGroupId const &id, unsigned r)
{
  if (id.kind != SimpleGroupId::Kind::lie)
    return false;
  auto [p, f] = gfmat::prime_power(id.q);
  std::uint64_t p8 = p % 8, p9 = p % 9, f6 = f % 6;
  if (r == 2)
    return id.family == Family::PSL && id.n == 2 && (p8 == 3 || p8 == 5);
  if (r != 3)
    return false;
  bool p_2_5 = p9 == 2 || p9 == 5;
  bool p_4_7 = p9 == 4 || p9 == 7;
  if (id.family == Family::PSL && id.n == 2)
    return (p_2_5 || p_4_7) && f % 3 == 0;
  if (id.family == Family::PSL && id.n == 3)
    return (p_2_5 && (f6 == 2 || f6 == 3 || f6 == 4)) || (p_4_7 && f % 3 != 0);
  if (id.family == Family::PSU && id.n == 3)
    return (p_2_5 && (f6 == 0 || f6 == 1 || f6 == 5)) || (p_4_7 && f % 3 == 0);
  return false;
}

}  // namespace

bool common_divisor_equality_predicted(SimpleGroupId const &id, unsigned r)
{
  for (auto const &alias : isomorphic_names(id))
    if (predicate_single(alias, r))
      return true;
  return false;
}

CommonDivisorReport common_divisor_check(SimpleGroupId const &id, BigInt const &r)
{
  BigInt order = simple_order(id);
  BigInt out = simple_out_order(id);
  if (!is_probable_prime(r) || order % r != 0 || out % r != 0)
    throw PreconditionError("common_divisor_check: " + r.get_str() +
                            " is not a common prime divisor of |T| and |Out(T)| for " +
                            id.name());
  CommonDivisorReport rep;
  rep.id = id.name();
  rep.r = r;
  rep.lhs = r_part(order, r);
  rep.rhs = r * r_part(out, r);
  rep.inequality_holds = rep.lhs >= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;
  if (r == 2 || r == 3)
    rep.predicted_equality = common_divisor_equality_predicted(id, static_cast<unsigned>(r.get_ui()));
  return rep;
}

SweepResult common_divisor_sweep(std::optional<Family> family, std::uint64_t dim_max,
                                 std::uint64_t q_max)
{
  std::vector<Family> families = {Family::PSL,      Family::PSU,        Family::PSp,
                                  Family::OmegaOdd, Family::POmegaPlus, Family::POmegaMinus};
  if (family) {
    Family f = *family == Family::POmegaOdd ? Family::OmegaOdd : *family;
    if (!lie_family_ok(f))
      throw PreconditionError("sweep: not a simple classical family: " + gfmat::to_string(f));
    families = {f};
  }
  SweepResult res;
  for (Family fam : families)
    for (std::uint64_t n = 2; n <= dim_max; ++n)
      for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (gfmat::prime_power(q).first == 0 || !gfmat::is_simple_classical(fam, n, q))
          continue;
        SimpleGroupId id = SimpleGroupId::lie(fam, n, q);
        ++res.groups;
        BigInt order = simple_order(id);
        for (BigInt const &r : prime_divisors(simple_out_order(id))) {
          if (order % r != 0)
            continue;
          auto rep = common_divisor_check(id, r);
          if (!rep.inequality_holds)
            ++res.inequality_violations;
          if (rep.predicted_equality && *rep.predicted_equality != rep.equality)
            ++res.equality_mismatches;
          res.records.push_back(std::move(rep));
        }
      }
  return res;
}

// --------------------------------------------------------------- minimal index

BigInt min_index(SimpleGroupId const &id)
{
  using K = SimpleGroupId::Kind;
  if (id.kind == K::alternating)
    return id.n;
  if (id.kind == K::sporadic)
    return find_sporadic(id.sporadic)->min_index;

  std::uint64_t n = id.n, q = id.q, m = n / 2;
  BigInt Q = big(q);
  auto qp = [&](std::uint64_t e) { return ipow(Q, e); };
  switch (id.family) {
  case Family::PSL:
    if (n == 2) {
      switch (q) {
      case 5: return 5;
      case 7: return 7;
      case 9: return 6;
      case 11: return 11;
      }
    }
    if (n == 4 && q == 2)
      return 8;
    return (qp(n) - 1) / (Q - 1);
  case Family::PSp:
    if (n == 4 && q == 3)
      return 27;
    if (q == 2)
      return ipow(BigInt(2), m - 1) * (ipow(BigInt(2), m) - 1);
    return (qp(n) - 1) / (Q - 1);
  case Family::OmegaOdd:
    if (q == 3)
      return qp(m) * (qp(m) - 1) / 2;
    return (qp(2 * m) - 1) / (Q - 1);
  case Family::POmegaPlus:
    if (q == 2)
      return ipow(BigInt(2), m - 1) * (ipow(BigInt(2), m) - 1);
    return (qp(m) - 1) * (qp(m - 1) + 1) / (Q - 1);
  case Family::POmegaMinus:
    return (qp(m) + 1) * (qp(m - 1) - 1) / (Q - 1);
  case Family::PSU: {
    if (n == 3)
      return q == 5 ? BigInt(50) : BigInt(qp(3) + 1);
    if (n == 4)
      return (Q + 1) * (qp(3) + 1);
    if (q == 2 && n % 6 == 0)
      return ipow(BigInt(2), n - 1) * (ipow(BigInt(2), n) - 1) / 3;
    BigInt s1 = n % 2 == 0 ? BigInt(1) : BigInt(-1);
    BigInt a = qp(n) - s1;
    BigInt b = qp(n - 1) + s1;
    return a * b / (Q * Q - 1);
  }
  default:
    throw PreconditionError("min_index: family outside the table: " + id.name());
  }
}

}  // namespace groupfact::numth
