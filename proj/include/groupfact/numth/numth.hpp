#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/gfmat/orders.hpp"

namespace groupfact::numth {

bool is_probable_prime(BigInt const &n);
// Prime factorization (trial division, then Pollard-Brent rho).
std::map<BigInt, unsigned> factor(BigInt const &n);
std::vector<BigInt> prime_divisors(BigInt const &n);

// Least m >= 1 with a^m = 1 mod r.
BigInt multiplicative_order(BigInt const &a, BigInt const &r);

struct PpdResult {
  BigInt a;
  unsigned m = 0;
  std::vector<BigInt> primes;  // sorted
  bool is_exception = false;   // (2,6) or (2^k-1, 2), from the closed form
};

// Value of the m-th cyclotomic polynomial at a.
BigInt cyclotomic_value(BigInt const &a, unsigned m);
PpdResult primitive_prime_divisors(BigInt const &a, unsigned m);

BigInt r_part(BigInt const &n, BigInt const &r);
BigInt r_prime_part(BigInt const &n, BigInt const &r);

struct RPartReport {
  bool a_holds = true;
  bool b_applicable = false, b_holds = true;
  bool c_applicable = false, c_holds = true;
  std::vector<char> violated() const;
};
RPartReport check_r_part_lemma(std::uint64_t t, std::uint64_t f, std::uint64_t r);

struct FactorialPart {
  std::uint64_t exponent = 0;  // Legendre sum
  BigInt value;                // p^exponent
  bool bound_holds = false;    // exponent < n/(p-1)
};
FactorialPart factorial_p_part(std::uint64_t n, std::uint64_t p);

// |R|^3 <= 24^(n-1), and whether equality holds.
bool dixon_bound_check(std::uint64_t n, BigInt const &solvable_order, bool *equality = nullptr);

// A nonabelian simple group by family and parameters.
struct SimpleGroupId {
  enum class Kind { lie, alternating, sporadic } kind = Kind::lie;
  gfmat::Family family = gfmat::Family::PSL;
  std::uint64_t n = 0;  // dimension, or alternating degree
  std::uint64_t q = 0;
  std::string sporadic;

  static SimpleGroupId lie(gfmat::Family f, std::uint64_t n, std::uint64_t q);
  static SimpleGroupId alternating(std::uint64_t n);
  static SimpleGroupId sporadic_group(std::string const &name);
  static SimpleGroupId parse(std::string const &text);
  std::string name() const;
};

BigInt simple_order(SimpleGroupId const &id);
BigInt simple_out_order(SimpleGroupId const &id);
// The same group under other names (A5 = PSL2(4) = PSL2(5), ...), id included.
std::vector<SimpleGroupId> isomorphic_names(SimpleGroupId const &id);

struct CommonDivisorReport {
  std::string id;
  BigInt r;
  BigInt lhs;  // |T|_r
  BigInt rhs;  // r |Out(T)|_r
  bool inequality_holds = false;
  bool equality = false;
  std::optional<bool> predicted_equality;  // only for r in {2,3}
};

// Equality predicate of parts (a)-(d) for r in {2, 3}, through isomorphisms.
bool common_divisor_equality_predicted(SimpleGroupId const &id, unsigned r);
CommonDivisorReport common_divisor_check(SimpleGroupId const &id, BigInt const &r);

struct SweepResult {
  std::vector<CommonDivisorReport> records;
  std::size_t groups = 0;
  std::size_t inequality_violations = 0;
  std::size_t equality_mismatches = 0;
};
// All simple classical groups of dimension <= dim_max over q <= q_max (one
// family, or all when family is empty) and every common prime.
SweepResult common_divisor_sweep(std::optional<gfmat::Family> family, std::uint64_t dim_max,
                                 std::uint64_t q_max);

// Smallest index of a proper subgroup, from the classical table.
BigInt min_index(SimpleGroupId const &id);

}  // namespace groupfact::numth
