#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace groupfact::gfmat {

// Field elements are integer codes: the coefficients of the polynomial
// representative in base p, little-endian (code 1 is the identity).
using Fq = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<Field const>;

// GF(p^f) built on the lexicographically smallest primitive modulus
// (coefficient tuple ordered low degree first). Immutable; fields are
// compared structurally.
class Field {
public:
  static FieldPtr make(std::uint32_t p, std::uint32_t f);
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  // Monic modulus over GF(p), low degree first, length f+1.
  std::vector<std::uint32_t> const &modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  // Root of the modulus; generates the multiplicative group.
  Fq primitive() const { return exp_[1 % (q_ - 1)]; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const
  {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t e) const;
  // x -> x^(p^k)
  Fq frobenius(Fq a, std::uint32_t k = 1) const;

  Fq exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Fq a) const;

  Fq from_int(std::int64_t n) const;
  bool is_square(Fq a) const;
  std::vector<std::uint32_t> coefficients(Fq a) const;
  // Additive basis 1, w, ..., w^(f-1) over the prime field.
  std::vector<Fq> prime_basis() const;

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }
  bool operator==(Field const &o) const
  {
    return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
  }

private:
  Field() = default;

  std::uint32_t p_ = 0, f_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fq> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Fq> add_table_;  // q*q entries when q is small
  std::vector<Fq> neg_;
};

// Thin value wrapper for field arithmetic at API boundaries.
struct FqElem {
  FieldPtr field;
  Fq code = 0;
};

enum class FieldOp { add, mul, inv, frobenius };
FqElem field_arith(FqElem const &a, FqElem const &b, FieldOp op);

// Polynomials over a field, coefficient codes low degree first.
using Poly = std::vector<Fq>;

// Lexicographically smallest monic primitive polynomial of degree m over F
// (tuple (c_0, ..., c_{m-1}) compared from c_0). Requires |F|^m < 2^62.
Poly primitive_polynomial(Field const &F, std::uint32_t m);
bool is_primitive_polynomial(Field const &F, Poly const &monic);

// Prime factors of n by trial division (n below 2^62).
std::vector<std::uint64_t> small_prime_factors(std::uint64_t n);
bool is_prime_u64(std::uint64_t n);
// (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace groupfact::gfmat
