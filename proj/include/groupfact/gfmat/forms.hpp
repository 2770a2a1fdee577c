#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "groupfact/gfmat/matrix.hpp"

namespace groupfact::gfmat {

enum class FormKind { symplectic, unitary, quadratic_plus, quadratic_minus, quadratic_odd };

std::string to_string(FormKind k);

// A classical form on the standard basis e_1..e_m, f_1..f_m (plus d in odd
// dimension), stored in that order. For unitary spaces the field is GF(q^2)
// and conjugation is x -> x^q.
struct FormedSpace {
  FormKind kind = FormKind::symplectic;
  std::size_t dim = 0;
  std::size_t m = 0;
  std::uint64_t q = 0;  // base field size
  FieldPtr field;
  MatFq gram;               // beta(u,v) = u * gram * conj(v)^T
  std::optional<MatFq> quad;  // Q(v) = v * quad * v^T, upper triangular
  Fq mu = 0;     // unitary: mu + mu^q != 0; odd orthogonal: a non-square
  Fq sigma = 0;  // minus type: x^2 + x + sigma irreducible

  std::size_t e(std::size_t i) const { return i - 1; }
  std::size_t f(std::size_t i) const { return m + i - 1; }
  std::size_t d() const { return 2 * m; }
  Fq conj(Fq x) const;
  Vec basis_vector(std::size_t idx) const;
};

FormedSpace make_formed_space(FormKind kind, std::size_t dim, std::uint64_t q);

Fq eval_form(FormedSpace const &s, Vec const &u, Vec const &v);
Fq eval_quadratic(FormedSpace const &s, Vec const &v);
bool preserves_form(FormedSpace const &s, MatFq const &g);

// Upper-triangular representative of the quadratic form v -> v M v^T.
MatFq reduce_quadratic(MatFq const &m);

// Parameter choices, smallest in code order.
Fq smallest_nonsquare(Field const &F);
Fq smallest_minus_sigma(Field const &F);
Fq smallest_unitary_mu(Field const &F, std::uint64_t q);

}  // namespace groupfact::gfmat
