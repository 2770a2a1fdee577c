#include "groupfact/constructions/constructions.hpp"

#include <atomic>
#include <set>
#include <thread>
#include <unordered_set>

#include "groupfact/errors.hpp"
#include "groupfact/gfmat/matgroup.hpp"
#include "groupfact/gfmat/orders.hpp"
#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::constructions {

using gfmat::Family;
using gfmat::FieldPtr;
using gfmat::FormKind;
using gfmat::Fq;
using gfmat::MatFq;
using gfmat::Vec;

std::string to_string(ConstructionFamily f)
{
  switch (f) {
  case ConstructionFamily::unitary: return "unitary";
  case ConstructionFamily::symplectic: return "symplectic";
  case ConstructionFamily::odd_orthogonal: return "odd-orthogonal";
  case ConstructionFamily::plus_orthogonal: return "plus-orthogonal";
  }
  return "?";
}

ConstructionFamily parse_construction_family(std::string const &name)
{
  for (auto f : {ConstructionFamily::unitary, ConstructionFamily::symplectic,
                 ConstructionFamily::odd_orthogonal, ConstructionFamily::plus_orthogonal})
    if (name == to_string(f))
      return f;
  throw PreconditionError("unknown construction family '" + name + "'");
}

namespace {

BigInt qp(std::uint64_t q, std::uint64_t e) { return pow_big(big(q), e); }

// Identity plus the listed (row, col, value) additions.
struct Elementary {
  MatFq m;
  Elementary(FieldPtr const &F, std::size_t n) : m(MatFq::identity(F, n)) {}
  void add(std::size_t r, std::size_t c, Fq v) { m.set(r, c, m.field()->add(m.at(r, c), v)); }
};

// A GF(p)-basis of an additive subgroup given by its elements.
std::vector<Fq> additive_basis(gfmat::Field const &F, std::vector<Fq> const &elems)
{
  std::vector<Fq> basis;
  std::set<Fq> span{0};
  for (Fq x : elems) {
    if (span.count(x))
      continue;
    basis.push_back(x);
    std::set<Fq> grown;
    for (Fq s : span) {
      Fq v = s;
      for (std::uint32_t c = 0; c < F.p(); ++c) {
        grown.insert(v);
        v = F.add(v, x);
      }
    }
    span = std::move(grown);
  }
  return basis;
}

FormKind kind_of(ConstructionFamily f)
{
  switch (f) {
  case ConstructionFamily::unitary: return FormKind::unitary;
  case ConstructionFamily::symplectic: return FormKind::symplectic;
  case ConstructionFamily::odd_orthogonal: return FormKind::quadratic_odd;
  default: return FormKind::quadratic_plus;
  }
}

std::vector<MatFq> radical_generators(ConstructionFamily family, gfmat::FormedSpace const &s)
{
  FieldPtr const &F = s.field;
  std::size_t n = s.dim, m = s.m;
  std::vector<Fq> basis = F->prime_basis();
  std::vector<MatFq> gens;

  // y_{i,j}(l): f_i -> f_i + l e_j, f_j -> f_j + c(l) e_i
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (Fq l : basis) {
        Elementary g(F, n);
        g.add(s.f(i), s.e(j), l);
        Fq c = 0;
        switch (family) {
        case ConstructionFamily::unitary: c = F->neg(s.conj(l)); break;
        case ConstructionFamily::symplectic: c = l; break;
        default: c = F->neg(l); break;
        }
        g.add(s.f(j), s.e(i), c);
        gens.push_back(g.m);
      }

  // z_k(l)
  std::vector<Fq> zvals;
  if (family == ConstructionFamily::unitary) {
    std::vector<Fq> trace_zero;
    for (Fq x = 0; x < F->q(); ++x)
      if (F->add(x, s.conj(x)) == 0)
        trace_zero.push_back(x);
    zvals = additive_basis(*F, trace_zero);
  } else if (family != ConstructionFamily::plus_orthogonal) {
    zvals = basis;
  }
  for (std::size_t k = 1; k <= m; ++k)
    for (Fq l : zvals) {
      Elementary g(F, n);
      if (family == ConstructionFamily::odd_orthogonal) {
        // f_k -> f_k + l d - l^2 e_k, d -> d - 2l e_k
        g.add(s.f(k), s.d(), l);
        g.add(s.f(k), s.e(k), F->neg(F->mul(l, l)));
        g.add(s.d(), s.e(k), F->neg(F->add(l, l)));
      } else {
        g.add(s.f(k), s.e(k), l);
      }
      gens.push_back(g.m);
    }
  return gens;
}

// Singer cycle A of GL_m on the e-block, the form-compatible inverse
// transpose on the f-block, identity on d.
MatFq levi_singer(ConstructionFamily family, gfmat::FormedSpace const &s)
{
  FieldPtr const &F = s.field;
  MatFq a = gfmat::singer_matrix(F, s.m);
  MatFq b = a.inverse().transpose();
  if (family == ConstructionFamily::unitary)
    b = b.frobenius(F->f() / 2);
  MatFq g = MatFq::identity(F, s.dim);
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.m; ++j) {
      g.set(s.e(i + 1), s.e(j + 1), a.at(i, j));
      g.set(s.f(i + 1), s.f(j + 1), b.at(i, j));
    }
  return g;
}

std::vector<Vec> basis_seeds(gfmat::FormedSpace const &s)
{
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < s.dim; ++i)
    seeds.push_back(s.basis_vector(i));
  return seeds;
}

BigInt group_order(std::vector<MatFq> const &gens, gfmat::FormedSpace const &s)
{
  return gfmat::mat_to_perm(gens, basis_seeds(s)).group.order();
}

Fq quad_value(gfmat::Field const &F, MatFq const &u, Vec const &v)
{
  Vec w = gfmat::vec_mul(v, u);
  Fq acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    acc = F.add(acc, F.mul(w[i], v[i]));
  return acc;
}

MatFq act_on_form(MatFq const &g, MatFq const &u) { return gfmat::reduce_quadratic(g * u * g.transpose()); }

struct VecHash {
  std::size_t operator()(Vec const &v) const
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Fq x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

ConstructionSpec build_construction(ConstructionFamily family, std::size_t m, std::uint64_t q)
{
  auto [p, f] = gfmat::prime_power(q);
  if (p == 0)
    throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  switch (family) {
  case ConstructionFamily::unitary:
    if (m < 2)
      throw PreconditionError("unitary construction needs 2m >= 4");
    break;
  case ConstructionFamily::symplectic:
    if (p != 2 || m < 2)
      throw PreconditionError("symplectic construction needs q even and 2m >= 4");
    break;
  case ConstructionFamily::odd_orthogonal:
    if (p == 2 || m < 2)
      throw PreconditionError("odd-orthogonal construction needs q odd and 2m+1 >= 5");
    break;
  case ConstructionFamily::plus_orthogonal:
    if (m < 3)
      throw PreconditionError("plus-orthogonal construction needs 2m >= 6");
    break;
  }

  ConstructionSpec spec;
  spec.family = family;
  spec.m = m;
  spec.q = q;
  std::size_t dim = family == ConstructionFamily::odd_orthogonal ? 2 * m + 1 : 2 * m;

  std::uint64_t n2 = 2 * m;
  switch (family) {
  case ConstructionFamily::unitary:
    spec.g_order = gfmat::classical_order(Family::GU, n2, q);
    spec.k_order = gfmat::classical_order(Family::GU, n2 - 1, q);
    spec.expected_r_order = qp(q, m * m);
    spec.expected_h_order = spec.expected_r_order * (qp(q, 2 * m) - 1);
    spec.expected_intersection = qp(q, (m - 1) * (m - 1));
    break;
  case ConstructionFamily::symplectic:
    spec.g_order = gfmat::classical_order(Family::Sp, n2, q);
    spec.k_order = gfmat::classical_order(Family::GOminus, n2, q);
    spec.expected_r_order = qp(q, m * (m + 1) / 2);
    spec.expected_h_order = spec.expected_r_order * (qp(q, m) - 1);
    spec.expected_intersection = 2 * qp(q, m * (m - 1) / 2);
    break;
  case ConstructionFamily::odd_orthogonal:
    // SO_{2m+1}(q) and SO^-_{2m}(q) are both of index 2 in GO.
    spec.g_order = gfmat::classical_order(Family::GOodd, n2 + 1, q) / 2;
    spec.k_order = gfmat::classical_order(Family::GOminus, n2, q) / 2;
    spec.expected_r_order = qp(q, m * (m - 1) / 2) * qp(q, m);
    spec.expected_h_order = spec.expected_r_order * (qp(q, m) - 1);
    spec.expected_intersection = qp(q, m * (m - 1) / 2);
    break;
  case ConstructionFamily::plus_orthogonal:
    // Omega orders: in even characteristic the vector stabilizer in GO
    // contains the reflection in the target, which Omega does not.
    spec.g_order = gfmat::classical_order(Family::OmegaPlus, n2, q);
    spec.k_order = gfmat::classical_order(Family::OmegaOdd, n2 - 1, q);
    spec.expected_r_order = qp(q, m * (m - 1) / 2);
    spec.expected_h_order = spec.expected_r_order * (qp(q, m) - 1);
    spec.expected_intersection = qp(q, (m - 1) * (m - 2) / 2);
    break;
  }
  spec.expected_index = spec.g_order / spec.k_order;
  if (spec.expected_index > kIndexBound)
    throw BoundError("construction " + to_string(family) + " m=" + std::to_string(m) +
                     " q=" + std::to_string(q) + ": index " + spec.expected_index.get_str() +
                     " exceeds " + std::to_string(kIndexBound));

  spec.space = gfmat::make_formed_space(kind_of(family), dim, q);
  auto const &s = spec.space;
  spec.r_generators = radical_generators(family, s);
  spec.singer = levi_singer(family, s);
  spec.h_generators = spec.r_generators;
  spec.h_generators.push_back(spec.singer);

  for (auto const &g : spec.h_generators)
    if (!gfmat::preserves_form(s, g))
      throw InvariantError("construction generator does not preserve the form");

  switch (family) {
  case ConstructionFamily::unitary:
  case ConstructionFamily::odd_orthogonal: {
    Vec v = s.basis_vector(s.e(m));
    v[s.f(m)] = s.mu;
    spec.target_vector = v;
    break;
  }
  case ConstructionFamily::plus_orthogonal: {
    Vec v = s.basis_vector(s.e(m));
    v[s.f(m)] = s.field->one();
    spec.target_vector = v;
    break;
  }
  case ConstructionFamily::symplectic: {
    auto minus = gfmat::make_formed_space(FormKind::quadratic_minus, dim, q);
    spec.target_form = *minus.quad;
    if (!(*minus.quad + minus.quad->transpose() == s.gram))
      throw InvariantError("minus-type form does not polarize to the symplectic form");
    break;
  }
  }

  spec.r_order = group_order(spec.r_generators, s);
  spec.h_order = group_order(spec.h_generators, s);
  if (spec.r_order != spec.expected_r_order)
    throw InvariantError("|R| = " + spec.r_order.get_str() + ", expected " +
                         spec.expected_r_order.get_str());
  if (spec.h_order != spec.expected_h_order)
    throw InvariantError("|H| = " + spec.h_order.get_str() + ", expected " +
                         spec.expected_h_order.get_str());
  return spec;
}

ConstructionReport verify_construction(ConstructionSpec const &spec)
{
  ConstructionReport rep;
  rep.family = spec.family;
  rep.m = spec.m;
  rep.q = spec.q;
  rep.h_order = spec.h_order;
  rep.expected_index = spec.expected_index;
  rep.expected_intersection = spec.expected_intersection;

  std::uint64_t limit = 2 * to_u64(spec.expected_index);
  std::unordered_set<Vec, VecHash> seen;
  std::vector<Vec> queue;
  auto push = [&](Vec v) {
    if (seen.insert(v).second) {
      queue.push_back(std::move(v));
      if (queue.size() > limit)
        throw InvariantError("orbit exceeds twice the expected index");
    }
  };
  if (spec.target_vector) {
    push(*spec.target_vector);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto const &g : spec.h_generators)
        push(gfmat::vec_mul(queue[i], g));
  } else {
    std::size_t n = spec.space.dim;
    auto to_mat = [&](Vec const &d) {
      MatFq u(spec.space.field, n, n);
      for (std::size_t i = 0; i < n * n; ++i)
        u.set(i / n, i % n, d[i]);
      return u;
    };
    push(spec.target_form->data());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      MatFq u = to_mat(queue[i]);
      for (auto const &g : spec.h_generators)
        push(act_on_form(g, u).data());
    }
  }

  rep.orbit_size = static_cast<unsigned long>(queue.size());
  rep.stabilizer_order = spec.h_order / rep.orbit_size;

  auto perm = gfmat::mat_to_perm(spec.h_generators, basis_seeds(spec.space));
  // Seeding with H's points keeps the numbering: the set is R-invariant.
  auto rgroup = gfmat::mat_to_perm(spec.r_generators, perm.points).group;
  rep.h_solvable = permcore::is_solvable(perm.group);
  rep.r_normal = permcore::is_normal(rgroup, perm.group);
  rep.lemma_c = rep.stabilizer_order * spec.g_order == spec.h_order * spec.k_order;
  rep.witt_count = witt_count(spec);

  rep.pass = rep.orbit_size == spec.expected_index &&
             rep.stabilizer_order == spec.expected_intersection && rep.h_solvable &&
             rep.r_normal && rep.lemma_c &&
             (!rep.witt_count || *rep.witt_count == spec.expected_index);
  return rep;
}

std::optional<BigInt> witt_count(ConstructionSpec const &spec, std::uint64_t limit)
{
  auto const &s = spec.space;
  gfmat::Field const &F = *s.field;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim; ++i) {
    total *= F.q();
    if (total > limit)
      return std::nullopt;
  }

  if (spec.target_vector) {
    Vec const &t = *spec.target_vector;
    bool hermitian = s.kind == FormKind::unitary;
    Fq norm = hermitian ? gfmat::eval_form(s, t, t) : gfmat::eval_quadratic(s, t);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Vec v = gfmat::vec_from_index(F, s.dim, idx);
      Fq nv = hermitian ? gfmat::eval_form(s, v, v) : gfmat::eval_quadratic(s, v);
      count += nv == norm;
    }
    return big(count);
  }

  // Quadratic forms polarizing to the symplectic form are Q0 + l^2 for a
  // linear functional l; a form is of minus type iff it has
  // q^{2m-1} - q^m + q^{m-1} zeros (0 included).
  std::uint64_t q = spec.q, m = spec.m;
  BigInt minus_zeros = qp(q, 2 * m - 1) - qp(q, m) + qp(q, m - 1);
  MatFq const &q0 = *spec.target_form;
  std::vector<Vec> vecs;
  std::vector<Fq> q0vals;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec v = gfmat::vec_from_index(F, s.dim, idx);
    q0vals.push_back(quad_value(F, q0, v));
    vecs.push_back(std::move(v));
  }
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    Vec const &l = vecs[a];
    std::uint64_t zeros = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Fq lv = 0;
      for (std::size_t i = 0; i < s.dim; ++i)
        lv = F.add(lv, F.mul(l[i], vecs[idx][i]));
      zeros += F.add(q0vals[idx], F.mul(lv, lv)) == 0;
    }
    count += big(zeros) == minus_zeros;
  }
  return big(count);
}

std::vector<BatteryEntry> default_battery()
{
  using CF = ConstructionFamily;
  return {
    {CF::unitary, 2, 2},        {CF::unitary, 2, 3},
    {CF::symplectic, 2, 2},     {CF::symplectic, 2, 4},     {CF::symplectic, 3, 2},
    {CF::odd_orthogonal, 2, 3}, {CF::odd_orthogonal, 3, 3},
    {CF::plus_orthogonal, 3, 2}, {CF::plus_orthogonal, 3, 3},
  };
}

std::vector<BatteryResult> run_battery(std::vector<BatteryEntry> const &entries, unsigned threads)
{
  std::vector<BatteryResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      auto const &e = entries[i];
      results[i].entry = e;
      try {
        results[i].report = verify_construction(build_construction(e.family, e.m, e.q));
      } catch (std::exception const &ex) {
        results[i].error = ex.what();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return results;
}

}  // namespace groupfact::constructions
