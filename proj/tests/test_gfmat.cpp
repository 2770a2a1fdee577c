#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "groupfact/errors.hpp"
#include "groupfact/gfmat/matgroup.hpp"

using namespace groupfact;
using namespace groupfact::gfmat;

namespace {

// Schoolbook product of two codes modulo the field's modulus.
Fq naive_mul(Field const &F, Fq a, Fq b)
{
  auto ca = F.coefficients(a), cb = F.coefficients(b);
  std::uint32_t p = F.p(), f = F.f();
  std::vector<std::uint32_t> prod(2 * f, 0);
  for (std::uint32_t i = 0; i < f; ++i)
    for (std::uint32_t j = 0; j < f; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  auto const &g = F.modulus();
  for (std::uint32_t k = 2 * f - 1; k >= f; --k) {
    std::uint32_t c = prod[k];
    for (std::uint32_t i = 0; i <= f; ++i)
      prod[k - f + i] = (prod[k - f + i] + (p - c) * g[i]) % p;
  }
  Fq r = 0;
  for (std::uint32_t k = f; k-- > 0;)
    r = r * p + prod[k];
  return r;
}

Vec random_vec(Field const &F, std::size_t n, std::mt19937_64 &rng)
{
  Vec v(n);
  for (auto &x : v)
    x = static_cast<Fq>(rng() % F.q());
  return v;
}

// Element count of a matrix group by closure.
std::size_t brute_matrix_order(std::vector<MatFq> const &gens)
{
  std::set<std::vector<Fq>> seen;
  std::vector<MatFq> list{MatFq::identity(gens[0].field(), gens[0].rows())};
  seen.insert(list[0].data());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto const &g : gens) {
      MatFq y = list[i] * g;
      if (seen.insert(y.data()).second)
        list.push_back(y);
    }
  return list.size();
}

}  // namespace

TEST_CASE("field arithmetic")
{
  auto f4 = Field::make(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);  // x*x = x+1
  auto f16 = Field::of_order(16);
  for (Fq a = 1; a < 16; ++a)
    CHECK(f16->mul(a, f16->inv(a)) == 1);
  auto f9 = Field::of_order(9);
  for (Fq a = 0; a < 9; ++a)
    CHECK(f9->frobenius(f9->frobenius(a)) == a);
  CHECK_THROWS_AS(f9->inv(0), PreconditionError);
  CHECK_THROWS_AS(Field::of_order(6), PreconditionError);

  FqElem x{f4, 2};
  CHECK(field_arith(x, x, FieldOp::mul).code == 3);
  CHECK(field_arith(x, x, FieldOp::add).code == 0);
}

TEST_CASE("field products match polynomial reduction")
{
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u}) {
    auto F = Field::of_order(q);
    for (Fq a = 0; a < q; ++a)
      for (Fq b = 0; b < q; ++b)
        REQUIRE(F->mul(a, b) == naive_mul(*F, a, b));
    // primitive element has full order
    std::set<Fq> powers;
    for (std::uint64_t i = 0; i + 1 < q; ++i)
      powers.insert(F->exp(i));
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("primitive moduli are the smallest")
{
  auto f2 = Field::make(2, 1);
  CHECK(primitive_polynomial(*f2, 3) == Poly{1, 0, 1, 1});  // x^3 + x^2 + 1
  CHECK(primitive_polynomial(*f2, 4) == Poly{1, 0, 0, 1, 1});
  auto f3 = Field::make(3, 1);
  CHECK(primitive_polynomial(*f3, 2) == Poly{2, 1, 1});  // x^2 + x + 2
  CHECK_FALSE(is_primitive_polynomial(*f2, Poly{1, 0, 1}));
}

TEST_CASE("classical orders")
{
  CHECK(classical_order(Family::PSL, 2, 7) == 168);
  CHECK(classical_order(Family::Sp, 4, 2) == 720);
  CHECK(classical_order(Family::PSL, 2, 9) == 360);
  CHECK(classical_order(Family::GU, 3, 2) == 648);
  CHECK(classical_order(Family::GOminus, 4, 2) == 120);
  CHECK(classical_order(Family::PSU, 3, 5) == 126000);
  CHECK(classical_order(Family::PSp, 4, 3) == 25920);
  CHECK(classical_order(Family::PSU, 4, 2) == 25920);
  CHECK(classical_order(Family::Sp, 6, 2) == 1451520);
  CHECK(classical_order(Family::PSL, 3, 4) == 20160);
  CHECK(classical_order(Family::PSL, 4, 2) == 20160);
  CHECK(classical_order(Family::POmegaPlus, 8, 2) == BigInt("174182400"));
  CHECK(classical_order(Family::OmegaOdd, 7, 3) == BigInt("4585351680"));
  CHECK_THROWS_AS(classical_order(Family::Sp, 3, 2), PreconditionError);
  CHECK_THROWS_AS(classical_order(Family::PSL, 2, 6), PreconditionError);
  CHECK(parse_family("POmegaMinus") == Family::POmegaMinus);
}

TEST_CASE("outer automorphism orders")
{
  CHECK(out_order(Family::PSL, 2, 9) == 4);
  CHECK(out_order(Family::PSp, 4, 8) == 6);
  CHECK(out_order(Family::PSp, 4, 2 * 2) == 4);
  CHECK(out_order(Family::POmegaPlus, 8, 3) == 24);
  CHECK(out_order(Family::PSL, 3, 4) == 12);
  CHECK(out_order(Family::PSU, 3, 5) == 6);
  CHECK_THROWS_AS(out_order(Family::PSL, 2, 3), PreconditionError);
}

TEST_CASE("forms on the standard basis")
{
  auto sp = make_formed_space(FormKind::symplectic, 4, 2);
  CHECK(eval_form(sp, sp.basis_vector(sp.e(1)), sp.basis_vector(sp.f(1))) == 1);
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    auto v = vec_from_index(*sp.field, 4, idx);
    CHECK(eval_form(sp, v, v) == 0);
  }
  CHECK_THROWS_AS(eval_quadratic(sp, sp.basis_vector(0)), PreconditionError);

  auto mn = make_formed_space(FormKind::quadratic_minus, 4, 2);
  CHECK(eval_quadratic(mn, mn.basis_vector(mn.e(2))) == 1);
  CHECK(eval_quadratic(mn, mn.basis_vector(mn.f(2))) == mn.sigma);
  CHECK(mn.sigma == 1);
  CHECK(make_formed_space(FormKind::quadratic_minus, 4, 4).sigma == 2);

  auto un = make_formed_space(FormKind::unitary, 4, 2);
  CHECK(un.mu == 2);
  CHECK(un.field->q() == 4);
  CHECK(make_formed_space(FormKind::unitary, 4, 3).mu == 1);
  auto od = make_formed_space(FormKind::quadratic_odd, 5, 3);
  CHECK(od.mu == 2);
  CHECK(eval_quadratic(od, od.basis_vector(od.d())) == 1);
}

TEST_CASE("quadratic forms polarize to the bilinear form")
{
  std::mt19937_64 rng(5);
  for (auto kind : {FormKind::quadratic_plus, FormKind::quadratic_minus}) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
      auto s = make_formed_space(kind, 6, q);
      Field const &F = *s.field;
      for (int t = 0; t < 50; ++t) {
        auto u = random_vec(F, 6, rng), v = random_vec(F, 6, rng);
        CHECK(eval_quadratic(s, vec_add(F, u, v)) ==
              F.add(F.add(eval_quadratic(s, u), eval_quadratic(s, v)), eval_form(s, u, v)));
      }
    }
  }
  auto s = make_formed_space(FormKind::quadratic_odd, 5, 5);
  Field const &F = *s.field;
  for (int t = 0; t < 50; ++t) {
    auto u = random_vec(F, 5, rng), v = random_vec(F, 5, rng);
    CHECK(eval_quadratic(s, vec_add(F, u, v)) ==
          F.add(F.add(eval_quadratic(s, u), eval_quadratic(s, v)), eval_form(s, u, v)));
  }
}

TEST_CASE("Singer matrices")
{
  auto f2 = Field::make(2, 1);
  auto s22 = singer_matrix(f2, 2);
  CHECK(matrix_order_dividing(s22, 3) == 3);
  auto res = mat_to_perm({s22}, {Vec{1, 0}});
  CHECK(res.group.degree() == 3);
  CHECK(res.group.order() == 3);
  CHECK(matrix_order_dividing(singer_matrix(f2, 3), 7) == 7);
  auto f3 = Field::make(3, 1);
  CHECK(matrix_order_dividing(singer_matrix(f3, 2), 8) == 8);
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::size_t>>{{4, 2}, {3, 3}, {9, 2}, {2, 5}}) {
    auto F = Field::of_order(q);
    auto s = singer_matrix(F, m);
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < m; ++i)
      n *= q;
    CHECK(matrix_order_dividing(s, n - 1) == n - 1);
    Vec e(m, 0);
    e[0] = 1;
    CHECK(mat_to_perm({s}, {e}).points.size() == n - 1);
  }
}

TEST_CASE("mat_to_perm")
{
  auto F = Field::of_order(3);
  auto id = MatFq::identity(F, 2);
  auto r = mat_to_perm({id}, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}});
  CHECK(r.group.degree() == 3);
  CHECK(r.group.order() == 1);
  CHECK_THROWS_AS(mat_to_perm(sl_generators(Field::of_order(5), 4), {Vec{1, 0, 0, 0}}, 100),
                  BoundError);
}

TEST_CASE("matrix group orders agree with element counting")
{
  struct Case {
    std::vector<MatFq> gens;
  };
  std::vector<std::vector<MatFq>> cases{
      sl_generators(Field::of_order(2), 3),
      sl_generators(Field::of_order(3), 2),
      sl_generators(Field::of_order(4), 2),
      {singer_matrix(Field::of_order(3), 2), MatFq::from_rows(Field::of_order(3), {{1, 1}, {0, 1}})},
  };
  for (auto const &gens : cases) {
    std::size_t n = gens[0].rows();
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      seeds.push_back(e);
    }
    auto res = mat_to_perm(gens, seeds);
    CHECK(res.group.order() == static_cast<unsigned long>(brute_matrix_order(gens)));
  }
}

TEST_CASE("projective special linear groups")
{
  CHECK(psl_on_points(2, 9).order() == 360);
  CHECK(psl_on_points(2, 8).order() == 504);
  CHECK(psl_on_points(2, 7).order() == 168);
  CHECK(psl_on_points(3, 3).order() == 5616);
  CHECK(psl_on_points(3, 4).order() == 20160);
  CHECK(psl_on_points(3, 4).degree() == 21);
  CHECK(pgl_on_points(2, 7).order() == 336);
  CHECK(pgl_on_points(2, 9).order() == 720);
}

TEST_CASE("isometry group generators are certified")
{
  struct Case {
    FormKind kind;
    std::size_t dim;
    std::uint64_t q;
    long order;
  };
  std::vector<Case> cases{
      {FormKind::symplectic, 4, 2, 720},
      {FormKind::unitary, 3, 2, 648},
      {FormKind::quadratic_minus, 4, 2, 120},
      {FormKind::symplectic, 2, 3, 24},
      {FormKind::symplectic, 4, 3, 51840},
      {FormKind::unitary, 2, 3, 96},
      {FormKind::quadratic_plus, 4, 3, 1152},
      {FormKind::quadratic_minus, 4, 3, 1440},
      {FormKind::quadratic_odd, 3, 3, 48},
      {FormKind::quadratic_odd, 5, 3, 103680},
      {FormKind::quadratic_plus, 6, 2, 40320},
      {FormKind::symplectic, 6, 2, 1451520},
  };
  std::mt19937_64 rng(9);
  for (auto const &c : cases) {
    auto s = make_formed_space(c.kind, c.dim, c.q);
    CHECK(classical_order(isometry_family(c.kind), c.dim, c.q) == c.order);
    auto gens = form_stabilizer_generators(s);
    REQUIRE(!gens.empty());
    Field const &F = *s.field;
    for (auto const &g : gens) {
      CHECK(preserves_form(s, g));
      for (int t = 0; t < 10; ++t) {
        auto u = random_vec(F, c.dim, rng), v = random_vec(F, c.dim, rng);
        CHECK(eval_form(s, vec_mul(u, g), vec_mul(v, g)) == eval_form(s, u, v));
        if (s.quad)
          CHECK(eval_quadratic(s, vec_mul(v, g)) == eval_quadratic(s, v));
      }
    }
  }
}

TEST_CASE(".mgp parsing")
{
  auto ok = parse_mgp("mat 2 2 2\n# Singer\n0 1\n1 1\n\n1 1\n0 1\n");
  CHECK(ok.field->q() == 4);
  CHECK(ok.generators.size() == 2);
  try {
    parse_mgp("mat 2 1 2\n1 0\n0 1 1\n");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line == 3);
  }
  try {
    parse_mgp("mat 3 1 2\n1 0\n2 0\n");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_mgp("perm 3\n"), ParseError);
  CHECK_THROWS_AS(parse_mgp("mat 2 1 2\n1 0\n"), ParseError);
}
