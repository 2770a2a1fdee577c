#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "groupfact/constructions/constructions.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/gfmat/matgroup.hpp"

using namespace groupfact;
using namespace groupfact::constructions;
using CF = ConstructionFamily;

TEST_CASE("family names")
{
  for (auto f : {CF::unitary, CF::symplectic, CF::odd_orthogonal, CF::plus_orthogonal})
    CHECK(parse_construction_family(to_string(f)) == f);
  CHECK_THROWS_AS(parse_construction_family("minus"), PreconditionError);
}

TEST_CASE("parameter constraints")
{
  CHECK_THROWS_AS(build_construction(CF::symplectic, 2, 3), PreconditionError);
  CHECK_THROWS_AS(build_construction(CF::odd_orthogonal, 2, 4), PreconditionError);
  CHECK_THROWS_AS(build_construction(CF::plus_orthogonal, 2, 3), PreconditionError);
  CHECK_THROWS_AS(build_construction(CF::unitary, 1, 3), PreconditionError);
  CHECK_THROWS_AS(build_construction(CF::unitary, 2, 6), PreconditionError);
  CHECK_THROWS_AS(build_construction(CF::unitary, 4, 7), BoundError);
}

TEST_CASE("unitary m=2 q=2")
{
  auto spec = build_construction(CF::unitary, 2, 2);
  CHECK(spec.h_order == 240);
  CHECK(spec.r_order == 16);
  CHECK(spec.expected_index == 120);
  CHECK(spec.expected_intersection == 2);
  for (auto const &g : spec.h_generators)
    CHECK(gfmat::preserves_form(spec.space, g));
  auto rep = verify_construction(spec);
  CHECK(rep.orbit_size == 120);
  CHECK(rep.stabilizer_order == 2);
  REQUIRE(rep.witt_count);
  CHECK(*rep.witt_count == 120);
  CHECK(rep.h_solvable);
  CHECK(rep.r_normal);
  CHECK(rep.lemma_c);
  CHECK(rep.pass);
}

TEST_CASE("unitary m=2 q=3")
{
  auto rep = verify_construction(build_construction(CF::unitary, 2, 3));
  CHECK(rep.stabilizer_order == 3);
  CHECK(rep.pass);
}

TEST_CASE("symplectic m=2 q=2")
{
  auto spec = build_construction(CF::symplectic, 2, 2);
  CHECK(spec.h_order == 24);
  CHECK(spec.expected_intersection == 4);
  auto rep = verify_construction(spec);
  CHECK(rep.orbit_size == 6);
  CHECK(rep.stabilizer_order == 4);
  REQUIRE(rep.witt_count);
  CHECK(*rep.witt_count == 6);
  CHECK(rep.pass);
}

TEST_CASE("symplectic m=3 q=2")
{
  auto rep = verify_construction(build_construction(CF::symplectic, 3, 2));
  CHECK(rep.orbit_size == 28);
  CHECK(rep.stabilizer_order == 16);
  CHECK(rep.pass);
}

TEST_CASE("plus-orthogonal m=3 q=3")
{
  auto spec = build_construction(CF::plus_orthogonal, 3, 3);
  CHECK(spec.expected_intersection == 3);
  auto rep = verify_construction(spec);
  CHECK(rep.orbit_size == 234);
  CHECK(rep.pass);
}

TEST_CASE("Singer cycle is regular on the e-span")
{
  for (auto [f, m, q] : {std::tuple{CF::unitary, 2u, 3u}, std::tuple{CF::symplectic, 3u, 2u},
                         std::tuple{CF::odd_orthogonal, 2u, 3u}}) {
    auto spec = build_construction(f, m, q);
    auto const &s = spec.space;
    gfmat::Vec v = s.basis_vector(s.e(1));
    std::set<gfmat::Vec> orbit;
    gfmat::Vec w = v;
    do {
      orbit.insert(w);
      for (std::size_t i = s.m; i < s.dim; ++i)
        CHECK(w[i] == 0);
      w = gfmat::vec_mul(w, spec.singer);
    } while (w != v);
    std::uint64_t field_q = s.field->q();
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < m; ++i)
      expect *= field_q;
    CHECK(orbit.size() == expect - 1);
  }
}

TEST_CASE("default battery")
{
  auto results = run_battery(default_battery(), 4);
  REQUIRE(results.size() == 9);
  for (auto const &r : results) {
    INFO(to_string(r.entry.family) << " m=" << r.entry.m << " q=" << r.entry.q << " " << r.error);
    REQUIRE(r.report);
    CHECK(r.report->pass);
    CHECK(r.report->orbit_size == r.report->expected_index);
    CHECK(r.report->stabilizer_order * r.report->orbit_size == r.report->h_order);
  }
}
