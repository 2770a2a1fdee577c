#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/gfmat/matgroup.hpp"
#include "groupfact/permcore/named_groups.hpp"

using namespace groupfact;
using namespace groupfact::factorlab;
using namespace groupfact::permcore;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c)
{
  return Permutation::from_cycles(n, c);
}

PermGroup grp(std::size_t n, std::vector<std::vector<std::vector<Point>>> gens)
{
  std::vector<Permutation> ps;
  for (auto const &c : gens)
    ps.push_back(cyc(n, c));
  return PermGroup(n, ps);
}

// Representative of a class with the given order and solvability.
PermGroup class_rep(SubgroupList const &list, std::size_t order, bool solvable)
{
  for (auto const &c : list.classes)
    if (c.order == order && c.solvable == solvable)
      return c.rep;
  FAIL("no class of order " << order);
  return {};
}

using Sig = std::tuple<long, long, long>;

std::multiset<Sig> sigs(std::vector<FactorizationRecord> const &recs, bool unordered = false)
{
  std::multiset<Sig> out;
  for (auto const &r : recs) {
    long h = r.h_order.get_si(), k = r.k_order.get_si(), hk = r.hk_order.get_si();
    if (unordered && h > k)
      std::swap(h, k);
    for (std::size_t i = 0; i < r.multiplicity; ++i)
      out.insert({h, k, hk});
  }
  return out;
}

bool has(std::vector<FactorizationRecord> const &recs, long h, long k, long hk)
{
  return sigs(recs).count({h, k, hk}) > 0;
}

PermGroup s4() { return symmetric_group(4); }
PermGroup d8() { return grp(4, {{{0, 1, 2, 3}}, {{0, 2}}}); }

}  // namespace

TEST_CASE("verify_factorization examples")
{
  PermGroup g = psl2_prime(11);
  auto list = enumerate_subgroups(g, EnumMode::exhaustive);
  auto r = verify_factorization(g, class_rep(list, 55, true), class_rep(list, 60, false), "PSL2(11)");
  CHECK(r.is_factorization);
  CHECK(r.hk_order == 5);
  CHECK(r.h_solvable);
  CHECK_FALSE(r.k_solvable);
  CHECK(r.k_simple);
  CHECK(r.h_core_free);
  CHECK(r.k_core_free);
  CHECK(r.signature_line() == "660\t55\t60\t5\t1\t0\t1\t1");

  auto s = verify_factorization(s4(), d8(), alternating_group(4));
  CHECK(s.is_factorization);
  CHECK(s.hk_order == 4);
  CHECK_FALSE(s.h_core_free);  // D8 contains the normal V4
  CHECK_FALSE(s.k_core_free);

  PermGroup v4 = grp(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto f = verify_factorization(alternating_group(4), v4, v4);
  CHECK_FALSE(f.is_factorization);
  CHECK(f.orbit_size == 1);

  CHECK_THROWS_AS(verify_factorization(alternating_group(4), s4(), v4), PreconditionError);
}

TEST_CASE("factorization criteria agree")
{
  PermGroup g = s4();
  auto list = enumerate_subgroups(g, EnumMode::exhaustive);
  std::mt19937_64 rng(5);
  for (auto const &a : list.classes)
    for (auto const &b : list.classes) {
      Permutation x = g.chain().random_element(rng);
      auto r = factorization_criteria(g, a.rep, conjugate_group(b.rep, x));
      CHECK(r.agree());
      CHECK(r.hk_order == intersection_order(a.rep, conjugate_group(b.rep, x)));
    }
  auto r = factorization_criteria(g, d8(), alternating_group(4));
  CHECK(r.order_equation);
  CHECK(r.hk_order == 4);
}

TEST_CASE("divisibility audit")
{
  PermGroup c3 = grp(4, {{{0, 1, 2}}});
  auto a = divisibility_audit(s4(), alternating_group(4), d8(), c3);
  CHECK(a.hl_order == 4);
  CHECK(a.kl_order == 3);
  CHECK(a.all());
  CHECK_THROWS_AS(divisibility_audit(s4(), d8(), d8(), c3), PreconditionError);

  // A non-factorizing pair may violate (a).
  PermGroup c2 = grp(4, {{{0, 1}}});
  auto b = divisibility_audit(s4(), s4(), c2, c3);
  CHECK_FALSE(b.a);
}

TEST_CASE("descend_factorization")
{
  PermGroup c3 = grp(4, {{{0, 1, 2}}});
  auto r = descend_factorization(s4(), d8(), c3, d8());
  CHECK(r.is_factorization);
  CHECK(r.g_order == 8);
  CHECK(r.k_order == 1);
  CHECK(r.provenance == Provenance::derived);

  auto same = descend_factorization(s4(), d8(), c3, s4());
  CHECK(same.g_order == 24);
  CHECK(same.h_order == 8);
  CHECK(same.k_order == 3);

  PermGroup s3 = grp(4, {{{0, 1, 2}}, {{0, 1}}});
  PermGroup v4 = grp(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  CHECK(verify_factorization(s4(), s3, v4).is_factorization);
  CHECK_THROWS_AS(descend_factorization(s4(), s3, v4, alternating_group(4)), PreconditionError);
  PermGroup c2 = grp(4, {{{0, 2}}});
  CHECK_THROWS_AS(descend_factorization(s4(), d8(), c2, d8()), PreconditionError);
}

TEST_CASE("lift_factorization")
{
  PermGroup g = symmetric_group(5);
  PermGroup m = grp(5, {{{0, 1, 2, 3}}, {{0, 1}}});
  PermGroup f20 = grp(5, {{{0, 1, 2, 3, 4}}, {{1, 2, 4, 3}}});
  PermGroup s3 = grp(5, {{{0, 1, 2}}, {{0, 1}}});
  CHECK(intersect_subgroup(f20, m).order() == 4);
  CHECK(lift_factorization(g, m, f20, s3));
  CHECK(lift_factorization(g, m, f20, m));
  CHECK(lift_factorization(g, g, f20, s3));

  // Both sides false.
  PermGroup c4 = grp(4, {{{0, 1, 2, 3}}});
  PermGroup k = grp(4, {{{0, 1}, {2, 3}}});
  CHECK_FALSE(lift_factorization(s4(), d8(), k, c4));
  // M != H(K cap M).
  CHECK_THROWS_AS(lift_factorization(g, m, f20, grp(5, {{{0, 1, 2}}})), PreconditionError);
}

TEST_CASE("solvable-factor search examples")
{
  auto r7 = search_solvable_factorizations(psl2_prime(7), "PSL2(7)");
  CHECK(has(r7, 7, 24, 1));
  CHECK(has(r7, 21, 24, 3));
  for (auto const &r : r7)
    CHECK(r.group_id == "PSL2(7)");

  auto r11 = search_solvable_factorizations(psl2_prime(11), "PSL2(11)");
  CHECK(has(r11, 55, 12, 1));
  CHECK(has(r11, 11, 60, 1));
  CHECK(has(r11, 55, 60, 5));
  for (auto const &r : r11) {
    CHECK(r.h_solvable);
    CHECK(r.k_core_free);
    CHECK(BigInt(r.hk_order * r.g_order) == BigInt(r.h_order * r.k_order));
  }

  CHECK(search_solvable_factorizations(cyclic_group(6), "C6").empty());
}

TEST_CASE("both-solvable search examples")
{
  CHECK(two_solvable_search(alternating_group(4), "A4").empty());

  auto m11 = two_solvable_search(named_group("M11"), "M11");
  CHECK(sigs(m11, true) == std::multiset<Sig>{{55, 144, 1}, {55, 144, 1}});

  auto l33 = two_solvable_search(named_group("PSL3(3)"), "PSL3(3)");
  CHECK(has(l33, 13, 432, 1));
  CHECK(has(l33, 39, 432, 3));
  CHECK(has(l33, 39, 144, 1));
  for (auto const &r : l33) {
    CHECK(r.h_solvable);
    CHECK(r.k_solvable);
    CHECK(r.h_core_free);
    CHECK(r.k_core_free);
  }
}

TEST_CASE("every search record passes the divisibility audit")
{
  struct Case {
    PermGroup g, l;
    std::string name;
  };
  std::vector<Case> cases = {{pgl2_prime(7), psl2_prime(7), "PGL2(7)"},
                             {psl2_prime(11), psl2_prime(11), "PSL2(11)"},
                             {symmetric_group(5), alternating_group(5), "S5"}};
  for (auto const &c : cases) {
    // The named socle is a subgroup on the same points.
    PermGroup l = derived_subgroup(c.g);
    CHECK(l.order() == c.l.order());
    auto recs = search_solvable_factorizations(c.g, c.name);
    CHECK_FALSE(recs.empty());
    for (auto const &r : recs) {
      auto a = divisibility_audit(c.g, l, r.h, r.k);
      CHECK(a.all());
      CHECK(verify_factorization(c.g, r.h, r.k).is_factorization);
    }
  }
}

TEST_CASE("search results are conjugation invariant")
{
  std::mt19937_64 rng(11);
  for (PermGroup g : {psl2_prime(7), symmetric_group(5), pgl2_prime(7)}) {
    std::vector<Point> img(g.degree());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = static_cast<Point>(i);
    std::shuffle(img.begin(), img.end(), rng);
    PermGroup h = conjugate_group(g, Permutation(img));
    CHECK(sigs(search_solvable_factorizations(g, "G")) ==
          sigs(search_solvable_factorizations(h, "G")));
    CHECK(sigs(two_solvable_search(g, "G")) == sigs(two_solvable_search(h, "G")));
  }
}

TEST_CASE("both-solvable records of PSL2(q) fit the generic family")
{
  // A5 is PSL2(4) and PSL2(5); either parameter may describe a record.
  // For q = 1 mod 4 the involutions fix points and no pair factorizes L.
  struct Case {
    PermGroup g;
    std::vector<long> qs;
    bool nonempty;
  };
  std::vector<Case> cases = {{psl2_prime(5), {4, 5}, true},
                             {gfmat::psl_on_points(2, 8), {8}, true},
                             {gfmat::psl_on_points(2, 9), {9}, false},
                             {psl2_prime(13), {13}, false}};
  for (auto const &c : cases) {
    auto recs = two_solvable_search(c.g, "L");
    CHECK(recs.empty() == !c.nonempty);
    for (auto const &r : recs) {
      auto fits = [&](long q, long h, long k) {
        long d = q % 2 == 0 ? 1 : 2;
        return (2 * (q + 1) / d) % h == 0 && k % q == 0 && (q * (q - 1) / d) % k == 0;
      };
      long h = r.h_order.get_si(), k = r.k_order.get_si();
      bool ok = false;
      for (long q : c.qs)
        ok = ok || fits(q, h, k) || fits(q, k, h);
      CHECK_MESSAGE(ok, "q=" << c.qs.back() << " " << h << "," << k);
    }
  }
}

TEST_CASE("lattice helpers")
{
  auto l7 = enumerate_subgroups(psl2_prime(7), EnumMode::exhaustive);
  std::multiset<std::size_t> orders;
  for (auto i : core_free_maximal_subgroups(l7))
    orders.insert(l7.classes[i].order);
  CHECK(orders == std::multiset<std::size_t>{21, 24, 24});

  auto ls4 = enumerate_subgroups(s4(), EnumMode::exhaustive);
  orders.clear();
  for (auto i : maximal_subgroup_classes(ls4))
    orders.insert(ls4.classes[i].order);
  CHECK(orders == std::multiset<std::size_t>{6, 8, 12});
  CHECK(core_free_maximal_subgroups(ls4).size() == 1);  // S3; D8 contains V4

  PermGroup g = psl2_prime(11);
  auto l11 = enumerate_subgroups(g, EnumMode::exhaustive);
  std::set<std::size_t> cand;
  for (auto i : maximal_solvable_candidates(l11)) {
    CHECK(l11.classes[i].solvable);
    cand.insert(l11.classes[i].order);
  }
  CHECK(cand == std::set<std::size_t>{6, 10, 12, 55});

  auto msf = maximal_solvable_factorizations(l11, "PSL2(11)");
  CHECK(has(msf, 55, 60, 5));
  CHECK(has(msf, 55, 12, 1));
  auto all = sigs(search_solvable_factorizations(l11, "PSL2(11)"));
  for (auto const &s : sigs(msf))
    CHECK(all.count(s) > 0);

  PermGroup a5 = class_rep(l11, 60, false);
  auto in_a5 = maximal_solvable_factorizations_in(l11, a5, "PSL2(11)");
  CHECK(has(in_a5, 12, 55, 1));
  for (auto const &r : in_a5)
    CHECK(r.h_order < 60);

  CHECK_THROWS_AS(maximal_solvable_candidates(enumerate_subgroups(g, EnumMode::solvable_only)),
                  PreconditionError);
}

TEST_CASE("table dataset")
{
  auto rows = default_table_rows();
  std::set<std::string> tables;
  for (auto const &r : rows) {
    tables.insert(r.table_id);
    CHECK_FALSE(r.anchor.empty());
    if (r.mode == "skip")
      continue;
    BigInt n = named_group(r.group).order();
    for (auto const &h : r.h_orders)
      CHECK_MESSAGE(divides(h, n), r.table_id << " row " << r.row);
    for (auto const &k : r.k_orders)
      CHECK_MESSAGE(divides(k, n), r.table_id << " row " << r.row);
  }
  CHECK(tables == std::set<std::string>{"tab1", "tab2", "tab4", "tab8", "tab9"});

  CHECK_THROWS_AS(parse_table_rows("tab4\t1\tPSL2(7)\t7\t24\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_table_rows("tab4\t1\tPSL2(7)\t7,a\t24\t1\t1\t-\tsearch\tn\n", "x"),
                  ParseError);
  CHECK_THROWS_AS(parse_table_rows("tab4\t1\tPSL2(7)\t7\t24\t1\t1\t-\tguess\tn\n", "x"),
                  ParseError);
  auto ok = parse_table_rows("# c\ntab4\t1\tPSL2(7)\t7,21\t24\t1\t1\t-\tsearch\tnote\n", "x");
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].h_orders.size() == 2);
  CHECK_FALSE(ok[0].k_simple.has_value());
}

TEST_CASE("check_table")
{
  auto rows = default_table_rows();
  std::vector<TableRow> psl27;
  for (auto const &r : rows)
    if (r.table_id == "tab4" && r.group == "PSL2(7)")
      psl27.push_back(r);
  REQUIRE(psl27.size() == 1);
  auto recs = two_solvable_search(psl2_prime(7), "PSL2(7)");
  auto c = check_table("tab4", psl27, recs);
  CHECK(c.matched == 1);
  CHECK(c.expected == 1);
  CHECK(c.rows[0].status == "matched");
  CHECK_FALSE(c.extra.empty());  // the (21,8) family member and swaps

  auto empty = check_table("tab8", rows, {});
  CHECK(empty.matched == 0);
  CHECK(empty.expected == 2);
  for (auto const &st : empty.rows)
    CHECK(st.status == "missing");

  auto t8 = run_table("tab8", rows);
  CHECK(t8.matched == 2);
  CHECK(t8.expected == 2);
}

TEST_CASE("named groups")
{
  CHECK(named_group("M11").order() == 7920);
  CHECK(named_group("PSL2(16)").order() == 4080);
  CHECK(named_group("PGammaL2(16)").order() == 16320);
  CHECK(named_group("PSU3(3)").order() == 6048);
  CHECK(named_group("PSU4(2)").order() == 25920);
  CHECK(named_group("PGL2(29)").order() == 24360);
  CHECK(named_group("PSL3(3)").order() == 5616);
  CHECK_THROWS_AS(named_group("Fi22"), PreconditionError);
}

TEST_CASE("targeted search")
{
  PermGroup g = named_group("PSp4(3)");
  auto res = targeted_search(g, "PSp4(3)", {{648, 960, true, false, false}, {27, 960, true, false, false}});
  REQUIRE(res.size() == 2);
  for (auto const &r : res) {
    REQUIRE(r.record.has_value());
    CHECK(r.record->is_factorization);
    CHECK(r.record->provenance == Provenance::targeted);
    CHECK(BigInt(r.record->hk_order * 25920) == BigInt(r.pair.h_order * 960));
  }
  auto none = targeted_search(psl2_prime(7), "PSL2(7)", {{7, 8, {}, {}, {}}}, 0, 50);
  CHECK_FALSE(none[0].record.has_value());
  CHECK_THROWS_AS(targeted_search(psl2_prime(7), "PSL2(7)", {{5, 8, {}, {}, {}}}),
                  PreconditionError);
}
