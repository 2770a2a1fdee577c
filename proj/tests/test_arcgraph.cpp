#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/gfmat/orders.hpp"
#include "groupfact/permcore/cosets.hpp"
#include "groupfact/permcore/element_table.hpp"
#include "groupfact/permcore/named_groups.hpp"
#include "groupfact/permcore/subgroups.hpp"

using namespace groupfact;
using namespace groupfact::arcgraph;
using namespace groupfact::permcore;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c)
{
  return Permutation::from_cycles(n, c);
}

// Dihedral group of the n-cycle 0-1-...-(n-1).
PermGroup cycle_dihedral(std::size_t n)
{
  std::vector<Point> r(n), f(n);
  for (Point i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    f[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(r), Permutation(f)});
}

PermGroup rotations(std::size_t n)
{
  std::vector<Point> r(n);
  for (Point i = 0; i < n; ++i)
    r[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(r)});
}

// S3 = Stab(3) in S4, and the A5 vertex stabilizer of the Petersen graph.
PermGroup s3_in_s4() { return PermGroup(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}})}); }
PermGroup s3_in_a5() { return PermGroup(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}, {3, 4}})}); }

// All automorphisms by trying every vertex permutation.
std::vector<Permutation> naive_automorphisms(Graph const &g)
{
  std::vector<Point> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation x(p);
    if (is_automorphism(g, x))
      out.push_back(x);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Graph random_graph(std::size_t n, double density, std::mt19937_64 &rng)
{
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        e.push_back({u, v});
  return Graph(n, e);
}

// Normal closures of the conjugacy class representatives.
std::vector<PermGroup> normal_closures(PermGroup const &a)
{
  ElementTable t(a);
  std::vector<PermGroup> out;
  for (Elem x : t.conjugacy_class_reps())
    out.push_back(normal_closure(a, {t.element(x)}));
  return out;
}

}  // namespace

TEST_CASE("graph construction and .edg format")
{
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(*valency(g) == 2);
  CHECK(*girth(g) == 4);
  CHECK(is_bipartite(g));

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);

  Graph p = petersen();
  Graph back = parse_edg(to_edg(p));
  CHECK(back.n() == 10);
  CHECK(back.edges() == p.edges());

  auto line_of = [](std::string const &text) {
    try {
      parse_edg(text);
    } catch (ParseError const &e) {
      return e.line;
    }
    return std::size_t(0);
  };
  CHECK(line_of("grap 3\n") == 1);
  CHECK(line_of("graph 3\n0 1\n1 1\n") == 3);
  CHECK(line_of("graph 3\n0 1\n# note\n1 0\n") == 4);
  CHECK(line_of("graph 3\n0 5\n") == 2);
  CHECK(line_of("graph 3\n0 x\n") == 2);
  CHECK(line_of("graph 3\n0 1 2\n") == 2);
  CHECK(parse_edg("# header\ngraph 2\n\n0 1\n").edge_count() == 1);
}

TEST_CASE("named graphs")
{
  Graph p = petersen();
  CHECK(p.n() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(*valency(p) == 3);
  CHECK(*girth(p) == 5);
  CHECK_FALSE(is_bipartite(p));

  Graph hs = hoffman_singleton();
  CHECK(hs.n() == 50);
  CHECK(hs.edge_count() == 175);
  CHECK(*valency(hs) == 7);
  CHECK(*girth(hs) == 5);

  Graph his = higman_sims();
  CHECK(his.n() == 100);
  CHECK(his.edge_count() == 1100);
  CHECK(*valency(his) == 22);
  CHECK(*girth(his) == 4);
  CHECK_FALSE(is_bipartite(his));

  auto blocks = steiner_3_6_22();
  CHECK(blocks.size() == 77);
  // Every 3-subset of the 22 points lies in exactly one block.
  std::vector<int> cover(22 * 22 * 22, 0);
  for (auto const &b : blocks) {
    REQUIRE(b.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        for (std::size_t k = j + 1; k < 6; ++k)
          ++cover[(b[i] * 22 + b[j]) * 22 + b[k]];
  }
  int bad = 0;
  for (Vertex a = 0; a < 22; ++a)
    for (Vertex b = a + 1; b < 22; ++b)
      for (Vertex c = b + 1; c < 22; ++c)
        bad += cover[(a * 22 + b) * 22 + c] != 1;
  CHECK(bad == 0);

  CHECK(*girth(cycle_graph(7)) == 7);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cube_graph(3).edge_count() == 12);
  CHECK_FALSE(girth(Graph(4, {{0, 1}, {1, 2}})).has_value());
  CHECK_FALSE(valency(Graph(3, {{0, 1}})).has_value());
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(components(Graph(4, {{0, 1}, {2, 3}})).size() == 2);
}

TEST_CASE("automorphism group orders")
{
  CHECK(graph_automorphisms(complete_graph(4)).order() == 24);
  CHECK(graph_automorphisms(cycle_graph(9)).order() == 18);
  CHECK(graph_automorphisms(cube_graph(3)).order() == 48);
  CHECK(graph_automorphisms(cube_graph(4)).order() == 384);
  CHECK(graph_automorphisms(petersen()).order() == 120);
  CHECK(graph_automorphisms(Graph(5, {})).order() == 120);

  auto hs = graph_automorphisms(hoffman_singleton());
  CHECK(hs.order() == 252000);
  CHECK(BigInt(hs.order()) == BigInt(2 * gfmat::classical_order(gfmat::Family::PSU, 3, 5)));
  CHECK(is_transitive(hs));

  CHECK(graph_automorphisms(higman_sims()).order() == 88704000);

  CHECK_THROWS_AS(graph_automorphisms(cycle_graph(301)), BoundError);
}

TEST_CASE("automorphisms agree with a brute-force oracle for n <= 8")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + trial % 6;
    Graph g = random_graph(n, trial % 3 == 0 ? 0.3 : 0.5, rng);
    auto all = naive_automorphisms(g);
    PermGroup a = graph_automorphisms(g);
    CHECK(a.order() == static_cast<unsigned long>(all.size()));
    for (auto const &x : all)
      CHECK(a.contains(x));
    // Orbits of the group match the orbits of the brute-force set.
    for (Vertex v = 0; v < n; ++v) {
      std::set<Point> naive;
      for (auto const &x : all)
        naive.insert(x[v]);
      auto orb = orbit(a, v);
      CHECK(std::set<Point>(orb.begin(), orb.end()) == naive);
    }
  }
}

TEST_CASE("isomorphism testing")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(12, 0.4, rng);
    std::vector<Point> p(12);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : g.edges())
      e.push_back({std::min(p[u], p[v]), std::max(p[u], p[v])});
    Graph h(12, e);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (auto [u, v] : g.edges())
      CHECK(h.adjacent((*iso)[u], (*iso)[v]));
  }
  CHECK_FALSE(are_isomorphic(petersen(), cube_graph(3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("s-arc transitivity")
{
  Graph p = petersen();
  auto r = s_arc_transitivity(p, graph_automorphisms(p));
  CHECK(r.s_max == 3);
  CHECK_FALSE(r.cap_reached);
  CHECK(r.connected);
  CHECK(r.transitive_on_vertices);

  auto c = s_arc_transitivity(cycle_graph(8), cycle_dihedral(8), 5);
  CHECK(c.s_max == 5);
  CHECK(c.cap_reached);
  // Rotations are regular on vertices, so not transitive on the 2n arcs.
  CHECK(s_arc_transitivity(cycle_graph(8), rotations(8)).s_max == 0);

  Graph hs = hoffman_singleton();
  CHECK(s_arc_transitivity(hs, graph_automorphisms(hs)).s_max == 3);
  Graph his = higman_sims();
  CHECK(s_arc_transitivity(his, graph_automorphisms(his)).s_max == 2);

  CHECK(s_arc_transitivity(complete_graph(4), symmetric_group(4)).s_max == 2);
  CHECK(s_arc_transitivity(cube_graph(3), graph_automorphisms(cube_graph(3))).s_max == 2);

  // A5 on the Petersen graph: still 2-arc transitive, not 3.
  PermGroup a5 = derived_subgroup(graph_automorphisms(p));
  CHECK(a5.order() == 60);
  CHECK(s_arc_transitivity(p, a5).s_max == 2);

  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(s_arc_transitivity(path, graph_automorphisms(path)).s_max == -1);

  CHECK_THROWS_AS(s_arc_transitivity(cycle_graph(5), PermGroup(5, {cyc(5, {{0, 2}})})),
                  PreconditionError);
}

TEST_CASE("s-arc transitivity is monotone in the cap")
{
  for (Graph const &g : {petersen(), cube_graph(3), complete_graph(5), cycle_graph(6)}) {
    PermGroup a = graph_automorphisms(g);
    int prev = 0;
    for (int cap = 0; cap <= 5; ++cap) {
      int s = s_arc_transitivity(g, a, cap).s_max;
      CHECK(s <= cap);
      CHECK(s >= prev);
      prev = s;
    }
  }
}

TEST_CASE("local action")
{
  Graph p = petersen();
  auto la = local_action(p, graph_automorphisms(p), 0);
  CHECK(la.stabilizer_order == 12);
  CHECK(la.local_order == 6);
  CHECK(la.local_image.degree() == 3);
  CHECK(la.kernel_order == 2);
  CHECK(la.divides);

  auto k4 = local_action(complete_graph(4), symmetric_group(4), 2);
  CHECK(k4.local_order == 6);
  CHECK(k4.kernel_order == 1);
  CHECK(k4.divides);

  auto c5 = local_action(cycle_graph(5), cycle_dihedral(5), 0);
  CHECK(c5.local_order == 2);
  CHECK(c5.kernel_order == 1);

  Graph hs = hoffman_singleton();
  auto h = local_action(hs, graph_automorphisms(hs), 0);
  CHECK(h.stabilizer_order == 5040);
  CHECK(h.local_order == 5040);
  CHECK(h.divides);

  Graph his = higman_sims();
  CHECK(local_action(his, graph_automorphisms(his), 0).divides);

  Graph path(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(local_action(path, graph_automorphisms(path), 0), PreconditionError);
}

TEST_CASE("normal quotients")
{
  // C6 with rotations, N = <r^3>: triangle.
  PermGroup rot = rotations(6);
  PermGroup n3(6, {rot.generators()[0].pow(3)});
  auto q = normal_quotient(cycle_graph(6), rot, n3);
  CHECK(are_isomorphic(q.graph, complete_graph(3)));
  CHECK(q.semiregular);
  CHECK_FALSE(q.few_orbits);

  auto same = normal_quotient(petersen(), graph_automorphisms(petersen()), PermGroup(10, {}));
  CHECK(same.graph.edges() == petersen().edges());

  // Cube with the antipodal map (the center of Aut(Q3)): K4.
  Graph cube = cube_graph(3);
  PermGroup aut = graph_automorphisms(cube);
  std::vector<Point> anti(8);
  for (Point v = 0; v < 8; ++v)
    anti[v] = v ^ 7u;
  Permutation z(anti);
  REQUIRE(aut.contains(z));
  for (auto const &s : aut.generators())
    CHECK(z * s == s * z);
  auto qc = normal_quotient(cube, aut, PermGroup(8, {z}));
  CHECK(are_isomorphic(qc.graph, complete_graph(4)));
  CHECK(qc.semiregular);

  // Transitive normal subgroup: a single vertex, flagged.
  auto whole = normal_quotient(cycle_graph(6), rot, rot);
  CHECK(whole.graph.n() == 1);
  CHECK(whole.few_orbits);

  PermGroup d6 = cycle_dihedral(6);
  CHECK_THROWS_AS(normal_quotient(cycle_graph(6), d6, PermGroup(6, {d6.generators()[1]})),
                  PreconditionError);
}

TEST_CASE("normal quotients of 2-arc-transitive graphs are semiregular")
{
  for (Graph const &g : {cube_graph(3), cycle_graph(12), cube_graph(4), petersen()}) {
    PermGroup a = graph_automorphisms(g);
    REQUIRE(s_arc_transitivity(g, a).s_max >= 2);
    for (PermGroup const &n : normal_closures(a)) {
      if (orbits(n).size() < 3)
        continue;
      CHECK(normal_quotient(g, a, n).semiregular);
    }
  }
}

TEST_CASE("vertex-transitive normal subgroups: |G_v|/|K_v| = |G|/|K|")
{
  auto check = [](PermGroup const &a, PermGroup const &k) {
    BigInt ga = pointwise_stabilizer(a, {0}).order();
    BigInt ka = pointwise_stabilizer(k, {0}).order();
    CHECK(BigInt(ga * k.order()) == BigInt(ka * a.order()));
  };
  int tested = 0;
  for (Graph const &g : {cube_graph(3), cycle_graph(12), cube_graph(4), petersen()}) {
    PermGroup a = graph_automorphisms(g);
    for (PermGroup const &k : normal_closures(a))
      if (is_transitive(k)) {
        check(a, k);
        ++tested;
      }
  }
  CHECK(tested >= 8);

  PermGroup hs = graph_automorphisms(hoffman_singleton());
  PermGroup k = derived_subgroup(hs);
  REQUIRE(is_transitive(k));
  check(hs, k);
}

TEST_CASE("coset graphs")
{
  PermGroup s4 = symmetric_group(4);
  auto k4 = coset_graph({s4, s3_in_s4(), cyc(4, {{2, 3}})});
  CHECK(k4.graph.n() == 4);
  CHECK(k4.valency == 3);
  CHECK(k4.connected);
  CHECK(are_isomorphic(k4.graph, complete_graph(4)));

  // <K, g> is a proper subgroup: K = <(0 1)> in S4, g = (2 3).
  auto dis = coset_graph({s4, PermGroup(4, {cyc(4, {{0, 1}})}), cyc(4, {{2, 3}})});
  CHECK_FALSE(dis.connected);
  CHECK_FALSE(is_connected(dis.graph));
  CHECK(dis.valency == 1);

  PermGroup a5 = alternating_group(5);
  auto pet = coset_graph({a5, s3_in_a5(), cyc(5, {{1, 3}, {2, 4}})});
  CHECK(pet.graph.n() == 10);
  CHECK(pet.valency == 3);
  CHECK(*girth(pet.graph) == 5);
  CHECK(are_isomorphic(pet.graph, petersen()));

  CHECK_THROWS_AS(coset_graph({s4, s3_in_s4(), cyc(4, {{0, 1}})}), PreconditionError);
  CHECK_THROWS_AS(coset_graph({s4, s3_in_s4(), cyc(4, {{0, 1, 2, 3}})}), PreconditionError);
  PermGroup v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK_THROWS_AS(coset_graph({s4, v4, cyc(4, {{0, 1}})}), PreconditionError);
}

TEST_CASE("Cayley graphs")
{
  PermGroup c5 = cyclic_group(5);
  Permutation g = c5.generators()[0];
  CHECK(are_isomorphic(cayley_graph(c5, {g, g.inverse()}), cycle_graph(5)));

  PermGroup c2 = cyclic_group(2);
  PermGroup c8 = direct_product(direct_product(c2, c2), c2);
  auto q3 = cayley_graph(c8, c8.generators());
  CHECK(are_isomorphic(q3, cube_graph(3)));
  CHECK(is_bipartite(q3));

  PermGroup c4 = cyclic_group(4);
  Permutation g2 = c4.generators()[0].pow(2);
  auto m = cayley_graph(c4, {g2});
  CHECK(m.edge_count() == 2);
  CHECK(*valency(m) == 1);
  CHECK_FALSE(is_connected(m));

  CHECK_THROWS_AS(cayley_graph(c5, {g}), PreconditionError);
  CHECK_THROWS_AS(cayley_graph(c5, {c5.identity()}), PreconditionError);
}

TEST_CASE("small group catalog and is_cayley")
{
  std::vector<std::size_t> counts{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (std::size_t n = 1; n <= 12; ++n) {
    auto cat = small_group_catalog(n);
    CHECK(cat.size() == counts[n - 1]);
    for (auto const &[name, grp] : cat)
      CHECK_MESSAGE(grp.order() == static_cast<unsigned long>(n), name);
  }
  // Q8 has a unique involution; D8 has five.
  for (auto const &[name, grp] : small_group_catalog(8)) {
    std::size_t inv = 0;
    grp.chain().for_each_element([&](Permutation const &x) {
      if (x.order_u64() == 2)
        ++inv;
      return true;
    });
    if (name == "Q8")
      CHECK(inv == 1);
    if (name == "D8")
      CHECK(inv == 5);
  }

  CHECK_FALSE(is_cayley(petersen()));
  CHECK(is_cayley(cycle_graph(5)));
  CHECK(is_cayley(complete_graph(4)));
  CHECK(is_cayley(cube_graph(3)));
  CHECK_FALSE(is_cayley(Graph(3, {{0, 1}})));
  CHECK_THROWS_AS(is_cayley(cycle_graph(13)), BoundError);
}

TEST_CASE("two-arc candidates")
{
  PermGroup a5 = alternating_group(5);
  PermGroup k = s3_in_a5();
  auto cands = two_arc_candidates(a5, k);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].m.order() == 2);
  auto cg = coset_graph({a5, k, cands[0].w});
  CHECK(are_isomorphic(cg.graph, petersen()));
  CHECK(s_arc_transitivity(cg.graph, graph_automorphisms(cg.graph)).s_max == 3);

  // C9 has no 2-transitive coset actions.
  PermGroup c9 = cyclic_group(9);
  CHECK(two_arc_candidates(symmetric_group(9), c9).empty());

  // S4 in PSL2(7): each of S3, D8, A4 is normalized inside S4 only, so
  // <K, N(M)> = K and nothing survives.
  PermGroup l = psl2_prime(7);
  auto s4 = find_subgroup_by_order(l, 24, 2000, 0);
  REQUIRE(s4.has_value());
  CHECK(two_arc_candidates(l, *s4).empty());
}

TEST_CASE("Hoffman-Singleton: solvable vertex-transitive subgroup")
{
  PermGroup a = graph_automorphisms(hoffman_singleton());
  PermGroup p = sylow_subgroup(a, 5);
  CHECK(p.order() == 125);
  PermGroup n = normalizer(a, p);
  CHECK(n.order() == 2000);
  CHECK(is_solvable(n));
  CHECK(is_transitive(n));
  CHECK(sylow_subgroup(symmetric_group(6), 2, 4).order() == 16);
  CHECK(sylow_subgroup(symmetric_group(6), 5).order() == 5);
}
