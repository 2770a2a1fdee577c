#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/permcore/cosets.hpp"
#include "groupfact/permcore/element_table.hpp"
#include "groupfact/permcore/named_groups.hpp"
#include "groupfact/permcore/subgroups.hpp"

namespace groupfact::arcgraph {

using namespace permcore;

namespace {

void require_automorphisms(Graph const &graph, PermGroup const &g, char const *who)
{
  if (g.degree() != graph.n())
    throw PreconditionError(std::string(who) + ": group degree differs from |V|");
  for (auto const &s : g.generators())
    if (!is_automorphism(graph, s))
      throw PreconditionError(std::string(who) + ": generator is not an automorphism");
}

std::vector<Point> to_points(std::vector<Vertex> const &v) { return {v.begin(), v.end()}; }

// Image of g_v's generators on the positions of nb.
PermGroup restrict_to(PermGroup const &stab, std::vector<Vertex> const &nb)
{
  std::unordered_map<Vertex, Point> pos;
  for (std::size_t i = 0; i < nb.size(); ++i)
    pos[nb[i]] = static_cast<Point>(i);
  std::vector<Permutation> gens;
  for (auto const &s : stab.generators()) {
    std::vector<Point> im(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      auto it = pos.find(s[nb[i]]);
      if (it == pos.end())
        throw InvariantError("stabilizer does not preserve the neighbourhood");
      im[i] = it->second;
    }
    gens.emplace_back(std::move(im));
  }
  return PermGroup(nb.size(), std::move(gens));
}

}  // namespace

ArcReport s_arc_transitivity(Graph const &graph, PermGroup const &g, int cap)
{
  require_automorphisms(graph, g, "s_arc_transitivity");
  ArcReport r;
  r.connected = is_connected(graph);
  r.valency = valency(graph);
  r.girth = girth(graph);
  if (graph.n() == 0)
    return r;
  r.transitive_on_vertices = is_transitive(g);
  if (!r.transitive_on_vertices)
    return r;
  r.s_max = 0;

  // G is s-arc transitive iff it is (s-1)-arc transitive and the pointwise
  // stabilizer of one (s-1)-arc is transitive on its extensions.
  std::vector<Vertex> arc{0};
  for (int s = 1; s <= cap; ++s) {
    Vertex last = arc.back();
    std::vector<Vertex> ext;
    for (Vertex w : graph.neighbors(last))
      if (arc.size() < 2 || w != arc[arc.size() - 2])
        ext.push_back(w);
    if (ext.empty())
      return r;
    PermGroup stab = pointwise_stabilizer(g, to_points(arc));
    auto orb = orbit(stab, ext[0]);
    std::set<Point> in_orb(orb.begin(), orb.end());
    for (Vertex w : ext)
      if (!in_orb.count(w))
        return r;
    r.s_max = s;
    arc.push_back(ext[0]);
  }
  r.cap_reached = true;
  return r;
}

LocalAction local_action(Graph const &graph, PermGroup const &g, Vertex v)
{
  require_automorphisms(graph, g, "local_action");
  if (v >= graph.n())
    throw PreconditionError("local_action: vertex out of range");
  if (!is_transitive(g))
    throw PreconditionError("local_action: group is not vertex-transitive");
  auto const &nb = graph.neighbors(v);
  if (nb.empty())
    throw PreconditionError("local_action: vertex has no neighbours");

  LocalAction la;
  PermGroup gv = pointwise_stabilizer(g, {v});
  la.stabilizer_order = gv.order();
  la.local_image = restrict_to(gv, nb);
  la.local_order = la.local_image.order();

  std::vector<Point> ball = to_points(nb);
  ball.push_back(v);
  la.kernel_order = pointwise_stabilizer(g, ball).order();
  if (la.kernel_order * la.local_order != la.stabilizer_order)
    throw InvariantError("local_action: |G_v| != |G_v^[1]| |G_v^Gamma(v)|");

  la.w = nb[0];
  std::vector<Point> both = ball;
  for (Vertex x : graph.neighbors(la.w))
    both.push_back(x);
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  la.edge_kernel_order = pointwise_stabilizer(g, both).order();

  PermGroup gvw = pointwise_stabilizer(g, {v, la.w});
  la.arc_image_order = restrict_to(gvw, graph.neighbors(la.w)).order();
  BigInt q = la.kernel_order / la.edge_kernel_order;
  la.divides = divides(q, la.arc_image_order);
  return la;
}

NormalQuotient normal_quotient(Graph const &graph, PermGroup const &g, PermGroup const &n)
{
  require_automorphisms(graph, g, "normal_quotient");
  if (n.degree() != g.degree() || !is_subgroup(n, g) || !is_normal(n, g))
    throw PreconditionError("normal_quotient: N is not a normal subgroup of G");

  NormalQuotient q;
  auto orbs = orbits(n);
  q.orbit_of.assign(graph.n(), 0);
  q.semiregular = true;
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    for (Point x : orbs[i])
      q.orbit_of[x] = i;
    if (BigInt(static_cast<unsigned long>(orbs[i].size())) != n.order())
      q.semiregular = false;
  }
  std::set<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : graph.edges()) {
    auto a = static_cast<Vertex>(q.orbit_of[u]);
    auto b = static_cast<Vertex>(q.orbit_of[v]);
    if (a != b)
      edges.insert({std::min(a, b), std::max(a, b)});
  }
  q.graph = Graph(orbs.size(), {edges.begin(), edges.end()});
  q.few_orbits = orbs.size() < 3;
  return q;
}

CosetGraph coset_graph(CosetGraphSpec const &spec)
{
  auto const &g = spec.g;
  auto const &k = spec.k;
  auto const &x = spec.elt;
  if (k.degree() != g.degree() || x.degree() != g.degree())
    throw PreconditionError("coset_graph: degree mismatch");
  if (!is_subgroup(k, g))
    throw PreconditionError("coset_graph: K is not a subgroup of G");
  if (!g.contains(x))
    throw PreconditionError("coset_graph: g is not in G");
  if (k.contains(x))
    throw PreconditionError("coset_graph: g lies in K");
  if (!k.contains(x * x))
    throw PreconditionError("coset_graph: g^2 is not in K");
  if (core(g, k).order() != 1)
    throw PreconditionError("coset_graph: K is not core-free");

  CosetAction ca = coset_action(g, k);
  std::unordered_map<Permutation, Vertex, PermutationHash> index;
  for (std::size_t i = 0; i < ca.transversal.size(); ++i)
    index[ca.transversal[i]] = static_cast<Vertex>(i);
  auto const &kc = k.chain();
  auto vertex_of = [&](Permutation const &p) {
    auto it = index.find(canonical_coset_rep(kc, p));
    if (it == index.end())
      throw InvariantError("coset_graph: coset missing from transversal");
    return it->second;
  };

  // D: the cosets inside KgK, i.e. the K-orbit of Kg.
  std::vector<Permutation> d{canonical_coset_rep(kc, x)};
  std::set<Vertex> seen{vertex_of(x)};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (auto const &s : k.generators()) {
      Permutation y = canonical_coset_rep(kc, d[i] * s);
      if (seen.insert(vertex_of(y)).second)
        d.push_back(y);
    }

  std::set<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < ca.transversal.size(); ++u)
    for (auto const &e : d) {
      Vertex v = vertex_of(e * ca.transversal[u]);
      if (v == u)
        throw InvariantError("coset_graph: loop");
      edges.insert({std::min<Vertex>(u, v), std::max<Vertex>(u, v)});
    }

  CosetGraph out;
  out.graph = Graph(ca.transversal.size(), {edges.begin(), edges.end()});
  out.transversal = std::move(ca.transversal);
  out.valency = d.size();

  // |K : K cap K^g| must equal |D|.
  std::size_t meet = 0;
  auto const &kg = conjugate_group(k, x);
  kc.for_each_element([&](Permutation const &e) {
    if (kg.contains(e))
      ++meet;
    return true;
  });
  if (BigInt(static_cast<unsigned long>(meet * d.size())) != k.order())
    throw InvariantError("coset_graph: valency differs from |K|/|K cap K^g|");
  auto v = valency(out.graph);
  if (!v || *v != out.valency)
    throw InvariantError("coset_graph: graph is not regular of the expected valency");

  auto gens = k.generators();
  gens.push_back(x);
  out.connected = PermGroup(g.degree(), gens).order() == g.order();
  if (out.connected != is_connected(out.graph))
    throw InvariantError("coset_graph: connectivity differs from <K, g> = G");
  return out;
}

Graph cayley_graph(PermGroup const &r, std::vector<Permutation> const &s)
{
  ElementTable t(r);
  std::vector<Elem> si;
  std::set<Elem> sset;
  for (auto const &p : s) {
    if (p.degree() != r.degree() || !r.contains(p))
      throw PreconditionError("cayley_graph: connection element not in R");
    Elem e = t.index_of(p);
    if (e == t.identity())
      throw PreconditionError("cayley_graph: identity in connection set");
    if (sset.insert(e).second)
      si.push_back(e);
  }
  for (Elem e : si)
    if (!sset.count(t.inv(e)))
      throw PreconditionError("cayley_graph: connection set not inverse-closed");

  std::set<std::pair<Vertex, Vertex>> edges;
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem e : si) {
      Elem y = t.mul(e, x);
      edges.insert({std::min(x, y), std::max(x, y)});
    }
  Graph out(t.size(), {edges.begin(), edges.end()});
  bool gen = t.closure(si).size() == t.size();
  if (gen != is_connected(out))
    throw InvariantError("cayley_graph: connectivity differs from <S> = R");
  return out;
}

std::vector<TwoArcCandidate> two_arc_candidates(PermGroup const &g, PermGroup const &k)
{
  if (k.degree() != g.degree() || !is_subgroup(k, g))
    throw PreconditionError("two_arc_candidates: K is not a subgroup of G");
  auto subs = enumerate_subgroups(k, EnumMode::exhaustive);
  std::vector<TwoArcCandidate> out;
  for (auto const &c : subs.classes) {
    if (BigInt(static_cast<unsigned long>(c.order)) == k.order())
      continue;
    PermGroup const &m = c.rep;
    CosetAction ca = coset_action(k, m);
    std::size_t deg = ca.transversal.size();
    if (deg < 2 || !is_transitive(ca.image))
      continue;
    auto orb = orbit(pointwise_stabilizer(ca.image, {0}), 1);
    if (orb.size() != deg - 1)
      continue;

    PermGroup nm = normalizer(g, m);
    auto gens = k.generators();
    for (auto const &s : nm.generators())
      gens.push_back(s);
    if (PermGroup(g.degree(), gens).order() != g.order())
      continue;

    ElementTable nt(nm);
    for (Elem e = 0; e < nt.size(); ++e) {
      Permutation const &w = nt.element(e);
      std::uint64_t o = nt.element_order(e);
      if (o < 2 || (o & (o - 1)) != 0)
        continue;
      if (k.contains(w) || !k.contains(w * w))
        continue;
      auto kg = k.generators();
      kg.push_back(w);
      if (PermGroup(g.degree(), kg).order() != g.order())
        continue;
      PermGroup kw = conjugate_group(k, w);
      std::size_t meet = 0;
      k.chain().for_each_element([&](Permutation const &y) {
        if (kw.contains(y))
          ++meet;
        return true;
      });
      if (meet != c.order)
        continue;
      out.push_back({m, w});
      break;
    }
  }
  return out;
}

std::vector<std::pair<std::string, PermGroup>> small_group_catalog(std::size_t n)
{
  if (n < 1 || n > kCayleyCatalogMax)
    throw BoundError("small_group_catalog: order " + std::to_string(n) + " outside 1.." +
                     std::to_string(kCayleyCatalogMax));
  auto cyc = [](std::size_t m) { return m == 1 ? PermGroup(1, {}) : cyclic_group(m); };
  std::vector<std::pair<std::string, PermGroup>> out;
  out.emplace_back("C" + std::to_string(n), cyc(n));
  switch (n) {
  case 4:
    out.emplace_back("C2xC2", direct_product(cyc(2), cyc(2)));
    break;
  case 6:
    out.emplace_back("S3", symmetric_group(3));
    break;
  case 8:
    out.emplace_back("C4xC2", direct_product(cyc(4), cyc(2)));
    out.emplace_back("C2^3", direct_product(direct_product(cyc(2), cyc(2)), cyc(2)));
    out.emplace_back("D8", dihedral_group(4));
    out.emplace_back("Q8", PermGroup(8, {Permutation::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                                         Permutation::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})}));
    break;
  case 9:
    out.emplace_back("C3xC3", direct_product(cyc(3), cyc(3)));
    break;
  case 10:
    out.emplace_back("D10", dihedral_group(5));
    break;
  case 12:
    out.emplace_back("C6xC2", direct_product(cyc(6), cyc(2)));
    out.emplace_back("D12", dihedral_group(6));
    out.emplace_back("A4", alternating_group(4));
    out.emplace_back("Dic12", PermGroup(7, {Permutation::from_cycles(7, {{0, 1, 2}}),
                                            Permutation::from_cycles(7, {{1, 2}, {3, 4, 5, 6}})}));
    break;
  default:
    break;
  }
  for (auto const &[name, grp] : out)
    if (grp.order() != static_cast<unsigned long>(n))
      throw InvariantError("small_group_catalog: " + name + " has the wrong order");
  return out;
}

bool is_cayley(Graph const &graph)
{
  std::size_t n = graph.n();
  if (n > kCayleyCatalogMax)
    throw BoundError("is_cayley: " + std::to_string(n) + " vertices exceed the catalog bound " +
                     std::to_string(kCayleyCatalogMax));
  if (n == 0)
    return false;
  auto val = valency(graph);
  if (!val)
    return false;

  for (auto const &[name, r] : small_group_catalog(n)) {
    ElementTable t(r);
    // Inverse classes {x, x^-1} of non-identity elements.
    std::vector<std::vector<Elem>> cls;
    std::vector<char> done(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (x == t.identity() || done[x])
        continue;
      done[x] = done[t.inv(x)] = 1;
      cls.push_back(x == t.inv(x) ? std::vector<Elem>{x} : std::vector<Elem>{x, t.inv(x)});
    }
    std::vector<Permutation> s;
    bool found = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
      if (found)
        return;
      if (left == 0) {
        if (are_isomorphic(cayley_graph(r, s), graph))
          found = true;
        return;
      }
      if (i == cls.size())
        return;
      if (cls[i].size() <= left) {
        for (Elem e : cls[i])
          s.push_back(t.element(e));
        rec(i + 1, left - cls[i].size());
        s.resize(s.size() - cls[i].size());
      }
      rec(i + 1, left);
    };
    rec(0, *val);
    if (found)
      return true;
  }
  return false;
}

PermGroup sylow_subgroup(PermGroup const &g, std::uint64_t p, std::uint64_t seed)
{
  BigInt n = g.order();
  BigInt pp = 1;
  BigInt bp(static_cast<unsigned long>(p));
  while (divides(pp * bp, n))
    pp *= bp;

  std::mt19937_64 rng(seed);
  PermGroup cur(g.degree(), {});
  for (int attempt = 0; attempt < 100000; ++attempt) {
    if (cur.order() == pp)
      return cur;
    PermGroup nm = cur.is_trivial() ? g : normalizer(g, cur);
    Permutation x = nm.chain().random_element(rng);
    BigInt o = x.order();
    BigInt op = 1;
    while (divides(op * bp, o))
      op *= bp;
    if (op == 1)
      continue;
    Permutation y = x.pow(static_cast<long long>(to_u64(o / op)));
    if (cur.contains(y))
      continue;
    // y normalizes cur, so <cur, y> is again a p-group.
    auto gens = cur.generators();
    gens.push_back(y);
    cur = PermGroup(g.degree(), gens);
  }
  throw InvariantError("sylow_subgroup: no Sylow subgroup found");
}

}  // namespace groupfact::arcgraph
