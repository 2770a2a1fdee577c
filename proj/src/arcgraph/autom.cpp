#include <algorithm>
#include <map>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/errors.hpp"

namespace groupfact::arcgraph {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

struct Refined {
  Cells cells;
  std::uint64_t trace = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Equitable refinement: split cells by the multiset of neighbour counts
// per cell until stable. Cells are ordered by (parent cell, signature), so
// the result and the trace are isomorphism invariant.
Refined refine(Graph const &g, Cells cells)
{
  std::size_t n = g.n();
  std::vector<std::uint32_t> cell_of(n);
  std::uint64_t trace = cells.size();
  using Sig = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  while (true) {
    for (std::uint32_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c])
        cell_of[v] = c;
    Cells next;
    for (std::uint32_t c = 0; c < cells.size(); ++c) {
      auto const &cell = cells[c];
      if (cell.size() == 1) {
        next.push_back(cell);
        trace = mix(trace, c);
        continue;
      }
      std::map<Sig, std::vector<Vertex>> groups;
      for (Vertex v : cell) {
        Sig sig;
        for (Vertex u : g.neighbors(v))
          sig.emplace_back(cell_of[u], 1);
        std::sort(sig.begin(), sig.end());
        Sig packed;
        for (auto const &[k, one] : sig) {
          if (!packed.empty() && packed.back().first == k)
            ++packed.back().second;
          else
            packed.emplace_back(k, one);
        }
        groups[std::move(packed)].push_back(v);
      }
      for (auto &[sig, vs] : groups) {
        trace = mix(trace, c);
        trace = mix(trace, vs.size());
        for (auto const &[k, m] : sig)
          trace = mix(trace, (static_cast<std::uint64_t>(k) << 32) | m);
        next.push_back(std::move(vs));
      }
    }
    bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable)
      break;
  }
  return {std::move(cells), trace};
}

Cells individualize(Cells cells, std::size_t t, Vertex v)
{
  auto &cell = cells[t];
  cell.erase(std::find(cell.begin(), cell.end(), v));
  cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(t), std::vector<Vertex>{v});
  return cells;
}

std::optional<std::size_t> target_cell(Cells const &cells)
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1 && (!best || cells[i].size() < cells[*best].size()))
      best = i;
  return best;
}

bool same_shape(Refined const &a, Refined const &b)
{
  if (a.trace != b.trace || a.cells.size() != b.cells.size())
    return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    if (a.cells[i].size() != b.cells[i].size())
      return false;
  return true;
}

bool is_isomorphism(Graph const &a, Graph const &b, std::vector<Vertex> const &map)
{
  if (a.edge_count() != b.edge_count())
    return false;
  for (auto [u, v] : a.edges())
    if (!b.adjacent(map[u], map[v]))
      return false;
  return true;
}

std::optional<std::vector<Vertex>> search(Graph const &a, Cells const &pa, Graph const &b,
                                          Cells const &pb)
{
  Refined ra = refine(a, pa);
  Refined rb = refine(b, pb);
  if (!same_shape(ra, rb))
    return std::nullopt;
  auto t = target_cell(ra.cells);
  if (!t) {
    std::vector<Vertex> map(a.n());
    for (std::size_t i = 0; i < ra.cells.size(); ++i)
      map[ra.cells[i][0]] = rb.cells[i][0];
    if (is_isomorphism(a, b, map))
      return map;
    return std::nullopt;
  }
  Vertex x = ra.cells[*t][0];
  Cells left = individualize(ra.cells, *t, x);
  for (Vertex y : rb.cells[*t])
    if (auto r = search(a, left, b, individualize(rb.cells, *t, y)))
      return r;
  return std::nullopt;
}

Cells unit_partition(std::size_t n)
{
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v)
    all[v] = v;
  return n ? Cells{all} : Cells{};
}

std::vector<char> orbit_of(std::size_t n, std::vector<Permutation> const &gens, Vertex x)
{
  std::vector<char> in(n, 0);
  std::vector<Vertex> queue{x};
  in[x] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &g : gens) {
      Vertex y = g[queue[i]];
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

}  // namespace

bool is_automorphism(Graph const &g, Permutation const &p)
{
  if (p.degree() != g.n())
    return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v]))
      return false;
  return true;
}

PermGroup graph_automorphisms(Graph const &g, std::size_t bound)
{
  std::size_t n = g.n();
  if (n > bound)
    throw BoundError("graph_automorphisms: " + std::to_string(n) + " vertices exceed bound " +
                     std::to_string(bound));
  struct Level {
    Cells cells;
    std::size_t target;
    Vertex base;
  };
  std::vector<Level> path;
  Cells cur = refine(g, unit_partition(n)).cells;
  while (auto t = target_cell(cur)) {
    Vertex b = cur[*t][0];
    path.push_back({cur, *t, b});
    cur = refine(g, individualize(cur, *t, b)).cells;
  }

  // Deepest level first: generators found below fix the earlier base points
  // and prune the orbit scan above.
  std::vector<Permutation> gens;
  for (std::size_t i = path.size(); i-- > 0;) {
    auto const &lv = path[i];
    Cells left = individualize(lv.cells, lv.target, lv.base);
    auto orbit = orbit_of(n, gens, lv.base);
    for (Vertex y : lv.cells[lv.target]) {
      if (orbit[y])
        continue;
      auto map = search(g, left, g, individualize(lv.cells, lv.target, y));
      if (!map)
        continue;
      Permutation p(std::vector<permcore::Point>(map->begin(), map->end()));
      if (!is_automorphism(g, p))
        throw InvariantError("graph_automorphisms: found map is not an automorphism");
      gens.push_back(std::move(p));
      orbit = orbit_of(n, gens, lv.base);
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<Permutation> find_isomorphism(Graph const &a, Graph const &b)
{
  if (a.n() != b.n() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto map = search(a, unit_partition(a.n()), b, unit_partition(b.n()));
  if (!map)
    return std::nullopt;
  return Permutation(std::vector<permcore::Point>(map->begin(), map->end()));
}

bool are_isomorphic(Graph const &a, Graph const &b) { return find_isomorphism(a, b).has_value(); }

}  // namespace groupfact::arcgraph
