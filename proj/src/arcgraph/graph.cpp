#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/gfmat/matgroup.hpp"

namespace groupfact::arcgraph {

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const &edges)
  : adj_(n), matrix_(n * n, 0)
{
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("graph: vertex out of range");
    if (u == v)
      throw PreconditionError("graph: loop at " + std::to_string(u));
    if (matrix_[u * n + v])
      throw PreconditionError("graph: duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v));
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
  }
  for (auto &a : adj_)
    std::sort(a.begin(), a.end());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

// ------------------------------------------------------------ .edg

Graph parse_edg(std::string const &text, std::string const &source)
{
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    if (!n) {
      std::string kw;
      long long v = -1;
      std::string rest;
      if (!(ls >> kw >> v) || kw != "graph" || v < 0 || (ls >> rest))
        throw ParseError(source, lineno, "expected 'graph <n>'");
      n = static_cast<std::size_t>(v);
      continue;
    }
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw ParseError(source, lineno, "expected 'u v'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
      throw ParseError(source, lineno, "vertex out of range");
    if (u == v)
      throw ParseError(source, lineno, "loop");
    std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)),
                                  static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(key).second)
      throw ParseError(source, lineno, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n)
    throw ParseError(source, lineno, "missing 'graph <n>' header");
  return Graph(*n, edges);
}

Graph load_edg(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(path, 0, "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edg(ss.str(), path);
}

std::string to_edg(Graph const &g)
{
  std::ostringstream os;
  os << "graph " << g.n() << '\n';
  for (auto [u, v] : g.edges())
    os << u << ' ' << v << '\n';
  return os.str();
}

// ------------------------------------------------------------ invariants

std::optional<std::size_t> valency(Graph const &g)
{
  if (g.n() == 0)
    return 0;
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v)
    if (g.degree(v) != d)
      return std::nullopt;
  return d;
}

std::optional<std::size_t> girth(Graph const &g)
{
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> dist(g.n());
  std::vector<Vertex> parent(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    parent[s] = s;
    std::vector<Vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      if (2 * dist[u] + 1 >= best)
        break;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == SIZE_MAX)
    return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> components(Graph const &g)
{
  std::vector<char> seen(g.n(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex v : g.neighbors(comp[i]))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(Graph const &g) { return g.n() <= 1 || components(g).size() == 1; }

bool is_bipartite(Graph const &g)
{
  std::vector<int> colour(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0)
      continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex v : g.neighbors(queue[i])) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[queue[i]];
          queue.push_back(v);
        } else if (colour[v] == colour[queue[i]]) {
          return false;
        }
      }
  }
  return true;
}

// ------------------------------------------------------------ named graphs

Graph cycle_graph(std::size_t n)
{
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

Graph complete_graph(std::size_t n)
{
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cube_graph(std::size_t d)
{
  std::size_t n = std::size_t{1} << d;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t b = 0; b < d; ++b) {
      Vertex y = x ^ (Vertex{1} << b);
      if (x < y)
        e.emplace_back(x, y);
    }
  return Graph(n, e);
}

Graph petersen()
{
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      pairs.emplace_back(a, b);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < pairs.size(); ++i)
    for (Vertex j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d)
        e.emplace_back(i, j);
    }
  return Graph(10, e);
}

Graph hoffman_singleton()
{
  // P_h[j] = 5h + j, Q_i[j] = 25 + 5i + j.
  auto p = [](int h, int j) { return static_cast<Vertex>(5 * h + ((j % 5) + 5) % 5); };
  auto q = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + ((j % 5) + 5) % 5); };
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(p(h, j), p(h, j + 1));
      e.emplace_back(q(h, j), q(h, j + 2));
    }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        e.emplace_back(p(h, j), q(i, h * i + j));
  return Graph(50, e);
}

std::vector<std::vector<Vertex>> steiner_3_6_22()
{
  using namespace gfmat;
  auto F = Field::of_order(4);
  Vec e1{1, 0, 0};
  auto res = mat_to_perm(sl_generators(F, 3), {e1}, kDefaultDegreeBound, true);
  auto const &pts = res.points;
  std::size_t np = pts.size();
  if (np != 21)
    throw InvariantError("PG(2,4) has " + std::to_string(np) + " points");
  std::map<Vec, Vertex> index;
  for (Vertex i = 0; i < np; ++i)
    index[pts[i]] = i;

  // Lines as sorted point sets; collinearity table for triples.
  std::set<std::vector<Vertex>> line_set;
  for (Vertex a = 0; a < np; ++a)
    for (Vertex b = a + 1; b < np; ++b) {
      std::set<Vertex> line;
      for (Fq x = 0; x < 4; ++x)
        for (Fq y = 0; y < 4; ++y) {
          if (x == 0 && y == 0)
            continue;
          Vec v = vec_add(*F, vec_scale(*F, x, pts[a]), vec_scale(*F, y, pts[b]));
          line.insert(index.at(projective_normalize(*F, v)));
        }
      line_set.insert(std::vector<Vertex>(line.begin(), line.end()));
    }
  std::vector<std::vector<Vertex>> lines(line_set.begin(), line_set.end());
  if (lines.size() != 21)
    throw InvariantError("PG(2,4) has " + std::to_string(lines.size()) + " lines");
  std::vector<char> collinear(np * np * np, 0);
  for (auto const &l : lines)
    for (Vertex a : l)
      for (Vertex b : l)
        for (Vertex c : l)
          collinear[(a * np + b) * np + c] = 1;

  // Hyperovals: 6 points, no three collinear.
  std::vector<std::vector<Vertex>> ovals;
  std::vector<Vertex> cur;
  auto rec = [&](auto &&self, Vertex start) -> void {
    if (cur.size() == 6) {
      ovals.push_back(cur);
      return;
    }
    for (Vertex x = start; x < np; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i)
        for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
          if (collinear[(cur[i] * np + cur[j]) * np + x])
            ok = false;
      if (!ok)
        continue;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (ovals.size() != 168)
    throw InvariantError("PG(2,4) has " + std::to_string(ovals.size()) + " hyperovals");

  // Orbits of PSL3(4) on hyperovals.
  std::map<std::vector<Vertex>, std::size_t> oval_index;
  for (std::size_t i = 0; i < ovals.size(); ++i)
    oval_index[ovals[i]] = i;
  std::vector<int> orbit_of(ovals.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t s = 0; s < ovals.size(); ++s) {
    if (orbit_of[s] >= 0)
      continue;
    std::vector<std::size_t> orb{s};
    orbit_of[s] = static_cast<int>(orbits.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto const &gen : res.group.generators()) {
        std::vector<Vertex> img;
        for (Vertex x : ovals[orb[i]])
          img.push_back(gen[x]);
        std::sort(img.begin(), img.end());
        std::size_t j = oval_index.at(img);
        if (orbit_of[j] < 0) {
          orbit_of[j] = orbit_of[s];
          orb.push_back(j);
        }
      }
    orbits.push_back(std::move(orb));
  }

  // The S(3,6,22) axiom decides which orbit to use.
  constexpr Vertex infinity = 21;
  for (auto const &orb : orbits) {
    std::vector<std::vector<Vertex>> blocks;
    for (auto const &l : lines) {
      auto b = l;
      b.push_back(infinity);
      blocks.push_back(b);
    }
    for (std::size_t i : orb)
      blocks.push_back(ovals[i]);
    std::vector<int> count(22 * 22 * 22, 0);
    for (auto const &b : blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          for (std::size_t k = j + 1; k < b.size(); ++k)
            ++count[(b[i] * 22 + b[j]) * 22 + b[k]];
    bool ok = blocks.size() == 77;
    for (Vertex a = 0; a < 22 && ok; ++a)
      for (Vertex b = a + 1; b < 22 && ok; ++b)
        for (Vertex c = b + 1; c < 22 && ok; ++c)
          ok = count[(a * 22 + b) * 22 + c] == 1;
    if (ok)
      return blocks;
  }
  throw InvariantError("no hyperoval orbit yields S(3,6,22)");
}

Graph higman_sims()
{
  auto blocks = steiner_3_6_22();
  // 0 = *, 1..22 = points, 23..99 = blocks.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex p = 0; p < 22; ++p)
    e.emplace_back(0, 1 + p);
  for (Vertex b = 0; b < blocks.size(); ++b)
    for (Vertex p : blocks[b])
      e.emplace_back(1 + p, 23 + b);
  for (Vertex a = 0; a < blocks.size(); ++a)
    for (Vertex b = a + 1; b < blocks.size(); ++b) {
      std::vector<Vertex> common;
      std::set_intersection(blocks[a].begin(), blocks[a].end(), blocks[b].begin(),
                            blocks[b].end(), std::back_inserter(common));
      if (common.empty())
        e.emplace_back(23 + a, 23 + b);
    }
  return Graph(100, e);
}

}  // namespace groupfact::arcgraph
