#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::arcgraph {

using permcore::PermGroup;
using permcore::Permutation;
using Vertex = std::uint32_t;

// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
  Graph() = default;
  // Throws PreconditionError on loops, duplicate edges or bad endpoints.
  Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const &edges);

  std::size_t n() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::vector<Vertex> const &neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * n() + v] != 0; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  std::size_t edges_ = 0;
};

// .edg: "graph <n>", then one "u v" pair per line (0-based); '#' comments.
Graph parse_edg(std::string const &text, std::string const &source = "<input>");
Graph load_edg(std::string const &path);
std::string to_edg(Graph const &g);

// ------------------------------------------------------------ invariants

std::optional<std::size_t> valency(Graph const &g);  // nullopt if irregular
std::optional<std::size_t> girth(Graph const &g);    // nullopt if acyclic
bool is_connected(Graph const &g);
bool is_bipartite(Graph const &g);
std::vector<std::vector<Vertex>> components(Graph const &g);

// ------------------------------------------------------------ named graphs

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cube_graph(std::size_t d);
Graph petersen();           // Kneser graph K(5,2)
Graph hoffman_singleton();  // Robertson's pentagon/pentagram model
Graph higman_sims();        // from S(3,6,22) built on PG(2,4)

// Blocks of the Steiner system S(3,6,22) on points 0..21 (point 21 is the
// point added to the lines of PG(2,4)). Throws InvariantError if the axiom
// check fails for every hyperoval orbit.
std::vector<std::vector<Vertex>> steiner_3_6_22();

// ------------------------------------------------------------ automorphisms

inline constexpr std::size_t kAutVertexBound = 300;

bool is_automorphism(Graph const &g, Permutation const &p);
// Full automorphism group: equitable refinement with individualization and
// backtracking; orbits of the group found so far prune the search.
PermGroup graph_automorphisms(Graph const &g, std::size_t bound = kAutVertexBound);
// A vertex bijection a -> b that is an isomorphism, if any.
std::optional<Permutation> find_isomorphism(Graph const &a, Graph const &b);
bool are_isomorphic(Graph const &a, Graph const &b);

// ------------------------------------------------------------ arc transitivity

struct ArcReport {
  bool connected = false;
  std::optional<std::size_t> valency;
  std::optional<std::size_t> girth;
  bool transitive_on_vertices = false;
  int s_max = -1;  // -1: not vertex-transitive; capped at cap
  bool cap_reached = false;
};
inline constexpr int kDefaultArcCap = 4;
// Throws PreconditionError if a generator of g is not an automorphism.
ArcReport s_arc_transitivity(Graph const &graph, PermGroup const &g, int cap = kDefaultArcCap);

struct LocalAction {
  BigInt stabilizer_order;    // |G_v|
  PermGroup local_image;      // G_v on Gamma(v), points indexed as neighbors(v)
  BigInt local_order;
  BigInt kernel_order;        // |G_v^[1]|
  Vertex w = 0;               // the neighbour used for the edge check
  BigInt edge_kernel_order;   // |G_v^[1] cap G_w^[1]|
  BigInt arc_image_order;     // |(G_vw)^Gamma(w)|
  bool divides = false;       // |G_v^[1]| / |G_v^[1] cap G_w^[1]| divides arc_image_order
};
// Throws PreconditionError if g is not vertex-transitive.
LocalAction local_action(Graph const &graph, PermGroup const &g, Vertex v);

struct NormalQuotient {
  Graph graph;
  std::vector<std::size_t> orbit_of;  // vertex -> quotient vertex
  bool few_orbits = false;            // fewer than 3 orbits
  bool semiregular = false;           // every N_v trivial
};
// Throws PreconditionError if n is not normal in g or g is not a group of
// automorphisms.
NormalQuotient normal_quotient(Graph const &graph, PermGroup const &g, PermGroup const &n);

// ------------------------------------------------------------ coset and Cayley graphs

struct CosetGraphSpec {
  PermGroup g;
  PermGroup k;
  Permutation elt;
};

struct CosetGraph {
  Graph graph;
  std::vector<Permutation> transversal;  // vertex -> canonical coset rep
  std::size_t valency = 0;               // |K| / |K cap K^g|
  bool connected = false;                // <K, g> = G
};
// Vertices are the right cosets of K; Kx ~ Ky iff yx^-1 in KgK. Throws
// PreconditionError if the spec invariants fail.
CosetGraph coset_graph(CosetGraphSpec const &spec);

// Vertices are the elements of r in element-table order; x ~ y iff
// yx^-1 in s. Throws PreconditionError unless s is inverse-closed, lies in
// r and avoids the identity.
Graph cayley_graph(PermGroup const &r, std::vector<Permutation> const &s);

struct TwoArcCandidate {
  PermGroup m;
  Permutation w;
};
// Subgroups M < K with K 2-transitive on [K:M], <K, N_G(M)> = G, and a
// 2-element w in N_G(M) with w^2 in K, K cap K^w = M and <K, w> = G.
std::vector<TwoArcCandidate> two_arc_candidates(PermGroup const &g, PermGroup const &k);

// Groups of order n (1 <= n <= 12), one per isomorphism type.
std::vector<std::pair<std::string, PermGroup>> small_group_catalog(std::size_t n);
inline constexpr std::size_t kCayleyCatalogMax = 12;
// Brute force over the catalog and all inverse-closed connection sets of
// the right size. Throws BoundError if |V| exceeds the catalog.
bool is_cayley(Graph const &graph);

// A Sylow p-subgroup, grown from a random p-element through normalizers.
PermGroup sylow_subgroup(PermGroup const &g, std::uint64_t p, std::uint64_t seed = 0);

}  // namespace groupfact::arcgraph
