#include "groupfact/permcore/cosets.hpp"

#include <unordered_map>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

Permutation canonical_coset_rep(StabilizerChain const &h_chain, Permutation const &x)
{
  Permutation cur = x;
  for (std::size_t i = 0; i < h_chain.length(); ++i) {
    auto const &orb = h_chain.orbit(i);
    Point best = orb[0];
    for (Point g : orb)
      if (cur[g] < cur[best])
        best = g;
    if (best != h_chain.base()[i])
      cur = compose(h_chain.transversal(i, best), cur);
  }
  return cur;
}

namespace {

// Breadth-first enumeration of the cosets reachable from K by the given
// generators. Returns the canonical reps and, optionally, the action.
struct CosetBfs {
  std::vector<Permutation> reps;
  std::vector<std::vector<Point>> action;  // per generator
};

CosetBfs coset_bfs(PermGroup const &k, std::vector<Permutation> const &gens, std::size_t bound,
                   bool record_action)
{
  auto const &kc = k.chain();
  CosetBfs out;
  std::unordered_map<Permutation, Point, PermutationHash> index;
  Permutation first = canonical_coset_rep(kc, Permutation(k.degree()));
  index.emplace(first, 0);
  out.reps.push_back(std::move(first));
  if (record_action)
    out.action.assign(gens.size(), {});

  for (std::size_t i = 0; i < out.reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = canonical_coset_rep(kc, compose(out.reps[i], gens[s]));
      auto it = index.find(c);
      Point j;
      if (it == index.end()) {
        if (out.reps.size() >= bound)
          throw BoundError("coset enumeration exceeds index bound " + std::to_string(bound));
        j = static_cast<Point>(out.reps.size());
        index.emplace(c, j);
        out.reps.push_back(std::move(c));
      } else {
        j = it->second;
      }
      if (record_action)
        out.action[s].push_back(j);
    }
  }
  return out;
}

}  // namespace

CosetAction coset_action(PermGroup const &g, PermGroup const &h, std::size_t bound)
{
  if (!is_subgroup(h, g))
    throw PreconditionError("coset_action: h is not a subgroup of g");

  auto bfs = coset_bfs(h, g.generators(), bound, true);
  std::size_t n = bfs.reps.size();
  std::vector<Permutation> images;
  for (auto &a : bfs.action)
    images.push_back(Permutation(std::move(a)));

  if (BigInt(static_cast<unsigned long>(n)) * h.order() != g.order())
    throw InvariantError("coset enumeration is incomplete");
  return {PermGroup(n, std::move(images)), std::move(bfs.reps)};
}

std::size_t coset_orbit_size(PermGroup const &k, PermGroup const &l, std::size_t bound)
{
  if (k.degree() != l.degree())
    throw PreconditionError("coset_orbit_size: degree mismatch");
  return coset_bfs(k, l.generators(), bound, false).reps.size();
}

PermGroup action_kernel(PermGroup const &g, PermGroup const &image)
{
  std::size_t d = g.degree();
  std::size_t n = image.degree();
  if (image.generators().size() != g.generators().size())
    throw PreconditionError("action_kernel: generator count mismatch");

  // Elements fixing a base of the image act trivially; fix those points
  // first in the diagonal action on d + n points.
  std::vector<Point> prefix;
  for (Point b : image.chain().base())
    prefix.push_back(static_cast<Point>(d + b));

  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::vector<Point> im(d + n);
    auto const &a = g.generators()[i];
    auto const &b = image.generators()[i];
    for (Point x = 0; x < d; ++x)
      im[x] = a[x];
    for (Point x = 0; x < n; ++x)
      im[d + x] = static_cast<Point>(d + b[x]);
    combined.push_back(Permutation::unchecked(std::move(im)));
  }

  StabilizerChain ch(d + n, combined, prefix);
  std::vector<Permutation> kernel;
  if (ch.length() > prefix.size())
    for (auto const &s : ch.generators(prefix.size())) {
      std::vector<Point> im(s.images().begin(), s.images().begin() + static_cast<std::ptrdiff_t>(d));
      kernel.push_back(Permutation::unchecked(std::move(im)));
    }
  return PermGroup(d, std::move(kernel));
}

PermGroup core(PermGroup const &g, PermGroup const &h, std::size_t bound)
{
  auto ca = coset_action(g, h, bound);
  return action_kernel(g, ca.image);
}

PermGroup normalizer(PermGroup const &g, PermGroup const &m, std::size_t bound)
{
  if (!is_subgroup(m, g))
    throw PreconditionError("normalizer: m is not a subgroup of g");

  auto bfs = coset_bfs(m, g.generators(), bound, false);
  std::vector<Permutation> gens = m.generators();
  auto chain = std::make_shared<StabilizerChain const>(g.degree(), gens);

  for (auto const &t : bfs.reps) {
    if (chain->contains(t))
      continue;
    bool normalizes = true;
    for (auto const &s : m.generators())
      if (!m.contains(conjugate(s, t))) {
        normalizes = false;
        break;
      }
    if (!normalizes)
      continue;
    gens.push_back(t);
    chain = std::make_shared<StabilizerChain const>(g.degree(), gens);
  }
  return PermGroup(g.degree(), gens, chain);
}

}  // namespace groupfact::permcore
