#include "groupfact/permcore/perm_group.hpp"

#include <algorithm>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

PermGroup::PermGroup() : degree_(0), cache_(std::make_shared<Cache>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
  : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>())
{
  for (auto const &g : gens_)
    if (g.degree() != degree_)
      throw PreconditionError("PermGroup: generator degree mismatch");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::shared_ptr<StabilizerChain const> chain)
  : PermGroup(degree, std::move(generators))
{
  std::call_once(cache_->once, [&] { cache_->chain = std::move(chain); });
}

StabilizerChain const &PermGroup::chain() const { return *chain_ptr(); }

std::shared_ptr<StabilizerChain const> PermGroup::chain_ptr() const
{
  std::call_once(cache_->once, [&] {
    cache_->chain = std::make_shared<StabilizerChain const>(degree_, gens_);
  });
  return cache_->chain;
}

StabilizerChain const &build_chain(PermGroup const &g) { return g.chain(); }

BigInt order(PermGroup const &g) { return g.order(); }

bool contains(PermGroup const &g, Permutation const &p)
{
  if (p.degree() != g.degree())
    throw PreconditionError("contains: degree mismatch");
  return g.contains(p);
}

std::vector<Point> orbit(PermGroup const &g, Point x)
{
  if (x >= g.degree())
    throw PreconditionError("orbit: point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (auto const &s : g.generators()) {
      Point y = s[orb[i]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> orbits(PermGroup const &g)
{
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(g, x);
    for (Point y : orb)
      seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(PermGroup const &g)
{
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

StabilizerChain chain_with_base(PermGroup const &g, std::vector<Point> const &prefix)
{
  // Strong generators of an existing chain make the rebuild cheap.
  return StabilizerChain(g.degree(), g.chain().strong_generators(), prefix);
}

PermGroup pointwise_stabilizer(PermGroup const &g, std::vector<Point> const &points)
{
  auto ch = chain_with_base(g, points);
  std::size_t k = 0;
  {
    std::vector<Point> seen;
    for (Point p : points)
      if (std::find(seen.begin(), seen.end(), p) == seen.end())
        seen.push_back(p);
    k = seen.size();
  }
  if (k >= ch.length())
    return PermGroup(g.degree(), {});
  auto gens = ch.generators(k);
  auto sub = std::make_shared<StabilizerChain const>(g.degree(), gens);
  return PermGroup(g.degree(), gens, sub);
}

bool is_subgroup(PermGroup const &h, PermGroup const &g)
{
  if (h.degree() != g.degree())
    return false;
  for (auto const &x : h.generators())
    if (!g.contains(x))
      return false;
  return true;
}

bool is_normal(PermGroup const &n, PermGroup const &g)
{
  if (!is_subgroup(n, g))
    return false;
  for (auto const &x : n.generators())
    for (auto const &s : g.generators())
      if (!n.contains(conjugate(x, s)))
        return false;
  return true;
}

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &elements)
{
  std::vector<Permutation> gens;
  auto chain = std::make_shared<StabilizerChain const>(g.degree(), gens);
  auto add = [&](Permutation const &c) {
    if (chain->contains(c))
      return;
    gens.push_back(c);
    auto sg = chain->strong_generators();
    sg.push_back(c);
    chain = std::make_shared<StabilizerChain const>(g.degree(), sg);
  };

  for (auto const &e : elements)
    add(e);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto const &s : g.generators())
      add(conjugate(gens[i], s));
  return PermGroup(g.degree(), gens, chain);
}

PermGroup derived_subgroup(PermGroup const &g)
{
  auto const &gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

bool is_solvable(PermGroup const &g)
{
  PermGroup cur = g;
  BigInt ord = cur.order();
  while (ord != 1) {
    PermGroup d = derived_subgroup(cur);
    BigInt dord = d.order();
    if (dord == ord)
      return false;
    cur = d;
    ord = dord;
  }
  return true;
}

bool is_perfect(PermGroup const &g) { return derived_subgroup(g).order() == g.order(); }

std::optional<std::size_t> derived_length(PermGroup const &g)
{
  PermGroup cur = g;
  BigInt ord = cur.order();
  std::size_t len = 0;
  while (ord != 1) {
    PermGroup d = derived_subgroup(cur);
    BigInt dord = d.order();
    if (dord == ord)
      return std::nullopt;
    cur = d;
    ord = dord;
    ++len;
  }
  return len;
}

PermGroup perfect_residual(PermGroup const &g)
{
  PermGroup cur = g;
  BigInt ord = cur.order();
  while (ord != 1) {
    PermGroup d = derived_subgroup(cur);
    BigInt dord = d.order();
    if (dord == ord)
      return cur;
    cur = d;
    ord = dord;
  }
  return cur;
}

PermGroup conjugate_group(PermGroup const &g, Permutation const &x)
{
  std::vector<Permutation> gens;
  for (auto const &s : g.generators())
    gens.push_back(conjugate(s, x));
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup with_reduced_generators(PermGroup const &g)
{
  std::vector<Permutation> kept;
  std::shared_ptr<StabilizerChain const> chain =
    std::make_shared<StabilizerChain const>(g.degree(), kept);
  BigInt target = g.order();
  for (auto const &s : g.generators()) {
    if (chain->order() == target)
      break;
    if (chain->contains(s))
      continue;
    kept.push_back(s);
    chain = std::make_shared<StabilizerChain const>(g.degree(), kept);
  }
  return PermGroup(g.degree(), kept, chain);
}

}  // namespace groupfact::permcore
