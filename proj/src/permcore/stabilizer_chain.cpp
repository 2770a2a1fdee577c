#include "groupfact/permcore/stabilizer_chain.hpp"

#include <algorithm>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Permutation> const &generators,
                                 std::vector<Point> const &base_prefix)
  : degree_(degree)
{
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch");

  for (Point b : base_prefix) {
    if (b >= degree)
      throw PreconditionError("base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end())
      add_level(b);
  }

  std::vector<Permutation> strong;
  for (auto const &g : generators)
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);

  for (auto const &s : strong) {
    std::size_t j = 0;
    while (j < base_.size() && s[base_[j]] == base_[j])
      ++j;
    if (j == base_.size())
      add_level(s.first_moved());
    for (std::size_t l = 0; l <= j; ++l)
      add_generator(l, s);
  }
  for (auto &lvl : levels_)
    rebuild_orbit(lvl);

  schreier_sims();
}

void StabilizerChain::add_level(Point b)
{
  base_.push_back(b);
  Level lvl;
  lvl.base = b;
  lvl.label.assign(degree_, kNone);
  lvl.label[b] = kRoot;
  lvl.orbit.push_back(b);
  levels_.push_back(std::move(lvl));
}

void StabilizerChain::add_generator(std::size_t level, Permutation const &g)
{
  levels_[level].gens.push_back(g);
  levels_[level].inv.push_back(g.inverse());
}

void StabilizerChain::rebuild_orbit(Level &lvl)
{
  std::fill(lvl.label.begin(), lvl.label.end(), kNone);
  lvl.label[lvl.base] = kRoot;
  lvl.orbit.assign(1, lvl.base);
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    Point x = lvl.orbit[i];
    for (std::size_t g = 0; g < lvl.gens.size(); ++g) {
      Point y = lvl.gens[g][x];
      if (lvl.label[y] == kNone) {
        lvl.label[y] = static_cast<std::int32_t>(g);
        lvl.orbit.push_back(y);
      }
    }
  }
}

void StabilizerChain::apply_inverse_path(Level const &lvl, Point beta, std::vector<Point> &h) const
{
  // h <- h * u_beta^-1, walking the Schreier tree towards the root.
  while (lvl.label[beta] != kRoot) {
    auto const &inv = lvl.inv[static_cast<std::size_t>(lvl.label[beta])].images();
    for (auto &x : h)
      x = inv[x];
    beta = inv[beta];
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p) const
{
  if (p.degree() != degree_)
    throw PreconditionError("sift: degree mismatch");
  std::vector<Point> h = p.images();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    Point beta = h[levels_[i].base];
    if (levels_[i].label[beta] == kNone)
      return {Permutation::unchecked(std::move(h)), i};
    apply_inverse_path(levels_[i], beta, h);
  }
  return {Permutation::unchecked(std::move(h)), levels_.size()};
}

bool StabilizerChain::contains(Permutation const &p) const
{
  auto [res, lvl] = sift(p);
  return lvl == levels_.size() && res.is_identity();
}

BigInt StabilizerChain::order() const
{
  BigInt r = 1;
  for (auto const &lvl : levels_)
    r *= static_cast<unsigned long>(lvl.orbit.size());
  return r;
}

std::vector<Permutation> StabilizerChain::strong_generators() const
{
  std::vector<Permutation> out;
  for (auto const &lvl : levels_)
    for (auto const &g : lvl.gens)
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

Permutation StabilizerChain::transversal(std::size_t level, Point beta) const
{
  auto const &lvl = levels_[level];
  if (lvl.label[beta] == kNone)
    throw PreconditionError("point not in basic orbit");
  Permutation id(degree_);
  std::vector<Point> h = id.images();
  apply_inverse_path(lvl, beta, h);
  return Permutation::unchecked(std::move(h)).inverse();
}

Permutation StabilizerChain::random_element(std::mt19937_64 &rng) const
{
  Permutation r(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    auto const &orb = levels_[i].orbit;
    std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
    r = compose(r, transversal(i, orb[pick(rng)]));
  }
  return r;
}

void StabilizerChain::schreier_sims()
{
  std::vector<Point> h;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;

  while (i >= 0) {
    bool restart = false;
    std::size_t li = static_cast<std::size_t>(i);

    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restart; ++oi) {
      Point beta = levels_[li].orbit[oi];
      Permutation u = transversal(li, beta);

      for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
        Level const &lvl = levels_[li];
        Point gamma = lvl.gens[s][beta];
        if (lvl.label[gamma] == static_cast<std::int32_t>(s))
          continue;  // tree edge, Schreier generator is trivial

        compose_into(u, lvl.gens[s], h);
        apply_inverse_path(lvl, gamma, h);

        // Sift through the deeper levels.
        std::size_t j = li + 1;
        for (; j < levels_.size(); ++j) {
          Point b = h[levels_[j].base];
          if (levels_[j].label[b] == kNone)
            break;
          apply_inverse_path(levels_[j], b, h);
        }

        Permutation y = Permutation::unchecked(h);
        if (j == levels_.size() && y.is_identity())
          continue;

        if (j == levels_.size())
          add_level(y.first_moved());
        for (std::size_t l = li + 1; l <= j; ++l) {
          add_generator(l, y);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

}  // namespace groupfact::permcore
