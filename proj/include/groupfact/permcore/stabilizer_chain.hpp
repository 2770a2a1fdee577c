#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/permcore/permutation.hpp"

namespace groupfact::permcore {

// Base and strong generating set built by deterministic Schreier-Sims.
// Transversals are stored as Schreier trees, so memory stays linear in the
// degree per level.
class StabilizerChain {
public:
  // base_prefix points come first in the base, in the given order, even when
  // their basic orbits are trivial. Remaining base points are the smallest
  // points moved by the residues that need them.
  StabilizerChain(std::size_t degree, std::vector<Permutation> const &generators,
                  std::vector<Point> const &base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> const &base() const { return base_; }

  BigInt order() const;

  // Residue after sifting and the index of the level where sifting stopped
  // (length() if it went through every level).
  std::pair<Permutation, std::size_t> sift(Permutation p) const;
  bool contains(Permutation const &p) const;

  std::vector<Point> const &orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point x) const { return levels_[level].label[x] != kNone; }

  // Generators of the pointwise stabilizer of base[0..level-1].
  std::vector<Permutation> const &generators(std::size_t level) const
  {
    return levels_[level].gens;
  }
  std::vector<Permutation> strong_generators() const;

  // u with base[level]^u = beta, built from level generators.
  Permutation transversal(std::size_t level, Point beta) const;

  Permutation random_element(std::mt19937_64 &rng) const;

  // Calls f on every group element; stops early when f returns false.
  template <class F>
  void for_each_element(F &&f) const;

private:
  static constexpr std::int32_t kNone = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Permutation> inv;
    std::vector<std::int32_t> label;  // generator index reaching the point
    std::vector<Point> orbit;
  };

  void add_level(Point b);
  void rebuild_orbit(Level &lvl);
  void add_generator(std::size_t level, Permutation const &g);
  void apply_inverse_path(Level const &lvl, Point beta, std::vector<Point> &h) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

template <class F>
void StabilizerChain::for_each_element(F &&f) const
{
  // Every element is u_{k-1} ... u_1 u_0 with u_i from level i.
  std::size_t k = levels_.size();
  std::vector<std::vector<Permutation>> trans(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Point b : levels_[i].orbit)
      trans[i].push_back(transversal(i, b));

  std::vector<std::size_t> idx(k, 0);
  std::vector<Permutation> partial(k + 1, Permutation(degree_));
  // partial[i] = product of the chosen factors from level k-1 down to level i.
  for (std::size_t i = k; i-- > 0;)
    partial[i] = compose(partial[i + 1], trans[i][0]);

  for (;;) {
    if (!f(partial[0]))
      return;
    std::size_t i = 0;
    while (i < k && ++idx[i] == trans[i].size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == k)
      return;
    for (std::size_t j = i + 1; j-- > 0;)
      partial[j] = compose(partial[j + 1], trans[j][idx[j]]);
  }
}

}  // namespace groupfact::permcore
