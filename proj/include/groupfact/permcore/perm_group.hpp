#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/permcore/permutation.hpp"
#include "groupfact/permcore/stabilizer_chain.hpp"

namespace groupfact::permcore {

// A permutation group given by generators. The stabilizer chain is built on
// first use and shared between copies; it never changes afterwards.
class PermGroup {
public:
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<StabilizerChain const> chain);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return gens_; }
  Permutation identity() const { return Permutation(degree_); }

  StabilizerChain const &chain() const;
  std::shared_ptr<StabilizerChain const> chain_ptr() const;

  BigInt order() const { return chain().order(); }
  bool contains(Permutation const &p) const { return chain().contains(p); }
  bool is_trivial() const { return order() == 1; }

private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<StabilizerChain const> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

// ---- operations ---------------------------------------------------------

StabilizerChain const &build_chain(PermGroup const &g);
BigInt order(PermGroup const &g);
bool contains(PermGroup const &g, Permutation const &p);

// Sorted orbit of x.
std::vector<Point> orbit(PermGroup const &g, Point x);
std::vector<std::vector<Point>> orbits(PermGroup const &g);
bool is_transitive(PermGroup const &g);

// Chain whose base starts with the given points.
StabilizerChain chain_with_base(PermGroup const &g, std::vector<Point> const &prefix);

// Pointwise stabilizer of the given points.
PermGroup pointwise_stabilizer(PermGroup const &g, std::vector<Point> const &points);

bool is_subgroup(PermGroup const &h, PermGroup const &g);
bool is_normal(PermGroup const &n, PermGroup const &g);

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &elements);
PermGroup derived_subgroup(PermGroup const &g);
bool is_solvable(PermGroup const &g);
bool is_perfect(PermGroup const &g);
// Length of the derived series, or nullopt for non-solvable groups.
std::optional<std::size_t> derived_length(PermGroup const &g);

// Stops at the first member whose derived subgroup equals itself.
PermGroup perfect_residual(PermGroup const &g);

PermGroup conjugate_group(PermGroup const &g, Permutation const &x);

// Reduces a generating list: drops generators already in the span of the
// previous ones.
PermGroup with_reduced_generators(PermGroup const &g);

}  // namespace groupfact::permcore
