#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::permcore {

using Elem = std::uint32_t;
inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

// Explicit list of all elements of a small group, with index lookup.
// Element order follows the stabilizer-chain enumeration.
class ElementTable {
public:
  explicit ElementTable(PermGroup const &g, std::size_t bound = 200000);

  PermGroup const &group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  Permutation const &element(Elem i) const { return elems_[i]; }

  // kNoElem if p is not an element.
  Elem find(Permutation const &p) const;
  Elem index_of(Permutation const &p) const;

  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::uint64_t e) const;
  std::uint64_t element_order(Elem a) const;

  std::vector<Elem> const &generator_indices() const { return gen_idx_; }
  // e -> s^-1 e s for the s-th generator of the group.
  std::vector<Elem> const &conjugation_by_generator(std::size_t s) const { return conj_[s]; }
  // e -> x^-1 e x for an arbitrary element.
  std::vector<Elem> conjugation_map(Elem x) const;

  // Sorted element list of the subgroup generated by the given elements.
  std::vector<Elem> closure(std::vector<Elem> const &gens) const;

  // One representative per conjugacy class, and class sizes.
  std::vector<Elem> conjugacy_class_reps() const;
  std::vector<std::size_t> conjugacy_class_sizes() const;

private:
  std::size_t slot_of(Permutation const &p) const;
  void insert(Elem i);

  PermGroup group_;
  std::vector<Permutation> elems_;
  std::vector<Elem> slots_;
  std::size_t mask_ = 0;
  Elem identity_ = kNoElem;
  std::vector<Elem> inverse_;
  std::vector<Elem> gen_idx_;
  std::vector<std::vector<Elem>> conj_;
};

// Nonabelian simple: nontrivial, and the normal closure of every
// nontrivial conjugacy class is the whole group. Uses an element table.
bool is_nonabelian_simple(PermGroup const &g, std::size_t bound = 200000);

}  // namespace groupfact::permcore
