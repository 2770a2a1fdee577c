#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "groupfact/permcore/element_table.hpp"
#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::permcore {

enum class EnumMode { exhaustive, solvable_only, targeted };

struct SubgroupClass {
  PermGroup rep;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t core_order = 0;
  bool solvable = false;
  std::vector<Elem> elements;  // sorted indices into the parent's element table
};

struct SubgroupList {
  PermGroup parent;
  std::shared_ptr<ElementTable const> table;
  std::vector<SubgroupClass> classes;  // sorted by order
  EnumMode mode = EnumMode::exhaustive;

  std::size_t total() const;
};

struct EnumOptions {
  std::size_t exhaustive_bound = 20000;
  std::size_t solvable_bound = 200000;
};

// Conjugacy classes of subgroups. Solvable subgroups come from cyclic
// extension starting at the trivial group; exhaustive mode also seeds with
// the perfect residuals of all two-generator subgroups.
SubgroupList enumerate_subgroups(PermGroup const &g, EnumMode mode, EnumOptions const &opts = {});

// Random search for a subgroup of the given order; nullopt means "not found".
std::optional<PermGroup> find_subgroup_by_order(PermGroup const &g, BigInt const &target_order,
                                                std::size_t trials = 2000,
                                                std::uint64_t seed = 0);

}  // namespace groupfact::permcore
