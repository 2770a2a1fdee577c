#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/gfmat/forms.hpp"
#include "groupfact/gfmat/matrix.hpp"

namespace groupfact::constructions {

enum class ConstructionFamily { unitary, symplectic, odd_orthogonal, plus_orthogonal };

std::string to_string(ConstructionFamily f);
ConstructionFamily parse_construction_family(std::string const &name);

inline constexpr std::uint64_t kIndexBound = 1000000;

// H = R:S inside the parabolic stabilizer of <e_1..e_m>, and the target whose
// stabilizer is K: a vector, or (symplectic) a minus-type quadratic form.
struct ConstructionSpec {
  ConstructionFamily family = ConstructionFamily::unitary;
  std::size_t m = 0;
  std::uint64_t q = 0;
  gfmat::FormedSpace space;
  std::vector<gfmat::MatFq> r_generators;
  gfmat::MatFq singer;  // generator of S (Levi block embedding)
  std::vector<gfmat::MatFq> h_generators;  // r_generators then singer
  std::optional<gfmat::Vec> target_vector;
  std::optional<gfmat::MatFq> target_form;  // upper triangular
  BigInt h_order;  // measured
  BigInt r_order;  // measured
  BigInt expected_h_order;
  BigInt expected_r_order;
  BigInt expected_index;         // |G|/|K| from order formulas
  BigInt expected_intersection;  // |H cap K|
  BigInt g_order, k_order;       // the formula orders used for the index
};

// Builds and certifies the construction: every generator preserves the form
// and |H|, |R| match the formulas. Throws PreconditionError on bad
// parameters, BoundError above kIndexBound, InvariantError on a failed check.
ConstructionSpec build_construction(ConstructionFamily family, std::size_t m, std::uint64_t q);

struct ConstructionReport {
  ConstructionFamily family = ConstructionFamily::unitary;
  std::size_t m = 0;
  std::uint64_t q = 0;
  BigInt h_order;
  BigInt orbit_size;
  BigInt stabilizer_order;
  BigInt expected_index;
  BigInt expected_intersection;
  bool h_solvable = false;
  bool r_normal = false;
  bool lemma_c = false;  // |H cap K| |G| = |H| |K|
  std::optional<BigInt> witt_count;  // set when the ambient space is small
  bool pass = false;
};

// Orbit of the target under H; pass iff the orbit has the formula index and
// the stabilizer has the claimed intersection order.
ConstructionReport verify_construction(ConstructionSpec const &spec);

// Direct count of the targets of the same kind: vectors of the same norm, or
// minus-type quadratic forms polarizing to the symplectic form. nullopt when
// the ambient count exceeds the limit.
std::optional<BigInt> witt_count(ConstructionSpec const &spec, std::uint64_t limit = 100000);

struct BatteryEntry {
  ConstructionFamily family;
  std::size_t m;
  std::uint64_t q;
};
std::vector<BatteryEntry> default_battery();

// Builds and verifies every entry using up to `threads` workers; results are
// in input order. Entries that throw are reported as failures with message.
struct BatteryResult {
  BatteryEntry entry;
  std::optional<ConstructionReport> report;
  std::string error;
};
std::vector<BatteryResult> run_battery(std::vector<BatteryEntry> const &entries,
                                       unsigned threads = 1);

}  // namespace groupfact::constructions
