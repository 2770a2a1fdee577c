#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupfact/bigint.hpp"
#include "groupfact/permcore/perm_group.hpp"
#include "groupfact/permcore/subgroups.hpp"

namespace groupfact::factorlab {

using permcore::PermGroup;

enum class Provenance { searched, targeted, derived };
std::string to_string(Provenance p);

struct FactorizationRecord {
  std::string group_id;
  BigInt g_order, h_order, k_order;
  BigInt hk_order;    // |H cap K|; meaningful when is_factorization
  BigInt orbit_size;  // length of the H-orbit on [G:K]
  bool is_factorization = false;
  bool h_solvable = false, k_solvable = false;
  bool h_core_free = false, k_core_free = false;
  bool k_simple = false;
  Provenance provenance = Provenance::searched;
  std::size_t multiplicity = 1;  // class pairs sharing this signature
  PermGroup h, k;                // one witness pair

  // (|G|, |H|, |K|, |H cap K|, H_solv, K_solv, H_cf, K_cf), tab-separated.
  std::string signature_line() const;
};
bool signature_less(FactorizationRecord const &a, FactorizationRecord const &b);

// G = HK by transitivity of H on [G:K]; fills |H cap K| = |H||K|/|G| on
// success. Throws PreconditionError if H or K is not a subgroup of G.
FactorizationRecord verify_factorization(PermGroup const &g, PermGroup const &h,
                                         PermGroup const &k, std::string const &label = "");

// The equivalent criteria for G = HK on one pair.
struct CriteriaReport {
  BigInt hk_order;   // brute force
  bool order_equation = false;  // |H cap K||G| = |H||K|
  bool inequality = false;      // |G| <= |H||K|/|H cap K|
  bool h_transitive = false;    // H transitive on [G:K]
  bool k_transitive = false;    // K transitive on [G:H]
  bool agree() const;
};
CriteriaReport factorization_criteria(PermGroup const &g, PermGroup const &h, PermGroup const &k);

// |A cap B| by brute force over the smaller group (bounded), else by the
// orbit of the coset B under A.
BigInt intersection_order(PermGroup const &a, PermGroup const &b);

struct DivisibilityAudit {
  BigInt hl_order, kl_order;  // |H cap L|, |K cap L|
  bool a = false, b = false, c = false, d = false;
  bool all() const { return a && b && c && d; }
};
// Divisibilities implied by G = HK for a normal subgroup L. Throws
// PreconditionError if L is not normal in G.
DivisibilityAudit divisibility_audit(PermGroup const &g, PermGroup const &l, PermGroup const &h,
                                     PermGroup const &k);

// For G = HK and H <= M <= G: the certified factorization M = H (K cap M).
// Throws PreconditionError if G != HK or H is not inside M.
FactorizationRecord descend_factorization(PermGroup const &g, PermGroup const &h,
                                                         PermGroup const &k, PermGroup const &m);
// K cap M as a group (bounded by |K|).
PermGroup intersect_subgroup(PermGroup const &k, PermGroup const &m, std::size_t bound = 200000);

// For M = H (K cap M): evaluates G = HK and G = MK independently and
// throws InvariantError if they disagree.
bool lift_factorization(PermGroup const &g, PermGroup const &m, PermGroup const &k,
                        PermGroup const &h);

struct SearchOptions {
  unsigned threads = 1;
  permcore::EnumOptions enum_options;
};

// Class-pair scans over a subgroup list (representatives only; G = HK is
// conjugation invariant). Records are merged by signature and sorted.
//   factorizations:            H, K core-free
//   solvable_factorizations:   H solvable, K core-free
//   two_solvable_search:       H, K solvable and core-free
std::vector<FactorizationRecord> factorizations(permcore::SubgroupList const &list,
                                                std::string const &label,
                                                SearchOptions const &opts = {});
std::vector<FactorizationRecord> search_solvable_factorizations(
    permcore::SubgroupList const &list, std::string const &label, SearchOptions const &opts = {});
std::vector<FactorizationRecord> two_solvable_search(permcore::SubgroupList const &list,
                                                     std::string const &label,
                                                     SearchOptions const &opts = {});

// Convenience wrappers that enumerate first (exhaustive mode for the
// solvable-factor search, solvable-only mode for the two-solvable search).
std::vector<FactorizationRecord> search_solvable_factorizations(PermGroup const &g,
                                                                std::string const &label,
                                                                SearchOptions const &opts = {});
std::vector<FactorizationRecord> two_solvable_search(PermGroup const &g, std::string const &label,
                                                     SearchOptions const &opts = {});

// Lattice helpers (indices into list.classes).
std::vector<std::size_t> maximal_subgroup_classes(permcore::SubgroupList const &list);
std::vector<std::size_t> core_free_maximal_subgroups(permcore::SubgroupList const &list);
// Solvable subgroups maximal in some non-solvable subgroup (G included).
std::vector<std::size_t> maximal_solvable_candidates(permcore::SubgroupList const &list);
// H among the candidates, K core-free.
std::vector<FactorizationRecord> maximal_solvable_factorizations(
    permcore::SubgroupList const &list, std::string const &label);
// H among the candidates of A <= G, K core-free in G.
std::vector<FactorizationRecord> maximal_solvable_factorizations_in(
    permcore::SubgroupList const &g_list, PermGroup const &a, std::string const &label);

// Targeted mode for groups above the enumeration bound.
struct TargetPair {
  BigInt h_order, k_order;
  // Optional structure constraints on the witnesses.
  std::optional<bool> h_solvable, k_solvable, k_simple;
};
struct TargetedResult {
  TargetPair pair;
  std::optional<FactorizationRecord> record;  // nullopt: inconclusive
};
std::vector<TargetedResult> targeted_search(PermGroup const &g, std::string const &label,
                                            std::vector<TargetPair> const &pairs,
                                            std::uint64_t seed = 0, std::size_t trials = 2000);

// ------------------------------------------------------------ table rows

struct TableRow {
  std::string table_id;
  std::string row;
  std::string group;
  std::vector<BigInt> h_orders;  // any of these
  std::vector<BigInt> k_orders;
  bool h_solvable = true;
  bool k_solvable = false;
  std::optional<bool> k_simple;
  std::string mode;    // search | targeted | skip
  std::string anchor;  // source note
};

std::vector<TableRow> parse_table_rows(std::string const &text, std::string const &source);
std::vector<TableRow> load_table_rows(std::string const &path);
std::string default_data_dir();
std::vector<TableRow> default_table_rows();

struct RowStatus {
  TableRow row;
  std::string status;  // matched | missing | inconclusive (targeted) | skipped
};
struct TableCheck {
  std::string table_id;
  std::vector<RowStatus> rows;
  std::vector<FactorizationRecord> extra;  // computed records matching no row
  std::size_t matched = 0, expected = 0;
};
bool row_matches(TableRow const &row, FactorizationRecord const &rec);
TableCheck check_table(std::string const &table_id, std::vector<TableRow> const &rows,
                       std::vector<FactorizationRecord> const &computed);

// Named groups used by the dataset: PSL2(p), PGL2(p), PSL2(16), PSL3(q),
// PSU3(3), PSp4(3), M11 (certified on load).
PermGroup named_group(std::string const &name);

// Computes the records for every non-skipped row of the table and checks
// them.
TableCheck run_table(std::string const &table_id, std::vector<TableRow> const &rows,
                     std::uint64_t seed = 0, unsigned threads = 1);

}  // namespace groupfact::factorlab
