#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitInvariant = 4;

// Line-oriented report: '#' header lines (command echo and resolved
// configuration), tab-separated records, then one summary line.
struct Report {
  std::vector<std::string> header;
  std::vector<std::string> records;
  std::size_t passed = 0, failed = 0;

  void config(std::string const &key, std::string const &value);
  void record(std::vector<std::string> const &fields);
  void check(bool ok) { ++(ok ? passed : failed); }
  int exit_status() const { return failed == 0 ? kExitOk : kExitFailures; }
  std::string str() const;
};

// GROUPFACT_THREADS if set and positive, else the available cores.
unsigned resolve_threads();

// .grp, or .mgp acted on vectors (projective: on 1-spaces). Without seeds
// an .mgp group acts on all nonzero vectors when q^dim <= 10^5.
permcore::PermGroup load_group(std::string const &path, std::string const &seeds = "",
                               bool projective = false);

// Parses argv (without the program name), runs the command and writes the
// report to out and diagnostics to err. Returns the exit status.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

// ------------------------------------------------------------ acceptance battery

inline constexpr int kCriteria = 13;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // deterministic
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
};

CriterionResult run_criterion(int id, unsigned threads);

}  // namespace groupfact::cli
