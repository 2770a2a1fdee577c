#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/gfmat/matgroup.hpp"
#include "groupfact/permcore/element_table.hpp"
#include "groupfact/permcore/grp_io.hpp"
#include "groupfact/permcore/named_groups.hpp"

namespace groupfact::factorlab {

using namespace permcore;

namespace {

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.push_back("");
  return out;
}

BigInt parse_order(std::string const &s, std::string const &source, std::size_t line)
{
  BigInt v;
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || v.set_str(s, 10) != 0 || v <= 0)
    throw ParseError(source, line, "bad order '" + s + "'");
  return v;
}

std::vector<BigInt> parse_orders(std::string const &s, std::string const &source, std::size_t line)
{
  std::vector<BigInt> out;
  for (auto const &p : split(s, ','))
    out.push_back(parse_order(p, source, line));
  return out;
}

bool parse_flag(std::string const &s, std::string const &source, std::size_t line)
{
  if (s == "1")
    return true;
  if (s == "0")
    return false;
  throw ParseError(source, line, "bad flag '" + s + "'");
}

bool contains_order(std::vector<BigInt> const &v, BigInt const &x)
{
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Projective action of the isometry group on the orbit of e_1.
PermGroup classical_on_points(gfmat::FormKind kind, std::size_t dim, std::uint64_t q)
{
  auto s = gfmat::make_formed_space(kind, dim, q);
  auto gens = gfmat::form_stabilizer_generators(s);
  return gfmat::mat_to_perm(gens, {s.basis_vector(s.e(1))}, gfmat::kDefaultDegreeBound, true)
      .group;
}

PermGroup certified(PermGroup g, BigInt const &order, std::string const &name)
{
  if (g.order() != order)
    throw InvariantError(name + ": generators give order " + g.order().get_str());
  return g;
}

}  // namespace

// ------------------------------------------------------------ dataset

std::vector<TableRow> parse_table_rows(std::string const &text, std::string const &source)
{
  std::vector<TableRow> rows;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    auto f = split(line, '\t');
    if (f.size() != 10)
      throw ParseError(source, lineno, "expected 10 tab-separated fields, got " +
                                           std::to_string(f.size()));
    TableRow r;
    r.table_id = f[0];
    r.row = f[1];
    r.group = f[2];
    r.h_orders = parse_orders(f[3], source, lineno);
    r.k_orders = parse_orders(f[4], source, lineno);
    r.h_solvable = parse_flag(f[5], source, lineno);
    r.k_solvable = parse_flag(f[6], source, lineno);
    if (f[7] != "-")
      r.k_simple = parse_flag(f[7], source, lineno);
    r.mode = f[8];
    if (r.mode != "search" && r.mode != "targeted" && r.mode != "skip")
      throw ParseError(source, lineno, "bad mode '" + r.mode + "'");
    r.anchor = f[9];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TableRow> load_table_rows(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(path, 0, "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table_rows(ss.str(), path);
}

std::string default_data_dir()
{
  if (char const *env = std::getenv("GROUPFACT_DATA_DIR"))
    return env;
  return GROUPFACT_DATA_DIR;
}

std::vector<TableRow> default_table_rows()
{
  return load_table_rows(default_data_dir() + "/tables.tsv");
}

// ------------------------------------------------------------ matching

bool row_matches(TableRow const &row, FactorizationRecord const &rec)
{
  if (!rec.is_factorization || rec.group_id != row.group)
    return false;
  if (!contains_order(row.h_orders, rec.h_order) || !contains_order(row.k_orders, rec.k_order))
    return false;
  if (rec.h_solvable != row.h_solvable || rec.k_solvable != row.k_solvable)
    return false;
  if (row.k_simple && *row.k_simple != rec.k_simple)
    return false;
  return true;
}

TableCheck check_table(std::string const &table_id, std::vector<TableRow> const &rows,
                       std::vector<FactorizationRecord> const &computed)
{
  TableCheck out;
  out.table_id = table_id;
  std::set<std::string> groups;
  std::vector<char> used(computed.size(), 0);
  for (auto const &row : rows) {
    if (row.table_id != table_id)
      continue;
    RowStatus st{row, "skipped"};
    if (row.mode != "skip") {
      groups.insert(row.group);
      ++out.expected;
      st.status = "missing";
      for (std::size_t i = 0; i < computed.size(); ++i)
        if (row_matches(row, computed[i])) {
          used[i] = 1;
          st.status = "matched";
        }
      if (st.status == "matched")
        ++out.matched;
      else if (row.mode == "targeted")
        st.status = "inconclusive";
    }
    out.rows.push_back(std::move(st));
  }
  for (std::size_t i = 0; i < computed.size(); ++i)
    if (!used[i] && groups.count(computed[i].group_id))
      out.extra.push_back(computed[i]);
  return out;
}

// ------------------------------------------------------------ named groups

PermGroup named_group(std::string const &name)
{
  static std::regex const re(R"(^(PSL|PGL|PGammaL)(\d+)\((\d+)\)$)");
  std::smatch m;
  if (name == "M11") {
    PermGroup g = certified(load_grp(default_data_dir() + "/m11.grp"), 7920, "M11");
    if (!is_nonabelian_simple(g))
      throw InvariantError("M11: shipped generators do not give a simple group");
    return g;
  }
  if (name == "PSp4(3)" || name == "PSU4(2)")
    return certified(classical_on_points(gfmat::FormKind::symplectic, 4, 3), 25920, name);
  if (name == "PSU3(3)")
    return certified(classical_on_points(gfmat::FormKind::unitary, 3, 3), 6048, name);
  if (std::regex_match(name, m, re)) {
    std::size_t n = std::stoul(m[2]);
    std::uint64_t q = std::stoull(m[3]);
    bool prime = q > 1;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0)
        prime = false;
    if (m[1] == "PSL") {
      if (n == 2 && prime)
        return psl2_prime(q);
      return gfmat::psl_on_points(n, q);
    }
    if (m[1] == "PGammaL")
      return gfmat::pgaml_on_points(n, q);
    if (n == 2 && prime)
      return pgl2_prime(q);
    return gfmat::pgl_on_points(n, q);
  }
  throw PreconditionError("unknown group name '" + name + "'");
}

// ------------------------------------------------------------ targeted mode

std::vector<TargetedResult> targeted_search(PermGroup const &g, std::string const &label,
                                            std::vector<TargetPair> const &pairs,
                                            std::uint64_t seed, std::size_t trials)
{
  constexpr std::size_t kAttempts = 12;
  BigInt n = g.order();
  for (auto const &p : pairs)
    if (!divides(p.h_order, n) || !divides(p.k_order, n))
      throw PreconditionError("targeted_search: target order does not divide |G|");

  // Found subgroups, searched again for smaller targets (smallest first).
  std::vector<PermGroup> pool;
  auto remember = [&](PermGroup const &s) {
    for (auto const &p : pool)
      if (p.order() == s.order() && is_subgroup(s, p))
        return;
    pool.push_back(s);
    std::stable_sort(pool.begin(), pool.end(),
                     [](PermGroup const &a, PermGroup const &b) { return a.order() < b.order(); });
  };
  auto find = [&](BigInt const &t, std::uint64_t s) -> std::optional<PermGroup> {
    std::vector<PermGroup> hosts;
    for (auto const &p : pool)
      if (p.order() > t && divides(t, p.order()))
        hosts.push_back(p);
    hosts.push_back(g);
    for (std::size_t i = 0; i < hosts.size(); ++i)
      if (auto h = find_subgroup_by_order(hosts[i], t, trials, s + 7919 * i)) {
        remember(*h);
        return h;
      }
    return std::nullopt;
  };

  // Large targets first so that the pool can host the small ones.
  std::set<BigInt, std::greater<>> orders;
  for (auto const &p : pairs) {
    orders.insert(p.h_order);
    orders.insert(p.k_order);
  }
  for (auto const &t : orders)
    find(t, seed);

  std::vector<TargetedResult> out;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    auto const &pair = pairs[pi];
    TargetedResult res{pair, std::nullopt};
    for (std::size_t a = 0; a < kAttempts && !res.record; ++a) {
      std::uint64_t s = seed + 1000003ull * (pi + 1) + 104729ull * a;
      auto h = find(pair.h_order, s);
      auto k = find(pair.k_order, s + 1);
      if (!h || !k)
        continue;
      if (pair.h_solvable && is_solvable(*h) != *pair.h_solvable)
        continue;
      if (pair.k_solvable && is_solvable(*k) != *pair.k_solvable)
        continue;
      auto rec = verify_factorization(g, *h, *k, label);
      if (pair.k_simple && rec.k_simple != *pair.k_simple)
        continue;
      if (rec.is_factorization) {
        rec.provenance = Provenance::targeted;
        res.record = std::move(rec);
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

// ------------------------------------------------------------ running a table

TableCheck run_table(std::string const &table_id, std::vector<TableRow> const &rows,
                     std::uint64_t seed, unsigned threads)
{
  SearchOptions opts;
  opts.threads = threads;
  std::map<std::string, std::vector<FactorizationRecord>> searched;
  std::vector<FactorizationRecord> computed;
  bool both = table_id == "tab4";
  for (auto const &row : rows) {
    if (row.table_id != table_id || row.mode == "skip")
      continue;
    PermGroup g = named_group(row.group);
    if (row.mode == "search") {
      if (searched.count(row.group))
        continue;
      auto recs = both ? two_solvable_search(g, row.group, opts)
                       : search_solvable_factorizations(g, row.group, opts);
      searched[row.group] = recs;
      computed.insert(computed.end(), recs.begin(), recs.end());
    } else {
      std::vector<TargetPair> pairs;
      for (auto const &h : row.h_orders)
        for (auto const &k : row.k_orders)
          pairs.push_back({h, k, row.h_solvable, row.k_solvable, row.k_simple});
      for (auto &res : targeted_search(g, row.group, pairs, seed))
        if (res.record)
          computed.push_back(std::move(*res.record));
    }
  }
  std::sort(computed.begin(), computed.end(), [](auto const &a, auto const &b) {
    return a.group_id != b.group_id ? a.group_id < b.group_id : signature_less(a, b);
  });
  return check_table(table_id, rows, computed);
}

}  // namespace groupfact::factorlab
