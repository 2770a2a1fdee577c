#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/cli/cli.hpp"
#include "groupfact/constructions/constructions.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/gfmat/matgroup.hpp"
#include "groupfact/numth/numth.hpp"
#include "groupfact/permcore/grp_io.hpp"
#include "groupfact/permcore/named_groups.hpp"
#include "groupfact/permcore/subgroups.hpp"

namespace groupfact::cli {

using permcore::PermGroup;
using permcore::Permutation;

void Report::config(std::string const &key, std::string const &value)
{
  header.push_back("# config\t" + key + "\t" + value);
}

void Report::record(std::vector<std::string> const &fields)
{
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i)
    line += (i ? "\t" : "") + fields[i];
  records.push_back(std::move(line));
}

std::string Report::str() const
{
  std::ostringstream os;
  for (auto const &h : header)
    os << h << '\n';
  for (auto const &r : records)
    os << r << '\n';
  os << "summary\tpassed\t" << passed << "\tfailed\t" << failed << '\n';
  return os.str();
}

unsigned resolve_threads()
{
  if (char const *env = std::getenv("GROUPFACT_THREADS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::string str(BigInt const &v) { return v.get_str(); }
std::string yes(bool b) { return b ? "yes" : "no"; }

bool has_suffix(std::string const &s, std::string const &suf)
{
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::vector<gfmat::Vec> parse_seeds(std::string const &text, std::size_t dim)
{
  std::vector<gfmat::Vec> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::istringstream ps(part);
    gfmat::Vec v;
    long long x;
    while (ps >> x) {
      if (x < 0)
        throw PreconditionError("--seeds: negative element code");
      v.push_back(static_cast<gfmat::Fq>(x));
    }
    if (!ps.eof())
      throw PreconditionError("--seeds: expected integer element codes");
    if (v.empty())
      continue;
    if (v.size() != dim)
      throw PreconditionError("--seeds: vector length differs from the dimension");
    out.push_back(std::move(v));
  }
  if (out.empty())
    throw PreconditionError("--seeds: no vectors given");
  return out;
}

// Group argument: a .grp/.mgp file, S<n>, A<n>, or a dataset group name.
PermGroup resolve_group(std::string const &spec, std::string const &seeds, bool projective)
{
  if (has_suffix(spec, ".grp") || has_suffix(spec, ".mgp"))
    return load_group(spec, seeds, projective);
  std::smatch m;
  static std::regex const sym("^([SA])(\\d+)$");
  if (std::regex_match(spec, m, sym)) {
    std::size_t n = std::stoul(m[2]);
    if (n < 1 || n > 64)
      throw PreconditionError("degree out of range in '" + spec + "'");
    return m[1] == "S" ? permcore::symmetric_group(n) : permcore::alternating_group(n);
  }
  return factorlab::named_group(spec);
}

// "(0 1 2)(3 4)" with 0-based points, or a full image list "1 2 0 4 3".
Permutation parse_element(std::string const &text, std::size_t degree)
{
  if (text.find('(') == std::string::npos) {
    std::istringstream is(text);
    std::vector<permcore::Point> im;
    long long x;
    while (is >> x) {
      if (x < 0)
        throw PreconditionError("element: negative point");
      im.push_back(static_cast<permcore::Point>(x));
    }
    if (!is.eof() || im.size() != degree)
      throw PreconditionError("element: expected " + std::to_string(degree) + " images");
    return Permutation(im);
  }
  std::vector<std::vector<permcore::Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw PreconditionError("element: expected '('");
    auto close = text.find(')', i);
    if (close == std::string::npos)
      throw PreconditionError("element: unbalanced parenthesis");
    std::string body = text.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    std::vector<permcore::Point> c;
    long long x;
    while (is >> x) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree)
        throw PreconditionError("element: point out of range");
      c.push_back(static_cast<permcore::Point>(x));
    }
    if (!is.eof())
      throw PreconditionError("element: bad point in cycle");
    cycles.push_back(std::move(c));
    i = close + 1;
  }
  return Permutation::from_cycles(degree, cycles);
}

void echo_command(Report &rep, std::vector<std::string> const &args)
{
  std::string line = "# groupfact";
  for (auto const &a : args)
    line += " " + a;
  rep.header.push_back(line);
}

// ------------------------------------------------------------ commands

void cmd_verify_construction(Report &rep, std::string const &family, std::size_t m,
                             std::uint64_t q, unsigned threads)
{
  std::vector<constructions::BatteryEntry> entries;
  if (family.empty()) {
    entries = constructions::default_battery();
    rep.config("entries", "default battery");
  } else {
    entries.push_back({constructions::parse_construction_family(family), m, q});
    rep.config("entries", family + " m=" + std::to_string(m) + " q=" + std::to_string(q));
  }
  rep.config("threads", std::to_string(threads));
  rep.record({"family", "m", "q", "|H|", "orbit", "index", "stabilizer", "intersection",
              "witt_count", "status"});
  for (auto const &b : constructions::run_battery(entries, threads)) {
    std::vector<std::string> f{constructions::to_string(b.entry.family), std::to_string(b.entry.m),
                               std::to_string(b.entry.q)};
    if (!b.report) {
      f.insert(f.end(), {"-", "-", "-", "-", "-", "-", "error: " + b.error});
      rep.record(f);
      rep.check(false);
      continue;
    }
    auto const &r = *b.report;
    bool ok = r.pass && (!r.witt_count || *r.witt_count == r.expected_index);
    f.insert(f.end(), {str(r.h_order), str(r.orbit_size), str(r.expected_index),
                       str(r.stabilizer_order), str(r.expected_intersection),
                       r.witt_count ? str(*r.witt_count) : "-", ok ? "pass" : "FAIL"});
    rep.record(f);
    rep.check(ok);
  }
}

void cmd_search(Report &rep, std::string const &group, bool both_solvable, bool core_free,
                std::vector<std::string> const &targets, std::uint64_t seed, unsigned threads,
                std::string const &seeds, bool projective)
{
  if (both_solvable && core_free)
    throw CLI::ValidationError("--both-solvable and --core-free are exclusive");
  std::string mode = !targets.empty() ? "targeted"
                     : both_solvable  ? "both-solvable"
                     : core_free      ? "core-free"
                                      : "solvable-factor";
  rep.config("group", group);
  rep.config("mode", mode);
  rep.config("seed", std::to_string(seed));
  rep.config("threads", std::to_string(threads));
  PermGroup g = resolve_group(group, seeds, projective);
  rep.config("order", str(g.order()));

  if (!targets.empty()) {
    std::vector<factorlab::TargetPair> pairs;
    static std::regex const re("^(\\d+):(\\d+)$");
    for (auto const &t : targets) {
      std::smatch m;
      if (!std::regex_match(t, m, re))
        throw CLI::ValidationError("--target expects H:K orders, got '" + t + "'");
      factorlab::TargetPair tp;
      tp.h_order = BigInt(m[1].str());
      tp.k_order = BigInt(m[2].str());
      pairs.push_back(tp);
    }
    rep.record({"target", "G", "H", "K", "HK", "hsolv", "ksolv", "hcf", "kcf"});
    for (auto const &res : factorlab::targeted_search(g, group, pairs, seed)) {
      std::string t = str(res.pair.h_order) + ":" + str(res.pair.k_order);
      if (res.record)
        rep.records.push_back(t + "\t" + res.record->signature_line());
      else
        rep.record({t, "inconclusive"});
      rep.check(res.record.has_value());
    }
    return;
  }

  factorlab::SearchOptions opts;
  opts.threads = threads;
  std::vector<factorlab::FactorizationRecord> recs =
    both_solvable ? factorlab::two_solvable_search(g, group, opts)
    : core_free   ? factorlab::factorizations(
                      permcore::enumerate_subgroups(g, permcore::EnumMode::exhaustive,
                                                    opts.enum_options),
                      group, opts)
                  : factorlab::search_solvable_factorizations(g, group, opts);
  std::sort(recs.begin(), recs.end(), factorlab::signature_less);
  rep.record({"G", "H", "K", "HK", "hsolv", "ksolv", "hcf", "kcf", "classes"});
  for (auto const &r : recs) {
    rep.records.push_back(r.signature_line() + "\t" + std::to_string(r.multiplicity));
    rep.check(r.is_factorization);
  }
}

void cmd_check_table(Report &rep, std::string const &table, std::string const &data,
                     std::uint64_t seed, unsigned threads)
{
  std::string path = data.empty() ? factorlab::default_data_dir() + "/tables.tsv" : data;
  rep.config("table", table);
  rep.config("data", data.empty() ? "default" : data);
  rep.config("seed", std::to_string(seed));
  rep.config("threads", std::to_string(threads));
  auto rows = factorlab::load_table_rows(path);
  std::vector<std::string> ids;
  for (auto const &r : rows)
    if (std::find(ids.begin(), ids.end(), r.table_id) == ids.end())
      ids.push_back(r.table_id);
  if (table != "all") {
    if (std::find(ids.begin(), ids.end(), table) == ids.end())
      throw PreconditionError("unknown table '" + table + "'");
    ids = {table};
  }
  for (auto const &id : ids) {
    auto tc = factorlab::run_table(id, rows, seed, threads);
    for (auto const &rs : tc.rows)
      rep.record({"row", rs.row.table_id, rs.row.row, rs.row.group, rs.status});
    for (auto const &x : tc.extra)
      rep.records.push_back("extra\t" + id + "\t" + x.signature_line());
    rep.records.push_back("MATCHED " + std::to_string(tc.matched) + "/" +
                          std::to_string(tc.expected) + " EXPECTED");
    rep.check(tc.matched == tc.expected);
  }
}

void cmd_zsigmondy(Report &rep, std::uint64_t a, unsigned m)
{
  rep.config("a", std::to_string(a));
  rep.config("m", std::to_string(m));
  if (a < 2 || m < 2)
    throw PreconditionError("zsigmondy: need a >= 2 and m >= 2");
  auto p = numth::primitive_prime_divisors(big(a), m);
  if (p.primes.empty()) {
    rep.records.push_back("EXCEPTION; no primitive prime divisor");
  } else {
    std::string ps;
    for (auto const &r : p.primes)
      ps += (ps.empty() ? "" : " ") + str(r);
    rep.record({"primes", ps});
  }
  bool ok = p.primes.empty() == p.is_exception;
  for (auto const &r : p.primes)
    ok = ok && (r - 1) % m == 0;
  rep.check(ok);
}

void cmd_common_divisor(Report &rep, std::string const &group, std::string const &prime,
                        std::string const &family, std::uint64_t dim_max, std::uint64_t q_max,
                        bool all_records)
{
  auto row = [&](numth::CommonDivisorReport const &r) {
    rep.record({r.id, str(r.r), str(r.lhs), str(r.rhs), yes(r.inequality_holds), yes(r.equality),
                r.predicted_equality ? yes(*r.predicted_equality) : "-"});
  };
  if (!group.empty()) {
    if (prime.empty())
      throw CLI::ValidationError("common-divisor: a group needs a prime r");
    rep.config("group", group);
    rep.config("r", prime);
    auto r = numth::common_divisor_check(numth::SimpleGroupId::parse(group), BigInt(prime));
    rep.record({"group", "r", "|T|_r", "r|Out(T)|_r", "inequality", "equality", "predicted"});
    row(r);
    rep.check(r.inequality_holds && (!r.predicted_equality || *r.predicted_equality == r.equality));
    return;
  }
  rep.config("family", family.empty() ? "all" : family);
  rep.config("dim_max", std::to_string(dim_max));
  rep.config("q_max", std::to_string(q_max));
  std::optional<gfmat::Family> fam;
  if (!family.empty())
    fam = gfmat::parse_family(family);
  auto s = numth::common_divisor_sweep(fam, dim_max, q_max);
  rep.record({"group", "r", "|T|_r", "r|Out(T)|_r", "inequality", "equality", "predicted"});
  for (auto const &r : s.records) {
    bool ok = r.inequality_holds && (!r.predicted_equality || *r.predicted_equality == r.equality);
    if (all_records || !ok)
      row(r);
  }
  rep.record({"groups", std::to_string(s.groups)});
  rep.record({"records", std::to_string(s.records.size())});
  rep.record({"inequality_violations", std::to_string(s.inequality_violations)});
  rep.record({"equality_mismatches", std::to_string(s.equality_mismatches)});
  rep.check(s.inequality_violations == 0 && s.equality_mismatches == 0);
}

arcgraph::Graph resolve_graph(std::string const &name)
{
  if (name == "petersen")
    return arcgraph::petersen();
  if (name == "hoffman-singleton")
    return arcgraph::hoffman_singleton();
  if (name == "higman-sims")
    return arcgraph::higman_sims();
  if (has_suffix(name, ".edg"))
    return arcgraph::load_edg(name);
  throw PreconditionError("unknown graph '" + name +
                          "' (petersen, hoffman-singleton, higman-sims or a .edg file)");
}

void graph_records(Report &rep, arcgraph::Graph const &g, int cap)
{
  auto aut = arcgraph::graph_automorphisms(g);
  auto r = arcgraph::s_arc_transitivity(g, aut, cap);
  rep.record({"n", std::to_string(g.n())});
  rep.record({"edges", std::to_string(g.edge_count())});
  rep.record({"valency", r.valency ? std::to_string(*r.valency) : "irregular"});
  rep.record({"girth", r.girth ? std::to_string(*r.girth) : "none"});
  rep.record({"connected", yes(r.connected)});
  rep.record({"|Aut|", str(aut.order())});
  rep.record({"vertex_transitive", yes(r.transitive_on_vertices)});
  rep.record({"s_max", std::to_string(r.s_max) + (r.cap_reached ? " (cap)" : "")});
  rep.record({"bipartite", yes(arcgraph::is_bipartite(g))});
  if (g.n() <= arcgraph::kCayleyCatalogMax)
    rep.record({"cayley", yes(arcgraph::is_cayley(g))});
  rep.check(true);
}

void cmd_check_graph(Report &rep, std::string const &name, int cap)
{
  rep.config("graph", name);
  rep.config("cap", std::to_string(cap));
  graph_records(rep, resolve_graph(name), cap);
}

void write_edg(std::string const &path, arcgraph::Graph const &g)
{
  std::ofstream out(path);
  if (!out)
    throw ParseError(path, 0, "cannot write");
  out << arcgraph::to_edg(g);
}

void cmd_coset_graph(Report &rep, std::string const &gspec, std::string const &kspec,
                     std::string const &elt, std::string const &out, int cap)
{
  rep.config("g", gspec);
  rep.config("k", kspec);
  rep.config("element", elt.empty() ? "two-arc candidates" : elt);
  rep.config("cap", std::to_string(cap));
  rep.config("out", out.empty() ? "none" : out);
  PermGroup g = resolve_group(gspec, "", false);
  PermGroup k = resolve_group(kspec, "", false);
  if (k.degree() != g.degree())
    throw PreconditionError("coset-graph: G and K have different degrees");

  std::vector<Permutation> elements;
  if (!elt.empty()) {
    elements.push_back(parse_element(elt, g.degree()));
  } else {
    auto cands = arcgraph::two_arc_candidates(g, k);
    rep.record({"candidates", std::to_string(cands.size())});
    for (auto const &c : cands) {
      rep.record({"candidate", "|M|", str(c.m.order()), "w", c.w.to_cycle_string()});
      elements.push_back(c.w);
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto cg = arcgraph::coset_graph({g, k, elements[i]});
    rep.record({"element", elements[i].to_cycle_string()});
    rep.record({"coset_valency", std::to_string(cg.valency)});
    graph_records(rep, cg.graph, cap);
    if (!out.empty() && i == 0)
      write_edg(out, cg.graph);
  }
}

void cmd_report_all(Report &rep, unsigned threads)
{
  rep.config("threads", std::to_string(threads));
  rep.config("criteria", "1-" + std::to_string(kCriteria));
  for (int i = 1; i <= kCriteria; ++i) {
    auto r = run_criterion(i, threads);
    rep.record({"criterion", std::to_string(i), r.pass ? "PASS" : "FAIL", r.title});
    for (auto const &d : r.details)
      rep.record({"detail", std::to_string(i), d});
    rep.check(r.pass);
  }
}

}  // namespace

PermGroup load_group(std::string const &path, std::string const &seeds, bool projective)
{
  if (has_suffix(path, ".grp"))
    return permcore::load_grp(path);
  if (!has_suffix(path, ".mgp"))
    throw PreconditionError("unknown group file format '" + path + "' (.grp or .mgp)");
  auto mg = gfmat::load_mgp(path);
  std::vector<gfmat::Vec> pts;
  if (!seeds.empty()) {
    pts = parse_seeds(seeds, mg.dim);
  } else {
    std::uint64_t q = mg.field->q(), count = 1;
    for (std::size_t i = 0; i < mg.dim && count <= 100000; ++i)
      count *= q;
    if (count > 100000)
      throw PreconditionError(path + ": q^dim exceeds 10^5; pass --seeds");
    for (std::uint64_t c = 1; c < count; ++c) {
      gfmat::Vec v(mg.dim);
      std::uint64_t x = c;
      for (std::size_t i = 0; i < mg.dim; ++i) {
        v[i] = static_cast<gfmat::Fq>(x % q);
        x /= q;
      }
      pts.push_back(std::move(v));
    }
  }
  return gfmat::mat_to_perm(mg.generators, pts, gfmat::kDefaultDegreeBound, projective).group;
}

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Finite group factorization and arc-transitive graph toolkit", "groupfact"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");

  std::uint64_t seed = 0;
  int cap = arcgraph::kDefaultArcCap;

  auto *vc = app.add_subcommand("verify-construction",
                                "Verify a construction, or the default battery");
  std::string vc_family;
  std::size_t vc_m = 0;
  std::uint64_t vc_q = 0;
  vc->add_option("family", vc_family, "unitary | symplectic | odd-orthogonal | plus-orthogonal");
  vc->add_option("m", vc_m, "Witt index");
  vc->add_option("q", vc_q, "field order");

  auto *sf = app.add_subcommand("search-factorizations", "Search factorizations G = HK");
  std::string sf_group, sf_seeds;
  bool sf_both = false, sf_core = false, sf_proj = false;
  std::vector<std::string> sf_targets;
  sf->add_option("group", sf_group, "file.grp, file.mgp, S<n>, A<n> or a dataset name")->required();
  sf->add_flag("--both-solvable", sf_both, "H and K solvable and core-free");
  sf->add_flag("--core-free", sf_core, "H and K core-free, no solvability condition");
  sf->add_option("--target", sf_targets, "targeted mode: H:K orders (repeatable)");
  sf->add_option("--seed", seed, "seed for randomized searches");
  sf->add_option("--seeds", sf_seeds, ".mgp seed vectors, e.g. \"1 0 0;0 1 0\"");
  sf->add_flag("--projective", sf_proj, ".mgp: act on 1-spaces");

  auto *ct = app.add_subcommand("check-table", "Check a table dataset");
  std::string ct_table, ct_data;
  ct->add_option("table", ct_table, "table id (tab1, tab2, tab4, tab8, tab9) or all")->required();
  ct->add_option("--data", ct_data, "table dataset (.tsv)");
  ct->add_option("--seed", seed, "seed for targeted rows");

  auto *zs = app.add_subcommand("zsigmondy", "Primitive prime divisors of a^m - 1");
  std::uint64_t zs_a = 0;
  unsigned zs_m = 0;
  zs->add_option("a", zs_a)->required();
  zs->add_option("m", zs_m)->required();

  auto *cd = app.add_subcommand("common-divisor", "|T|_r versus r|Out(T)|_r");
  std::string cd_group, cd_r, cd_family;
  std::uint64_t cd_dim = 12, cd_q = 64;
  bool cd_all = false;
  cd->add_option("group", cd_group, "simple group, e.g. PSL3(4); omit for the sweep");
  cd->add_option("r", cd_r, "prime");
  cd->add_option("--family", cd_family, "sweep only this family");
  cd->add_option("--dim-max", cd_dim, "sweep dimension bound");
  cd->add_option("--q-max", cd_q, "sweep field order bound");
  cd->add_flag("--all-records", cd_all, "print every sweep record");

  auto *cg = app.add_subcommand("check-graph", "Invariants, automorphisms and s-arc transitivity");
  std::string cg_name;
  cg->add_option("graph", cg_name, "petersen | hoffman-singleton | higman-sims | file.edg")
    ->required();
  cg->add_option("--cap", cap, "s-arc cap");

  auto *cs = app.add_subcommand("coset-graph", "Coset graph Cos(G, K, KgK)");
  std::string cs_g, cs_k, cs_elt, cs_out;
  cs->add_option("g", cs_g, "group G")->required();
  cs->add_option("k", cs_k, "core-free subgroup K")->required();
  cs->add_option("--element", cs_elt, "g as cycles \"(0 1)(2 3)\" or images; default: "
                                      "every two-arc candidate");
  cs->add_option("--out", cs_out, "write the (first) graph as .edg");
  cs->add_option("--cap", cap, "s-arc cap");

  auto *ra = app.add_subcommand("report-all", "Run the acceptance battery");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (CLI::CallForAllHelp const &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Report rep;
  echo_command(rep, args);
  unsigned threads = resolve_threads();
  try {
    if (vc->parsed()) {
      if (!vc_family.empty() && (vc_m == 0 || vc_q == 0))
        throw CLI::ValidationError("verify-construction: family needs m and q");
      cmd_verify_construction(rep, vc_family, vc_m, vc_q, threads);
    } else if (sf->parsed()) {
      cmd_search(rep, sf_group, sf_both, sf_core, sf_targets, seed, threads, sf_seeds, sf_proj);
    } else if (ct->parsed()) {
      cmd_check_table(rep, ct_table, ct_data, seed, threads);
    } else if (zs->parsed()) {
      cmd_zsigmondy(rep, zs_a, zs_m);
    } else if (cd->parsed()) {
      cmd_common_divisor(rep, cd_group, cd_r, cd_family, cd_dim, cd_q, cd_all);
    } else if (cg->parsed()) {
      cmd_check_graph(rep, cg_name, cap);
    } else if (cs->parsed()) {
      cmd_coset_graph(rep, cs_g, cs_k, cs_elt, cs_out, cap);
    } else if (ra->parsed()) {
      cmd_report_all(rep, threads);
    }
  } catch (CLI::ValidationError const &e) {
    err << "groupfact: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (ParseError const &e) {
    err << "groupfact: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (PreconditionError const &e) {
    err << "groupfact: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (BoundError const &e) {
    err << "groupfact: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (std::exception const &e) {
    err << "groupfact: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  out << rep.str();
  return rep.exit_status();
}

}  // namespace groupfact::cli
