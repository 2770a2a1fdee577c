#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "groupfact/arcgraph/arcgraph.hpp"
#include "groupfact/cli/cli.hpp"
#include "groupfact/constructions/constructions.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/gfmat/matgroup.hpp"
#include "groupfact/numth/numth.hpp"
#include "groupfact/permcore/element_table.hpp"
#include "groupfact/permcore/named_groups.hpp"
#include "groupfact/permcore/subgroups.hpp"

namespace groupfact::cli {

namespace {

using permcore::PermGroup;
using Triple = std::tuple<std::string, std::string, std::string>;

std::string str(BigInt const &v) { return v.get_str(); }
std::string yes(bool b) { return b ? "yes" : "no"; }

CriterionResult make(int id, std::string title, double limit = 0)
{
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.limit_seconds = limit;
  return r;
}

std::string triple_text(Triple const &t)
{
  return "(" + std::get<0>(t) + "," + std::get<1>(t) + "," + std::get<2>(t) + ")";
}

// (|H|, |K|, |H cap K|) with the smaller order first.
Triple unordered(factorlab::FactorizationRecord const &r)
{
  BigInt a = r.h_order, b = r.k_order;
  if (b < a)
    std::swap(a, b);
  return {str(a), str(b), str(r.hk_order)};
}

Triple unordered(BigInt a, BigInt b, BigInt c)
{
  if (b < a)
    std::swap(a, b);
  return {str(a), str(b), str(c)};
}

std::string join(std::set<Triple> const &s)
{
  std::string out;
  for (auto const &t : s)
    out += (out.empty() ? "" : " ") + triple_text(t);
  return out.empty() ? "(none)" : out;
}

CriterionResult both_solvable_psl27(unsigned threads)
{
  CriterionResult r = make(1, "both-solvable search, PSL2(7)", 30);
  factorlab::SearchOptions opts;
  opts.threads = threads;
  auto recs = factorlab::two_solvable_search(permcore::psl2_prime(7), "PSL2(7)", opts);
  std::set<Triple> found;
  for (auto const &rec : recs)
    found.insert(unordered(rec));
  std::set<Triple> want{unordered(7, 24, 1), unordered(21, 24, 3)};
  r.pass = found == want;
  r.details.push_back("expected\t" + join(want));
  r.details.push_back("found\t" + join(found));
  return r;
}

CriterionResult solvable_factor_psl211(unsigned threads)
{
  CriterionResult r = make(2, "solvable-factor search, PSL2(11)", 60);
  factorlab::SearchOptions opts;
  opts.threads = threads;
  PermGroup g = permcore::psl2_prime(11);
  auto recs = factorlab::search_solvable_factorizations(g, "PSL2(11)", opts);
  std::set<Triple> found;
  for (auto const &rec : recs)
    found.insert(unordered(rec));
  r.pass = true;
  for (auto const &t : {unordered(55, 12, 1), unordered(11, 60, 1), unordered(55, 60, 5)}) {
    bool ok = found.count(t) > 0;
    r.pass = r.pass && ok;
    r.details.push_back("signature\t" + triple_text(t) + "\t" + (ok ? "present" : "absent"));
  }
  r.details.push_back("found\t" + join(found));
  return r;
}

CriterionResult m11_targeted(std::uint64_t seed)
{
  CriterionResult r = make(3, "M11 targeted verification", 120);
  PermGroup g = factorlab::named_group("M11");
  struct Want {
    unsigned h, k, meet;
    bool k_simple;
  };
  std::vector<Want> want{{11, 720, 1, false}, {55, 720, 5, false}, {72, 660, 6, true},
                         {144, 660, 12, true}};
  std::vector<factorlab::TargetPair> pairs;
  for (auto const &w : want)
    {
    factorlab::TargetPair tp;
    tp.h_order = w.h;
    tp.k_order = w.k;
    tp.h_solvable = true;
    tp.k_solvable = false;
    tp.k_simple = w.k_simple;
    pairs.push_back(tp);
  }
  auto res = factorlab::targeted_search(g, "M11", pairs, seed);
  r.pass = res.size() == want.size();
  for (std::size_t i = 0; i < res.size() && i < want.size(); ++i) {
    auto const &w = want[i];
    std::string sig = "(" + std::to_string(w.h) + "," + std::to_string(w.k) + "," +
                      std::to_string(w.meet) + ")";
    if (!res[i].record) {
      r.pass = false;
      r.details.push_back("pair\t" + sig + "\tinconclusive");
      continue;
    }
    auto const &rec = *res[i].record;
    auto crit = factorlab::factorization_criteria(g, rec.h, rec.k);
    bool ok = rec.is_factorization && rec.hk_order == w.meet && crit.h_transitive &&
              crit.k_transitive && crit.agree();
    r.pass = r.pass && ok;
    r.details.push_back("pair\t" + sig + "\tH transitive on [G:K] " + yes(crit.h_transitive) +
                        "\tK transitive on [G:H] " + yes(crit.k_transitive) + "\t" +
                        (ok ? "verified" : "FAILED"));
  }
  return r;
}

CriterionResult constructions_battery(unsigned threads)
{
  CriterionResult r = make(4, "constructions battery", 300);
  auto res = constructions::run_battery(constructions::default_battery(), threads);
  r.pass = !res.empty();
  for (auto const &b : res) {
    std::string id = constructions::to_string(b.entry.family) + "\tm=" + std::to_string(b.entry.m) +
                     "\tq=" + std::to_string(b.entry.q);
    if (!b.report) {
      r.pass = false;
      r.details.push_back(id + "\terror\t" + b.error);
      continue;
    }
    auto const &rep = *b.report;
    bool ok = rep.pass && rep.orbit_size == rep.expected_index &&
              rep.stabilizer_order == rep.expected_intersection;
    r.pass = r.pass && ok;
    r.details.push_back(id + "\torbit " + str(rep.orbit_size) + "/" + str(rep.expected_index) +
                        "\tstabilizer " + str(rep.stabilizer_order) + "/" +
                        str(rep.expected_intersection) + "\t" + (ok ? "ok" : "FAILED"));
  }
  return r;
}

CriterionResult witt_oracle(unsigned threads)
{
  CriterionResult r = make(5, "Witt-count oracle");
  auto res = constructions::run_battery(constructions::default_battery(), threads);
  std::size_t checked = 0;
  r.pass = true;
  for (auto const &b : res) {
    std::string id = constructions::to_string(b.entry.family) + "\tm=" + std::to_string(b.entry.m) +
                     "\tq=" + std::to_string(b.entry.q);
    if (!b.report) {
      r.pass = false;
      r.details.push_back(id + "\terror\t" + b.error);
      continue;
    }
    auto const &rep = *b.report;
    if (!rep.witt_count) {
      r.details.push_back(id + "\tambient space above 10^5, not counted");
      continue;
    }
    ++checked;
    bool ok = *rep.witt_count == rep.expected_index;
    r.pass = r.pass && ok;
    r.details.push_back(id + "\tcount " + str(*rep.witt_count) + "\tindex " +
                        str(rep.expected_index) + "\t" + (ok ? "ok" : "FAILED"));
  }
  r.pass = r.pass && checked > 0;
  r.details.push_back("checked\t" + std::to_string(checked));
  return r;
}

CriterionResult zsigmondy_sweep()
{
  CriterionResult r = make(6, "Zsigmondy sweep", 10);
  std::size_t empty = 0, bad = 0;
  for (unsigned a = 2; a <= 30; ++a)
    for (unsigned m = 2; m <= 20; ++m) {
      auto p = numth::primitive_prime_divisors(a, m);
      bool mersenne = m == 2 && ((a + 1) & a) == 0;
      bool expect_empty = (a == 2 && m == 6) || mersenne;
      bool ok = p.primes.empty() == expect_empty && p.is_exception == expect_empty;
      for (auto const &q : p.primes)
        ok = ok && (q - 1) % m == 0;
      if (p.primes.empty()) {
        ++empty;
        r.details.push_back("empty\t" + std::to_string(a) + "\t" + std::to_string(m));
      }
      if (!ok) {
        ++bad;
        r.details.push_back("mismatch\t" + std::to_string(a) + "\t" + std::to_string(m));
      }
    }
  r.pass = bad == 0;
  r.details.push_back("empty cases\t" + std::to_string(empty) + "\tmismatches\t" +
                      std::to_string(bad));
  return r;
}

CriterionResult common_divisor()
{
  CriterionResult r = make(7, "common-divisor sweep", 120);
  auto s = numth::common_divisor_sweep(std::nullopt, 12, 64);
  r.pass = s.groups > 0 && s.inequality_violations == 0 && s.equality_mismatches == 0;
  r.details.push_back("groups\t" + std::to_string(s.groups) + "\trecords\t" +
                      std::to_string(s.records.size()));
  r.details.push_back("inequality violations\t" + std::to_string(s.inequality_violations));
  r.details.push_back("equality mismatches\t" + std::to_string(s.equality_mismatches));
  return r;
}

CriterionResult r_part_fuzz()
{
  CriterionResult r = make(8, "r-part lemma fuzz");
  std::size_t cases = 0, b_cases = 0, c_cases = 0, bad = 0;
  for (std::uint64_t t = 2; t <= 20; ++t)
    for (std::uint64_t f = 1; f <= 12; ++f)
      for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        auto rep = numth::check_r_part_lemma(t, f, p);
        ++cases;
        b_cases += rep.b_applicable;
        c_cases += rep.c_applicable;
        if (!rep.a_holds || !rep.b_holds || !rep.c_holds) {
          ++bad;
          r.details.push_back("violation\tt=" + std::to_string(t) + "\tf=" + std::to_string(f) +
                              "\tr=" + std::to_string(p));
        }
      }
  r.pass = bad == 0;
  r.details.push_back("cases\t" + std::to_string(cases) + "\t(b) applicable\t" +
                      std::to_string(b_cases) + "\t(c) applicable\t" + std::to_string(c_cases) +
                      "\tviolations\t" + std::to_string(bad));
  return r;
}

CriterionResult dixon_legendre()
{
  CriterionResult r = make(9, "Dixon bound and Legendre exponents");
  r.pass = true;
  for (std::uint64_t n = 2; n <= 7; ++n) {
    auto list = permcore::enumerate_subgroups(permcore::symmetric_group(n),
                                              permcore::EnumMode::solvable_only);
    std::size_t best = 0;
    for (auto const &c : list.classes)
      if (c.solvable)
        best = std::max(best, c.order);
    bool eq = false;
    bool holds = numth::dixon_bound_check(n, big(best), &eq);
    bool ok = holds && eq == (n == 4);
    r.pass = r.pass && ok;
    r.details.push_back("S" + std::to_string(n) + "\tmax solvable " + std::to_string(best) +
                        "\tbound " + yes(holds) + "\tequality " + yes(eq));
  }
  std::size_t pairs = 0, bad = 0;
  for (std::uint64_t p = 2; p <= 97; ++p) {
    if (!numth::is_probable_prime(big(p)))
      continue;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      ++pairs;
      if (!numth::factorial_p_part(n, p).bound_holds)
        ++bad;
    }
  }
  r.pass = r.pass && bad == 0;
  r.details.push_back("Legendre pairs\t" + std::to_string(pairs) + "\tviolations\t" +
                      std::to_string(bad));
  return r;
}

CriterionResult named_graphs()
{
  CriterionResult r = make(10, "named graphs", 17 * 60);
  struct Want {
    std::string name;
    std::function<arcgraph::Graph()> make;
    std::size_t n, edges, val;
    std::optional<std::size_t> girth;
    unsigned long aut;
    int s;
    bool cayley_checked;
  };
  std::vector<Want> want{
    {"petersen", arcgraph::petersen, 10, 15, 3, 5, 120, 3, true},
    {"hoffman-singleton", arcgraph::hoffman_singleton, 50, 175, 7, 5, 252000, 3, false},
    {"higman-sims", arcgraph::higman_sims, 100, 1100, 22, std::nullopt, 88704000, 2, false},
  };
  r.pass = true;
  for (auto const &w : want) {
    auto g = w.make();
    auto aut = arcgraph::graph_automorphisms(g);
    auto rep = arcgraph::s_arc_transitivity(g, aut);
    bool bip = arcgraph::is_bipartite(g);
    bool ok = g.n() == w.n && g.edge_count() == w.edges && rep.valency == w.val &&
              aut.order() == w.aut && rep.s_max == w.s && !bip;
    if (w.girth)
      ok = ok && rep.girth == w.girth;
    std::string line = w.name + "\tn " + std::to_string(g.n()) + "\tedges " +
                       std::to_string(g.edge_count()) + "\tvalency " +
                       (rep.valency ? std::to_string(*rep.valency) : "irregular") + "\tgirth " +
                       (rep.girth ? std::to_string(*rep.girth) : "none") + "\t|Aut| " +
                       str(aut.order()) + "\ts_max " + std::to_string(rep.s_max) +
                       "\tbipartite " + yes(bip);
    if (w.cayley_checked) {
      bool cay = arcgraph::is_cayley(g);
      ok = ok && !cay;
      line += "\tcayley " + yes(cay);
    }
    r.pass = r.pass && ok;
    r.details.push_back(line + "\t" + (ok ? "ok" : "FAILED"));
  }
  return r;
}

CriterionResult coset_round_trip()
{
  CriterionResult r = make(11, "coset-graph round trip");
  using permcore::Permutation;
  PermGroup a5 = permcore::alternating_group(5);
  PermGroup s3(5, {Permutation::from_cycles(5, {{0, 1, 2}}),
                   Permutation::from_cycles(5, {{0, 1}, {3, 4}})});
  auto cands = arcgraph::two_arc_candidates(a5, s3);
  r.details.push_back("candidates\t" + std::to_string(cands.size()));
  for (auto const &c : cands) {
    auto cg = arcgraph::coset_graph({a5, s3, c.w});
    bool iso = arcgraph::are_isomorphic(cg.graph, arcgraph::petersen());
    r.pass = r.pass || iso;
    r.details.push_back("|M| " + str(c.m.order()) + "\tw " + c.w.to_cycle_string() + "\tvertices " +
                        std::to_string(cg.graph.n()) + "\tvalency " +
                        std::to_string(cg.valency) + "\tisomorphic to Petersen " + yes(iso));
  }
  return r;
}

CriterionResult criteria_fuzz(std::uint64_t seed)
{
  CriterionResult r = make(12, "factorization criteria agreement fuzz");
  std::vector<std::pair<std::string, PermGroup>> groups{
    {"S5", permcore::symmetric_group(5)},
    {"S6", permcore::symmetric_group(6)},
    {"PSL2(7)", permcore::psl2_prime(7)}};
  std::mt19937_64 rng(seed);
  r.pass = true;
  for (auto const &[name, g] : groups) {
    auto list = permcore::enumerate_subgroups(g, permcore::EnumMode::exhaustive);
    std::uniform_int_distribution<std::size_t> pick(0, list.classes.size() - 1);
    auto random_subgroup = [&]() {
      auto const &c = list.classes[pick(rng)];
      return permcore::conjugate_group(c.rep, g.chain().random_element(rng));
    };
    std::size_t agree = 0, facts = 0;
    for (int i = 0; i < 50; ++i) {
      PermGroup h = random_subgroup();
      PermGroup k = random_subgroup();
      auto c = factorlab::factorization_criteria(g, h, k);
      agree += c.agree();
      facts += c.order_equation;
    }
    r.pass = r.pass && agree == 50;
    r.details.push_back(name + "\tpairs 50\tagree " + std::to_string(agree) + "\tfactorizations " +
                        std::to_string(facts));
  }
  return r;
}

CriterionResult minimal_index()
{
  CriterionResult r = make(13, "minimal index of PSL2(q)");
  std::map<std::uint64_t, unsigned long> want{{5, 5}, {7, 7}, {9, 6}, {11, 11}, {13, 14}};
  r.pass = true;
  for (auto const &[q, p] : want) {
    PermGroup g = gfmat::psl_on_points(2, q);
    auto list = permcore::enumerate_subgroups(g, permcore::EnumMode::exhaustive);
    std::size_t best = 1;
    BigInt n = g.order();
    for (auto const &c : list.classes)
      if (BigInt(static_cast<unsigned long>(c.order)) < n)
        best = std::max(best, c.order);
    BigInt idx = n / static_cast<unsigned long>(best);
    BigInt table = numth::min_index(numth::SimpleGroupId::lie(gfmat::Family::PSL, 2, q));
    bool ok = idx == p && table == p;
    r.pass = r.pass && ok;
    r.details.push_back("PSL2(" + std::to_string(q) + ")\tenumerated " + str(idx) + "\ttable " +
                        str(table) + "\texpected " + std::to_string(p) + "\t" +
                        (ok ? "ok" : "FAILED"));
  }
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, unsigned threads)
{
  if (id < 1 || id > kCriteria)
    throw PreconditionError("criterion must be 1.." + std::to_string(kCriteria));
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
    case 1: r = both_solvable_psl27(threads); break;
    case 2: r = solvable_factor_psl211(threads); break;
    case 3: r = m11_targeted(0); break;
    case 4: r = constructions_battery(threads); break;
    case 5: r = witt_oracle(threads); break;
    case 6: r = zsigmondy_sweep(); break;
    case 7: r = common_divisor(); break;
    case 8: r = r_part_fuzz(); break;
    case 9: r = dixon_legendre(); break;
    case 10: r = named_graphs(); break;
    case 11: r = coset_round_trip(); break;
    case 12: r = criteria_fuzz(0); break;
    case 13: r = minimal_index(); break;
    }
  } catch (std::exception const &e) {
    r.id = id;
    r.pass = false;
    r.details.push_back(std::string("error\t") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.details.push_back("time limit exceeded");
  }
  return r;
}

}  // namespace groupfact::cli
