#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "groupfact/cli/cli.hpp"
#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/permcore/grp_io.hpp"
#include "groupfact/permcore/named_groups.hpp"

using namespace groupfact;
using namespace groupfact::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run_cli(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  int st = run(args, out, err);
  return {st, out.str(), err.str()};
}

fs::path scratch()
{
  fs::path d = fs::temp_directory_path() / "groupfact_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write_file(std::string const &name, std::string const &text)
{
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

bool contains(std::string const &hay, std::string const &needle)
{
  return hay.find(needle) != std::string::npos;
}

// Exit status of the installed binary.
int run_binary(std::string const &args)
{
  std::string cmd = std::string(GROUPFACT_BIN) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("zsigmondy")
{
  auto r = run_cli({"zsigmondy", "2", "6"});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "EXCEPTION; no primitive prime divisor"));
  CHECK(contains(r.out, "# groupfact zsigmondy 2 6"));
  CHECK(contains(r.out, "# config\ta\t2"));

  auto p = run_cli({"zsigmondy", "2", "4"});
  CHECK(contains(p.out, "primes\t5\n"));
  CHECK(contains(p.out, "summary\tpassed\t1\tfailed\t0"));

  CHECK(run_cli({"zsigmondy", "1", "4"}).status == kExitInput);
  CHECK(run_cli({"zsigmondy", "2"}).status == kExitUsage);
}

TEST_CASE("usage errors")
{
  CHECK(run_cli({}).status == kExitUsage);
  CHECK(run_cli({"frobnicate"}).status == kExitUsage);
  CHECK(run_cli({"check-graph", "petersen", "--bogus"}).status == kExitUsage);
  CHECK(run_cli({"zsigmondy", "x", "6"}).status == kExitUsage);
  CHECK(run_cli({"search-factorizations", "A5", "--both-solvable", "--core-free"}).status ==
        kExitUsage);
  CHECK(run_cli({"search-factorizations", "A5", "--target", "5x12"}).status == kExitUsage);
  CHECK(run_cli({"--help"}).status == kExitOk);
}

TEST_CASE("check-graph")
{
  auto r = run_cli({"check-graph", "petersen"});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "s_max\t3\n"));
  CHECK(contains(r.out, "|Aut|\t120\n"));
  CHECK(contains(r.out, "girth\t5\n"));
  CHECK(contains(r.out, "bipartite\tno\n"));
  CHECK(contains(r.out, "cayley\tno\n"));
  CHECK(contains(r.out, "# config\tcap\t4"));

  auto c = run_cli({"check-graph", "petersen", "--cap", "2"});
  CHECK(contains(c.out, "s_max\t2 (cap)\n"));

  std::string path = write_file("path.edg", "graph 3\n0 1\n1 2\n");
  auto p = run_cli({"check-graph", path});
  CHECK(p.status == kExitOk);
  CHECK(contains(p.out, "valency\tirregular\n"));
  CHECK(contains(p.out, "girth\tnone\n"));
  CHECK(contains(p.out, "s_max\t-1\n"));

  std::string bad = write_file("bad.edg", "graph 3\n0 1\n1 1\n");
  auto b = run_cli({"check-graph", bad});
  CHECK(b.status == kExitInput);
  CHECK(contains(b.err, "bad.edg:3:"));
  CHECK(run_cli({"check-graph", "nosuchgraph"}).status == kExitInput);
  CHECK(run_cli({"check-graph", (scratch() / "missing.edg").string()}).status == kExitInput);
}

TEST_CASE("load_group")
{
  auto m11 = load_group(factorlab::default_data_dir() + "/m11.grp");
  CHECK(m11.order() == 7920);

  std::string s3 = write_file("s3.grp", "perm 3\n1 2 0\n1 0 2\n");
  CHECK(load_group(s3).order() == 6);

  std::string bad = write_file("bad.grp", "perm 3\n1 2 0\n0 0 1\n");
  try {
    load_group(bad);
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.line == 3);
  }
  CHECK(run_cli({"search-factorizations", bad}).status == kExitInput);

  // SL2(3) on its 8 nonzero vectors, and PSL2(3) on the 4 points.
  std::string mgp = write_file("sl23.mgp", "mat 3 1 2\n1 1\n0 1\n\n0 2\n1 0\n");
  CHECK(load_group(mgp).order() == 24);
  CHECK(load_group(mgp, "", true).order() == 12);
  CHECK(load_group(mgp, "1 0").order() == 24);
  CHECK(load_group(mgp, "1 0", true).degree() == 4);
  CHECK_THROWS_AS(load_group(mgp, "1 0 0"), PreconditionError);
  CHECK_THROWS_AS(load_group(s3 + ".txt"), PreconditionError);
}

TEST_CASE("search-factorizations")
{
  std::string psl27 = write_file("psl2_7.grp", permcore::to_grp(permcore::psl2_prime(7)));
  auto r = run_cli({"search-factorizations", psl27, "--both-solvable"});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "# config\tmode\tboth-solvable"));
  CHECK(contains(r.out, "168\t7\t24\t1\t"));
  CHECK(contains(r.out, "168\t21\t24\t3\t"));
  CHECK(contains(r.out, "168\t24\t7\t1\t"));

  auto s = run_cli({"search-factorizations", "PSL2(11)"});
  CHECK(contains(s.out, "660\t11\t60\t1\t"));
  CHECK(contains(s.out, "660\t55\t60\t5\t"));

  auto a5 = run_cli({"search-factorizations", "A5", "--core-free"});
  CHECK(a5.status == kExitOk);
  CHECK(contains(a5.out, "60\t5\t12\t1\t"));

  auto t = run_cli({"search-factorizations", "M11", "--target", "11:720", "--seed", "0"});
  CHECK(t.status == kExitOk);
  CHECK(contains(t.out, "11:720\t7920\t11\t720\t1\t"));
  CHECK(contains(t.out, "# config\tseed\t0"));

  // Same seed, same report.
  CHECK(run_cli({"search-factorizations", "M11", "--target", "55:720"}).out ==
        run_cli({"search-factorizations", "M11", "--target", "55:720"}).out);
  CHECK(run_cli({"search-factorizations", "PSL2(10)"}).status == kExitInput);
}

TEST_CASE("check-table")
{
  auto r = run_cli({"check-table", "tab8"});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "row\ttab8\t1\tM11\tmatched\n"));
  CHECK(contains(r.out, "MATCHED 2/2 EXPECTED\n"));
  CHECK(run_cli({"check-table", "tab99"}).status == kExitInput);

  std::string bad = write_file("bad.tsv", "tab1\t1\tPSL2(11)\t55\t60\n");
  CHECK(run_cli({"check-table", "tab1", "--data", bad}).status == kExitInput);

  // A row no group satisfies is reported missing, with exit status 1.
  std::string miss = write_file("miss.tsv", "tabX\t1\tPSL2(7)\t7\t8\t1\t1\t-\tsearch\tnone\n");
  auto m = run_cli({"check-table", "tabX", "--data", miss});
  CHECK(m.status == kExitFailures);
  CHECK(contains(m.out, "missing"));
  CHECK(contains(m.out, "MATCHED 0/1 EXPECTED"));
}

TEST_CASE("common-divisor and verify-construction")
{
  auto c = run_cli({"common-divisor", "PSL3(4)", "2"});
  CHECK(c.status == kExitOk);
  CHECK(contains(c.out, "PSL(3,4)\t2\t"));

  auto s = run_cli({"common-divisor", "--dim-max", "4", "--q-max", "9"});
  CHECK(s.status == kExitOk);
  CHECK(contains(s.out, "inequality_violations\t0\n"));
  CHECK(run_cli({"common-divisor", "PSL3(4)"}).status == kExitUsage);

  auto v = run_cli({"verify-construction", "unitary", "2", "2"});
  CHECK(v.status == kExitOk);
  CHECK(contains(v.out, "unitary\t2\t2\t"));
  CHECK(contains(v.out, "\t120\t120\t2\t2\t120\tpass\n"));
  CHECK(run_cli({"verify-construction", "unitary"}).status == kExitUsage);
  CHECK(run_cli({"verify-construction", "affine", "2", "2"}).status == kExitInput);
}

TEST_CASE("coset-graph")
{
  std::string a5 = write_file("a5.grp", permcore::to_grp(permcore::alternating_group(5)));
  std::string s3 = write_file("s3_in_a5.grp", "perm 5\n1 2 0 3 4\n1 0 2 4 3\n");
  std::string out = (scratch() / "pet.edg").string();
  auto r = run_cli({"coset-graph", a5, s3, "--element", "(1 3)(2 4)", "--out", out});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "coset_valency\t3\n"));
  CHECK(contains(r.out, "|Aut|\t120\n"));
  CHECK(contains(r.out, "s_max\t3\n"));
  auto back = run_cli({"check-graph", out});
  CHECK(contains(back.out, "n\t10\n"));

  auto cands = run_cli({"coset-graph", a5, s3});
  CHECK(contains(cands.out, "candidates\t1\n"));

  CHECK(run_cli({"coset-graph", a5, s3, "--element", "(0 1)(3 4)"}).status == kExitInput);
  CHECK(run_cli({"coset-graph", a5, s3, "--element", "(0 9)"}).status == kExitInput);
}

TEST_CASE("threads are echoed")
{
  setenv("GROUPFACT_THREADS", "3", 1);
  CHECK(resolve_threads() == 3);
  auto r = run_cli({"check-table", "tab8"});
  CHECK(contains(r.out, "# config\tthreads\t3"));
  setenv("GROUPFACT_THREADS", "zero", 1);
  CHECK(resolve_threads() >= 1);
  unsetenv("GROUPFACT_THREADS");
}

TEST_CASE("binary exit statuses")
{
  CHECK(run_binary("zsigmondy 2 6") == kExitOk);
  CHECK(run_binary("no-such-verb") == kExitUsage);
  CHECK(run_binary("check-graph /nonexistent/file.edg") == kExitInput);
}

TEST_CASE("report-all is deterministic")
{
  auto a = run_cli({"report-all"});
  auto b = run_cli({"report-all"});
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "criterion\t10\tPASS\tnamed graphs\n"));
  // Criterion 1 is the literal two-signature check; see the README.
  CHECK(a.status == (contains(a.out, "\tFAIL\t") ? kExitFailures : kExitOk));
}
