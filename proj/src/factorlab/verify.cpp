#include <algorithm>
#include <sstream>
#include <tuple>

#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/permcore/cosets.hpp"
#include "groupfact/permcore/element_table.hpp"

namespace groupfact::factorlab {

using namespace permcore;

namespace {

// Brute-force intersection limit (elements of the smaller group).
constexpr std::size_t kBruteBound = 200000;

std::string flag(bool b) { return b ? "1" : "0"; }

bool core_free(PermGroup const &g, PermGroup const &h)
{
  return core(g, h).order() == 1;
}

}  // namespace

std::string to_string(Provenance p)
{
  switch (p) {
  case Provenance::searched: return "searched";
  case Provenance::targeted: return "targeted";
  case Provenance::derived: return "derived";
  }
  return "?";
}

std::string FactorizationRecord::signature_line() const
{
  std::ostringstream os;
  os << g_order << '\t' << h_order << '\t' << k_order << '\t' << hk_order << '\t'
     << flag(h_solvable) << '\t' << flag(k_solvable) << '\t' << flag(h_core_free) << '\t'
     << flag(k_core_free);
  return os.str();
}

bool signature_less(FactorizationRecord const &a, FactorizationRecord const &b)
{
  auto key = [](FactorizationRecord const &r) {
    return std::make_tuple(r.g_order, r.h_order, r.k_order, r.hk_order, r.h_solvable,
                           r.k_solvable, r.h_core_free, r.k_core_free);
  };
  return key(a) < key(b);
}

FactorizationRecord verify_factorization(PermGroup const &g, PermGroup const &h,
                                         PermGroup const &k, std::string const &label)
{
  if (!is_subgroup(h, g))
    throw PreconditionError("verify_factorization: H is not a subgroup of G");
  if (!is_subgroup(k, g))
    throw PreconditionError("verify_factorization: K is not a subgroup of G");

  FactorizationRecord r;
  r.group_id = label;
  r.g_order = g.order();
  r.h_order = h.order();
  r.k_order = k.order();
  r.orbit_size = BigInt(static_cast<unsigned long>(coset_orbit_size(k, h)));
  r.is_factorization = r.orbit_size * r.k_order == r.g_order;
  // The stabilizer of the coset K in H is H cap K.
  r.hk_order = r.h_order / r.orbit_size;
  if (r.is_factorization && r.hk_order * r.g_order != r.h_order * r.k_order)
    throw InvariantError("verify_factorization: order equation fails on a transitive pair");
  r.h_solvable = is_solvable(h);
  r.k_solvable = is_solvable(k);
  r.h_core_free = core_free(g, h);
  r.k_core_free = core_free(g, k);
  r.k_simple = !r.k_solvable && is_perfect(k) && is_nonabelian_simple(k);
  r.h = h;
  r.k = k;
  return r;
}

BigInt intersection_order(PermGroup const &a, PermGroup const &b)
{
  PermGroup const &small = a.order() <= b.order() ? a : b;
  PermGroup const &large = a.order() <= b.order() ? b : a;
  if (small.order() <= static_cast<unsigned long>(kBruteBound)) {
    ElementTable t(small, kBruteBound);
    unsigned long n = 0;
    for (Elem e = 0; e < t.size(); ++e)
      if (large.contains(t.element(e)))
        ++n;
    return BigInt(n);
  }
  return a.order() / static_cast<unsigned long>(coset_orbit_size(b, a));
}

bool CriteriaReport::agree() const
{
  return order_equation == inequality && inequality == h_transitive &&
         h_transitive == k_transitive;
}

CriteriaReport factorization_criteria(PermGroup const &g, PermGroup const &h, PermGroup const &k)
{
  if (!is_subgroup(h, g) || !is_subgroup(k, g))
    throw PreconditionError("factorization_criteria: H and K must be subgroups of G");
  CriteriaReport r;
  BigInt n = g.order(), oh = h.order(), ok = k.order();
  r.hk_order = intersection_order(h, k);
  r.order_equation = r.hk_order * n == oh * ok;
  r.inequality = n * r.hk_order <= oh * ok;
  r.h_transitive = BigInt(static_cast<unsigned long>(coset_orbit_size(k, h))) * ok == n;
  r.k_transitive = BigInt(static_cast<unsigned long>(coset_orbit_size(h, k))) * oh == n;
  return r;
}

DivisibilityAudit divisibility_audit(PermGroup const &g, PermGroup const &l, PermGroup const &h,
                                     PermGroup const &k)
{
  if (!is_subgroup(l, g) || !is_normal(l, g))
    throw PreconditionError("divisibility_audit: L is not normal in G");
  if (!is_subgroup(h, g) || !is_subgroup(k, g))
    throw PreconditionError("divisibility_audit: H and K must be subgroups of G");
  DivisibilityAudit r;
  BigInt n = g.order(), nl = l.order(), oh = h.order(), ok = k.order();
  BigInt quot = n / nl;
  r.hl_order = intersection_order(h, l);
  r.kl_order = intersection_order(k, l);
  r.a = divides(n, oh * ok);
  r.b = divides(n, r.hl_order * ok * quot);
  r.c = divides(nl, r.hl_order * ok);
  r.d = divides(nl, r.hl_order * r.kl_order * quot);
  return r;
}

PermGroup intersect_subgroup(PermGroup const &k, PermGroup const &m, std::size_t bound)
{
  ElementTable t(k, bound);
  std::vector<Permutation> gens;
  PermGroup acc(k.degree(), {});
  for (Elem e = 0; e < t.size(); ++e) {
    Permutation const &x = t.element(e);
    if (!m.contains(x) || acc.contains(x))
      continue;
    gens.push_back(x);
    acc = PermGroup(k.degree(), gens);
  }
  return acc;
}

FactorizationRecord descend_factorization(PermGroup const &g, PermGroup const &h,
                                          PermGroup const &k, PermGroup const &m)
{
  if (!is_subgroup(m, g))
    throw PreconditionError("descend_factorization: M is not a subgroup of G");
  if (!is_subgroup(h, m))
    throw PreconditionError("descend_factorization: H is not contained in M");
  if (!verify_factorization(g, h, k).is_factorization)
    throw PreconditionError("descend_factorization: G != HK");
  PermGroup km = intersect_subgroup(k, m);
  FactorizationRecord r = verify_factorization(m, h, km);
  if (!r.is_factorization)
    throw InvariantError("descend_factorization: M != H(K cap M)");
  r.provenance = Provenance::derived;
  return r;
}

bool lift_factorization(PermGroup const &g, PermGroup const &m, PermGroup const &k,
                        PermGroup const &h)
{
  if (!is_subgroup(m, g))
    throw PreconditionError("lift_factorization: M is not a subgroup of G");
  if (!is_subgroup(h, m))
    throw PreconditionError("lift_factorization: H is not contained in M");
  if (!verify_factorization(m, h, intersect_subgroup(k, m)).is_factorization)
    throw PreconditionError("lift_factorization: M != H(K cap M)");
  bool ghk = verify_factorization(g, h, k).is_factorization;
  bool gmk = verify_factorization(g, m, k).is_factorization;
  if (ghk != gmk)
    throw InvariantError("lift_factorization: G=HK and G=MK disagree");
  return ghk;
}

}  // namespace groupfact::factorlab
