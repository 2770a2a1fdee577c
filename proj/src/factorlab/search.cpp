#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "groupfact/errors.hpp"
#include "groupfact/factorlab/factorlab.hpp"
#include "groupfact/permcore/element_table.hpp"

namespace groupfact::factorlab {

using namespace permcore;

namespace {

std::size_t intersection_size(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool is_subset(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<FactorizationRecord> merge_records(std::vector<FactorizationRecord> recs)
{
  std::sort(recs.begin(), recs.end(), signature_less);
  std::vector<FactorizationRecord> out;
  for (auto &r : recs) {
    if (!out.empty() && !signature_less(out.back(), r) && !signature_less(r, out.back()))
      out.back().multiplicity += r.multiplicity;
    else
      out.push_back(std::move(r));
  }
  return out;
}

using ClassPred = std::function<bool(SubgroupClass const &)>;

// Simplicity is only needed for records, so it is computed lazily per class.
class SimpleCache {
public:
  explicit SimpleCache(std::size_t n) : flags_(n, -1) {}
  bool get(SubgroupList const &list, std::size_t i)
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (flags_[i] < 0) {
      auto const &c = list.classes[i];
      flags_[i] = !c.solvable && is_nonabelian_simple(c.rep) ? 1 : 0;
    }
    return flags_[i] == 1;
  }

private:
  std::mutex mu_;
  std::vector<int> flags_;
};

FactorizationRecord make_record(SubgroupList const &list, std::string const &label,
                                SubgroupClass const &h, SubgroupClass const &k,
                                std::size_t inter, bool k_simple)
{
  std::size_t n = list.table->size();
  FactorizationRecord r;
  r.group_id = label;
  r.g_order = BigInt(static_cast<unsigned long>(n));
  r.h_order = BigInt(static_cast<unsigned long>(h.order));
  r.k_order = BigInt(static_cast<unsigned long>(k.order));
  r.hk_order = BigInt(static_cast<unsigned long>(inter));
  r.orbit_size = BigInt(static_cast<unsigned long>(h.order / inter));
  r.is_factorization = true;
  r.h_solvable = h.solvable;
  r.k_solvable = k.solvable;
  r.h_core_free = h.core_order == 1;
  r.k_core_free = k.core_order == 1;
  r.k_simple = k_simple;
  r.h = h.rep;
  r.k = k.rep;
  return r;
}

// G = HK holds for some conjugates iff it holds for all, so representatives
// suffice; |H||K| = |G||H cap K| is then exact on the reps.
std::vector<FactorizationRecord> scan_pairs(SubgroupList const &list, std::string const &label,
                                            std::vector<std::size_t> const &hs,
                                            ClassPred const &kpred, unsigned threads)
{
  std::size_t n = list.table->size();
  SimpleCache simple(list.classes.size());
  std::vector<std::vector<FactorizationRecord>> parts(hs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t w; (w = next.fetch_add(1)) < hs.size();) {
      auto const &h = list.classes[hs[w]];
      if (h.order == n || h.order == 1)
        continue;
      for (std::size_t j = 0; j < list.classes.size(); ++j) {
        auto const &k = list.classes[j];
        if (k.order == n || k.order == 1 || !kpred(k))
          continue;
        unsigned __int128 prod = static_cast<unsigned __int128>(h.order) * k.order;
        if (prod % n != 0)
          continue;
        std::size_t inter = intersection_size(h.elements, k.elements);
        if (prod != static_cast<unsigned __int128>(n) * inter)
          continue;
        parts[w].push_back(make_record(list, label, h, k, inter, simple.get(list, j)));
      }
    }
  };
  unsigned t = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < t; ++i)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();

  std::vector<FactorizationRecord> all;
  for (auto &p : parts)
    for (auto &r : p)
      all.push_back(std::move(r));
  return merge_records(std::move(all));
}

std::vector<std::size_t> select(SubgroupList const &list, ClassPred const &pred)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < list.classes.size(); ++i)
    if (pred(list.classes[i]))
      out.push_back(i);
  return out;
}

bool is_core_free(SubgroupClass const &c) { return c.core_order == 1; }

// All G-conjugates of class i, as sorted element vectors.
std::vector<std::vector<Elem>> conjugates(SubgroupList const &list, std::size_t i)
{
  auto const &t = *list.table;
  std::vector<std::vector<Elem>> out{list.classes[i].elements};
  std::vector<std::vector<Elem>> seen = out;
  auto known = [&](std::vector<Elem> const &v) {
    return std::binary_search(seen.begin(), seen.end(), v);
  };
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t s = 0; s < t.generator_indices().size(); ++s) {
      auto const &map = t.conjugation_by_generator(s);
      std::vector<Elem> d;
      d.reserve(out[a].size());
      for (Elem e : out[a])
        d.push_back(map[e]);
      std::sort(d.begin(), d.end());
      if (known(d))
        continue;
      seen.insert(std::upper_bound(seen.begin(), seen.end(), d), d);
      out.push_back(std::move(d));
    }
  return out;
}

// Class index of each maximal subgroup of the subgroup with the given
// elements (one entry per maximal subgroup, not per class).
std::vector<std::size_t> maximal_below(SubgroupList const &list, std::vector<Elem> const &x)
{
  struct Item {
    std::size_t cls;
    std::vector<Elem> elems;
  };
  std::vector<Item> inside;
  for (std::size_t c = 0; c < list.classes.size(); ++c) {
    auto const &sc = list.classes[c];
    if (sc.order >= x.size() || x.size() % sc.order != 0)
      continue;
    for (auto &v : conjugates(list, c))
      if (is_subset(v, x))
        inside.push_back({c, std::move(v)});
  }
  std::stable_sort(inside.begin(), inside.end(), [](Item const &a, Item const &b) {
    return a.elems.size() > b.elems.size();
  });
  std::vector<Item const *> maxima;
  for (auto const &it : inside) {
    bool covered = false;
    for (auto const *m : maxima)
      if (m->elems.size() > it.elems.size() && is_subset(it.elems, m->elems)) {
        covered = true;
        break;
      }
    if (!covered)
      maxima.push_back(&it);
  }
  std::vector<std::size_t> out;
  for (auto const *m : maxima)
    out.push_back(m->cls);
  return out;
}

// Order of the core in G of the subgroup with the given elements.
std::size_t core_size(ElementTable const &t, std::vector<Elem> const &h)
{
  std::vector<Elem> core = h;
  std::vector<std::vector<Elem>> queue{h};
  std::vector<std::vector<Elem>> seen{h};
  for (std::size_t a = 0; a < queue.size(); ++a)
    for (std::size_t s = 0; s < t.generator_indices().size(); ++s) {
      auto const &map = t.conjugation_by_generator(s);
      std::vector<Elem> d;
      for (Elem e : queue[a])
        d.push_back(map[e]);
      std::sort(d.begin(), d.end());
      if (std::find(seen.begin(), seen.end(), d) != seen.end())
        continue;
      std::vector<Elem> next;
      std::set_intersection(core.begin(), core.end(), d.begin(), d.end(),
                            std::back_inserter(next));
      core = std::move(next);
      seen.push_back(d);
      queue.push_back(std::move(d));
    }
  return core.size();
}

void require_exhaustive(SubgroupList const &list, char const *what)
{
  if (list.mode != EnumMode::exhaustive)
    throw PreconditionError(std::string(what) + " needs an exhaustive subgroup list");
}

}  // namespace

std::vector<FactorizationRecord> factorizations(SubgroupList const &list, std::string const &label,
                                                SearchOptions const &opts)
{
  require_exhaustive(list, "factorizations");
  return scan_pairs(list, label, select(list, is_core_free), is_core_free, opts.threads);
}

std::vector<FactorizationRecord> search_solvable_factorizations(SubgroupList const &list,
                                                                std::string const &label,
                                                                SearchOptions const &opts)
{
  require_exhaustive(list, "search_solvable_factorizations");
  auto hs = select(list, [](SubgroupClass const &c) { return c.solvable; });
  return scan_pairs(list, label, hs, is_core_free, opts.threads);
}

std::vector<FactorizationRecord> two_solvable_search(SubgroupList const &list,
                                                     std::string const &label,
                                                     SearchOptions const &opts)
{
  auto both = [](SubgroupClass const &c) { return c.solvable && c.core_order == 1; };
  return scan_pairs(list, label, select(list, both), both, opts.threads);
}

std::vector<FactorizationRecord> search_solvable_factorizations(PermGroup const &g,
                                                                std::string const &label,
                                                                SearchOptions const &opts)
{
  auto list = enumerate_subgroups(g, EnumMode::exhaustive, opts.enum_options);
  return search_solvable_factorizations(list, label, opts);
}

std::vector<FactorizationRecord> two_solvable_search(PermGroup const &g, std::string const &label,
                                                     SearchOptions const &opts)
{
  auto list = enumerate_subgroups(g, EnumMode::solvable_only, opts.enum_options);
  return two_solvable_search(list, label, opts);
}

std::vector<std::size_t> maximal_subgroup_classes(SubgroupList const &list)
{
  require_exhaustive(list, "maximal_subgroup_classes");
  std::vector<Elem> all(list.table->size());
  for (Elem e = 0; e < all.size(); ++e)
    all[e] = e;
  auto m = maximal_below(list, all);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

std::vector<std::size_t> core_free_maximal_subgroups(SubgroupList const &list)
{
  std::vector<std::size_t> out;
  for (std::size_t i : maximal_subgroup_classes(list))
    if (list.classes[i].core_order == 1)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> maximal_solvable_candidates(SubgroupList const &list)
{
  require_exhaustive(list, "maximal_solvable_candidates");
  std::vector<char> hit(list.classes.size(), 0);
  for (auto const &x : list.classes) {
    if (x.solvable)
      continue;
    for (std::size_t c : maximal_below(list, x.elements))
      if (list.classes[c].solvable)
        hit[c] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i])
      out.push_back(i);
  return out;
}

std::vector<FactorizationRecord> maximal_solvable_factorizations(SubgroupList const &list,
                                                                 std::string const &label)
{
  return scan_pairs(list, label, maximal_solvable_candidates(list), is_core_free, 1);
}

std::vector<FactorizationRecord> maximal_solvable_factorizations_in(SubgroupList const &g_list,
                                                                    PermGroup const &a,
                                                                    std::string const &label)
{
  require_exhaustive(g_list, "maximal_solvable_factorizations_in");
  if (!is_subgroup(a, g_list.parent))
    throw PreconditionError("maximal_solvable_factorizations_in: A is not a subgroup of G");
  auto a_list = enumerate_subgroups(a, EnumMode::exhaustive);
  auto const &t = *g_list.table;
  std::size_t n = t.size();
  SimpleCache simple(g_list.classes.size());
  std::vector<FactorizationRecord> all;
  for (std::size_t hi : maximal_solvable_candidates(a_list)) {
    auto const &hc = a_list.classes[hi];
    SubgroupClass h = hc;
    h.elements.clear();
    for (Elem e : hc.elements)
      h.elements.push_back(t.index_of(a_list.table->element(e)));
    std::sort(h.elements.begin(), h.elements.end());
    h.core_order = core_size(t, h.elements);
    for (std::size_t j = 0; j < g_list.classes.size(); ++j) {
      auto const &k = g_list.classes[j];
      if (k.core_order != 1 || k.order == n)
        continue;
      unsigned __int128 prod = static_cast<unsigned __int128>(h.order) * k.order;
      if (prod % n != 0)
        continue;
      std::size_t inter = intersection_size(h.elements, k.elements);
      if (prod == static_cast<unsigned __int128>(n) * inter)
        all.push_back(make_record(g_list, label, h, k, inter, simple.get(g_list, j)));
    }
  }
  return merge_records(std::move(all));
}

}  // namespace groupfact::factorlab
