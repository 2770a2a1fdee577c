#include "groupfact/permcore/subgroups.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

std::size_t SubgroupList::total() const
{
  std::size_t n = 0;
  for (auto const &c : classes)
    n += c.class_size;
  return n;
}

namespace {

struct ElemVecHash {
  std::size_t operator()(std::vector<Elem> const &v) const
  {
    std::uint64_t h = 1469598103934665603ull ^ v.size();
    for (Elem e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

bool is_prime_small(std::uint64_t k)
{
  if (k < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0)
      return false;
  return true;
}

// A non-solvable group has order divisible by 4 with at least three prime
// divisors (Burnside p^a q^b, Feit-Thompson).
bool may_be_nonsolvable(std::uint64_t o)
{
  if (o < 60 || o % 4 != 0)
    return false;
  int primes = 0;
  for (std::uint64_t p = 2; p * p <= o; ++p)
    if (o % p == 0) {
      ++primes;
      while (o % p == 0)
        o /= p;
    }
  if (o > 1)
    ++primes;
  return primes >= 3;
}

struct RawClass {
  std::vector<Elem> elements;
  std::vector<Elem> gens;
  std::size_t class_size = 0;
  std::size_t core_order = 0;
  bool solvable = false;
};

class Enumerator {
public:
  Enumerator(ElementTable const &t) : t_(t), n_(t.size()), counts_(t.size(), 0) {}

  bool add(std::vector<Elem> elements, std::vector<Elem> gens, bool solvable)
  {
    auto [it, fresh] = seen_.insert(std::move(elements));
    if (!fresh)
      return false;

    std::vector<std::vector<Elem> const *> conjugates{&*it};
    for (std::size_t i = 0; i < conjugates.size(); ++i)
      for (std::size_t s = 0; s < t_.generator_indices().size(); ++s) {
        auto const &map = t_.conjugation_by_generator(s);
        std::vector<Elem> d;
        d.reserve(conjugates[i]->size());
        for (Elem e : *conjugates[i])
          d.push_back(map[e]);
        std::sort(d.begin(), d.end());
        auto [jt, nw] = seen_.insert(std::move(d));
        if (nw)
          conjugates.push_back(&*jt);
      }

    // Core = intersection of all conjugates.
    for (auto const *c : conjugates)
      for (Elem e : *c)
        ++counts_[e];
    std::size_t core = 0;
    for (Elem e : *conjugates[0]) {
      if (counts_[e] == conjugates.size())
        ++core;
    }
    for (auto const *c : conjugates)
      for (Elem e : *c)
        counts_[e] = 0;

    RawClass rc;
    rc.elements = *conjugates[0];
    rc.gens = std::move(gens);
    rc.class_size = conjugates.size();
    rc.core_order = core;
    rc.solvable = solvable;
    classes_.push_back(std::move(rc));
    return true;
  }

  // All subgroups W with U normal of prime index in W.
  void extend(std::size_t idx)
  {
    // Copy: add() may reallocate classes_.
    RawClass u = classes_[idx];
    std::vector<char> in_u(n_, 0);
    for (Elem e : u.elements)
      in_u[e] = 1;
    std::vector<char> covered = in_u;

    for (Elem x = 0; x < n_; ++x) {
      if (covered[x])
        continue;
      Elem xi = t_.inv(x);
      bool normalizes = true;
      for (Elem g : u.gens)
        if (!in_u[t_.mul(t_.mul(xi, g), x)]) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;

      std::uint64_t k = 1;
      Elem y = x;
      while (!in_u[y]) {
        y = t_.mul(y, x);
        ++k;
      }
      if (!is_prime_small(k))
        continue;

      std::vector<Elem> w = u.elements;
      Elem xp = x;
      for (std::uint64_t i = 1; i < k; ++i) {
        for (Elem e : u.elements)
          w.push_back(t_.mul(e, xp));
        xp = t_.mul(xp, x);
      }
      std::sort(w.begin(), w.end());
      for (Elem e : w)
        covered[e] = 1;
      auto gens = u.gens;
      gens.push_back(x);
      add(std::move(w), std::move(gens), u.solvable);
    }
  }

  void seed_perfect()
  {
    PermGroup const &g = t_.group();
    std::unordered_set<std::vector<Elem>, ElemVecHash> pair_groups;
    bool whole_done = false;

    auto handle = [&](PermGroup const &p) {
      PermGroup r = perfect_residual(p);
      if (r.order() == 1)
        return;
      std::vector<Elem> gens;
      for (auto const &s : r.generators())
        gens.push_back(t_.index_of(s));
      add(t_.closure(gens), gens, false);
    };

    for (Elem x : t_.conjugacy_class_reps()) {
      if (x == t_.identity())
        continue;

      std::vector<Elem> cent;
      for (Elem c = 0; c < n_; ++c)
        if (t_.mul(c, x) == t_.mul(x, c))
          cent.push_back(c);
      std::vector<Permutation> cgens;
      std::vector<Elem> cgen_idx;
      StabilizerChain cchain(g.degree(), cgens);
      for (Elem c : cent) {
        if (cchain.order() == static_cast<unsigned long>(cent.size()))
          break;
        if (cchain.contains(t_.element(c)))
          continue;
        cgens.push_back(t_.element(c));
        cgen_idx.push_back(c);
        cchain = StabilizerChain(g.degree(), cgens);
      }
      std::vector<std::vector<Elem>> maps;
      for (Elem c : cgen_idx)
        maps.push_back(t_.conjugation_map(c));

      std::vector<char> visited(n_, 0);
      for (Elem y = 0; y < n_; ++y) {
        if (visited[y])
          continue;
        std::vector<Elem> queue{y};
        visited[y] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
          for (auto const &m : maps)
            if (!visited[m[queue[i]]]) {
              visited[m[queue[i]]] = 1;
              queue.push_back(m[queue[i]]);
            }

        PermGroup p(g.degree(), {t_.element(x), t_.element(y)});
        std::uint64_t o = to_u64(p.order());
        if (o == n_) {
          if (!whole_done) {
            whole_done = true;
            handle(p);
          }
          continue;
        }
        if (!may_be_nonsolvable(o))
          continue;
        if (!pair_groups.insert(t_.closure({x, y})).second)
          continue;
        handle(p);
      }
    }
  }

  std::vector<RawClass> &classes() { return classes_; }

private:
  ElementTable const &t_;
  std::size_t n_;
  std::unordered_set<std::vector<Elem>, ElemVecHash> seen_;
  std::vector<RawClass> classes_;
  std::vector<std::uint32_t> counts_;
};

}  // namespace

SubgroupList enumerate_subgroups(PermGroup const &g, EnumMode mode, EnumOptions const &opts)
{
  if (mode == EnumMode::targeted)
    throw PreconditionError("targeted mode is served by find_subgroup_by_order");
  std::size_t bound = mode == EnumMode::exhaustive ? opts.exhaustive_bound : opts.solvable_bound;
  if (g.order() > static_cast<unsigned long>(bound))
    throw BoundError("subgroup enumeration: |G| = " + g.order().get_str() + " exceeds bound " +
                     std::to_string(bound));

  auto table = std::make_shared<ElementTable const>(g, bound);
  Enumerator en(*table);
  en.add({table->identity()}, {}, true);
  if (mode == EnumMode::exhaustive)
    en.seed_perfect();
  for (std::size_t i = 0; i < en.classes().size(); ++i)
    en.extend(i);

  SubgroupList out;
  out.parent = g;
  out.table = table;
  out.mode = mode;
  for (auto &rc : en.classes()) {
    SubgroupClass sc;
    std::vector<Permutation> gens;
    for (Elem e : rc.gens)
      gens.push_back(table->element(e));
    sc.rep = PermGroup(g.degree(), std::move(gens));
    sc.order = rc.elements.size();
    sc.class_size = rc.class_size;
    sc.core_order = rc.core_order;
    sc.solvable = rc.solvable;
    sc.elements = std::move(rc.elements);
    out.classes.push_back(std::move(sc));
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](SubgroupClass const &a, SubgroupClass const &b) { return a.order < b.order; });
  return out;
}

std::optional<PermGroup> find_subgroup_by_order(PermGroup const &g, BigInt const &target_order,
                                                std::size_t trials, std::uint64_t seed)
{
  BigInt n = g.order();
  if (!divides(target_order, n))
    throw PreconditionError("find_subgroup_by_order: target does not divide |G|");
  if (target_order == n)
    return g;
  if (target_order == 1)
    return PermGroup(g.degree(), {});

  std::mt19937_64 rng(seed);
  auto const &ch = g.chain();

  auto random_divisor = [&](std::uint64_t o) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= o; ++d)
      if (o % d == 0)
        divs.push_back(d);
    std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
    return divs[pick(rng)];
  };

  auto try_group = [&](std::vector<Permutation> gens) -> std::optional<PermGroup> {
    PermGroup h(g.degree(), std::move(gens));
    if (h.order() == target_order)
      return h;
    return std::nullopt;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Permutation x = ch.random_element(rng);
    Permutation y = ch.random_element(rng);
    std::uint64_t ox = x.order_u64();
    std::uint64_t oy = y.order_u64();

    if (divides(target_order, BigInt(static_cast<unsigned long>(ox)))) {
      std::uint64_t tgt = to_u64(target_order);
      if (auto h = try_group({x.pow(static_cast<long long>(ox / tgt))}))
        return h;
    }
    if (auto h = try_group({x, y}))
      return h;
    Permutation xa = x.pow(static_cast<long long>(random_divisor(ox)));
    Permutation yb = y.pow(static_cast<long long>(random_divisor(oy)));
    if (auto h = try_group({xa, yb}))
      return h;
  }
  return std::nullopt;
}

}  // namespace groupfact::permcore
