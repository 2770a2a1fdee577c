#include "groupfact/permcore/element_table.hpp"

#include <algorithm>
#include <numeric>

#include "groupfact/errors.hpp"

namespace groupfact::permcore {

ElementTable::ElementTable(PermGroup const &g, std::size_t bound) : group_(g)
{
  if (g.order() > static_cast<unsigned long>(bound))
    throw BoundError("element table: group order " + g.order().get_str() + " exceeds bound " +
                     std::to_string(bound));
  std::size_t n = to_u64(g.order());
  elems_.reserve(n);
  g.chain().for_each_element([&](Permutation const &p) {
    elems_.push_back(p);
    return true;
  });

  std::size_t cap = 1;
  while (cap < 2 * n + 2)
    cap <<= 1;
  slots_.assign(cap, kNoElem);
  mask_ = cap - 1;
  for (Elem i = 0; i < elems_.size(); ++i)
    insert(i);

  identity_ = index_of(Permutation(g.degree()));
  inverse_.resize(n);
  for (Elem i = 0; i < n; ++i)
    inverse_[i] = index_of(elems_[i].inverse());

  for (auto const &s : g.generators())
    gen_idx_.push_back(index_of(s));
  conj_.resize(gen_idx_.size());
  for (std::size_t s = 0; s < gen_idx_.size(); ++s)
    conj_[s] = conjugation_map(gen_idx_[s]);
}

std::size_t ElementTable::slot_of(Permutation const &p) const
{
  std::size_t h = p.hash() & mask_;
  while (slots_[h] != kNoElem && !(elems_[slots_[h]] == p))
    h = (h + 1) & mask_;
  return h;
}

void ElementTable::insert(Elem i) { slots_[slot_of(elems_[i])] = i; }

Elem ElementTable::find(Permutation const &p) const
{
  if (p.degree() != group_.degree())
    return kNoElem;
  return slots_[slot_of(p)];
}

Elem ElementTable::index_of(Permutation const &p) const
{
  Elem i = find(p);
  if (i == kNoElem)
    throw PreconditionError("element table: permutation is not a group element");
  return i;
}

Elem ElementTable::mul(Elem a, Elem b) const
{
  auto const &pa = elems_[a];
  auto const &pb = elems_[b];
  std::vector<Point> im(pa.degree());
  for (Point x = 0; x < im.size(); ++x)
    im[x] = pb[pa[x]];
  return index_of(Permutation::unchecked(std::move(im)));
}

Elem ElementTable::pow(Elem a, std::uint64_t e) const
{
  Elem acc = identity_;
  Elem base = a;
  while (e) {
    if (e & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t ElementTable::element_order(Elem a) const { return elems_[a].order_u64(); }

std::vector<Elem> ElementTable::conjugation_map(Elem x) const
{
  std::vector<Elem> out(elems_.size());
  auto const &px = elems_[x];
  for (Elem e = 0; e < elems_.size(); ++e)
    out[e] = index_of(conjugate(elems_[e], px));
  return out;
}

std::vector<Elem> ElementTable::closure(std::vector<Elem> const &gens) const
{
  std::vector<char> in(elems_.size(), 0);
  std::vector<Elem> out{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Elem> class_labels(ElementTable const &t)
{
  std::vector<Elem> label(t.size(), kNoElem);
  for (Elem e = 0; e < t.size(); ++e) {
    if (label[e] != kNoElem)
      continue;
    std::vector<Elem> queue{e};
    label[e] = e;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t s = 0; s < t.generator_indices().size(); ++s) {
        Elem y = t.conjugation_by_generator(s)[queue[i]];
        if (label[y] == kNoElem) {
          label[y] = e;
          queue.push_back(y);
        }
      }
  }
  return label;
}

}  // namespace

std::vector<Elem> ElementTable::conjugacy_class_reps() const
{
  auto label = class_labels(*this);
  std::vector<Elem> reps;
  for (Elem e = 0; e < size(); ++e)
    if (label[e] == e)
      reps.push_back(e);
  return reps;
}

std::vector<std::size_t> ElementTable::conjugacy_class_sizes() const
{
  auto label = class_labels(*this);
  std::vector<std::size_t> count(size(), 0);
  for (Elem e = 0; e < size(); ++e)
    ++count[label[e]];
  std::vector<std::size_t> out;
  for (Elem e = 0; e < size(); ++e)
    if (label[e] == e)
      out.push_back(count[e]);
  return out;
}

bool is_nonabelian_simple(PermGroup const &g, std::size_t bound)
{
  ElementTable t(g, bound);
  if (t.size() == 1)
    return false;
  auto labels = class_labels(t);
  for (Elem x : t.conjugacy_class_reps()) {
    if (x == t.identity())
      continue;
    std::vector<Elem> cls;
    for (Elem e = 0; e < t.size(); ++e)
      if (labels[e] == labels[x])
        cls.push_back(e);
    // Abelian groups fail here: a class of size 1 generates a proper
    // normal subgroup unless the group has prime order.
    if (t.closure(cls).size() != t.size())
      return false;
    if (cls.size() == 1)
      return false;
  }
  return true;
}

}  // namespace groupfact::permcore
