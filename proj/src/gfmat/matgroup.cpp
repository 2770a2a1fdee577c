#include "groupfact/gfmat/matgroup.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "groupfact/errors.hpp"

namespace groupfact::gfmat {

using permcore::Permutation;
using permcore::PermGroup;
using permcore::Point;

namespace {

struct VecHash {
  std::size_t operator()(Vec const &v) const
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Fq x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t vector_count(Field const &F, std::size_t dim, std::size_t bound)
{
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= F.q();
    if (n > bound + 1)
      throw BoundError("vector space of size " + F.name() + "^" + std::to_string(dim) +
                       " exceeds degree bound " + std::to_string(bound));
  }
  return n;
}

// x -> x + c * beta(x, v) * u as a matrix: I + c * (gram * conj(v)^T) * u
MatFq rank_one_update(FormedSpace const &s, Vec const &v, Fq c, Vec const &u)
{
  Field const &F = *s.field;
  Vec col(s.dim, 0);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j)
      col[i] = F.add(col[i], F.mul(s.gram.at(i, j), s.conj(v[j])));
  MatFq m = MatFq::identity(s.field, s.dim);
  for (std::size_t i = 0; i < s.dim; ++i) {
    Fq ci = F.mul(c, col[i]);
    if (ci == 0)
      continue;
    for (std::size_t j = 0; j < s.dim; ++j)
      m.set(i, j, F.add(m.at(i, j), F.mul(ci, u[j])));
  }
  return m;
}

Permutation perm_on_all_vectors(MatFq const &g, std::size_t dim, std::uint64_t count)
{
  Field const &F = *g.field();
  std::vector<Point> img(count - 1);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Vec w = vec_mul(vec_from_index(F, dim, idx), g);
    img[idx - 1] = static_cast<Point>(vec_index(F, w) - 1);
  }
  return Permutation(std::move(img));
}

}  // namespace

MatFq singer_matrix(FieldPtr const &F, std::size_t m)
{
  if (m < 1)
    throw PreconditionError("singer_matrix: m must be positive");
  Poly g = primitive_polynomial(*F, static_cast<std::uint32_t>(m));
  MatFq c(F, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i)
    c.set(i, i + 1, 1);
  for (std::size_t j = 0; j < m; ++j)
    c.set(m - 1, j, F->neg(g[j]));
  return c;
}

Vec projective_normalize(Field const &F, Vec v)
{
  for (Fq x : v)
    if (x != 0) {
      Fq ix = F.inv(x);
      for (auto &y : v)
        y = F.mul(y, ix);
      return v;
    }
  throw PreconditionError("projective_normalize: zero vector");
}

MatPermResult mat_to_perm(std::vector<MatFq> const &gens, std::vector<Vec> const &seeds,
                          std::size_t bound, bool projective)
{
  if (seeds.empty())
    throw PreconditionError("mat_to_perm: no seed vectors");
  std::size_t dim = seeds[0].size();
  FieldPtr F = gens.empty() ? nullptr : gens[0].field();
  for (auto const &g : gens) {
    if (g.rows() != dim || g.cols() != dim || !(*g.field() == *F))
      throw PreconditionError("mat_to_perm: generator shape or field mismatch");
    if (!g.is_invertible())
      throw PreconditionError("mat_to_perm: singular generator");
  }

  MatPermResult out;
  std::unordered_map<Vec, Point, VecHash> index;
  auto add_point = [&](Vec v) -> Point {
    if (projective)
      v = projective_normalize(*F, std::move(v));
    auto it = index.find(v);
    if (it != index.end())
      return it->second;
    if (out.points.size() >= bound)
      throw BoundError("mat_to_perm: orbit union exceeds degree bound " + std::to_string(bound));
    Point p = static_cast<Point>(out.points.size());
    index.emplace(v, p);
    out.points.push_back(std::move(v));
    return p;
  };
  for (auto const &s : seeds) {
    if (s.size() != dim)
      throw PreconditionError("mat_to_perm: seed dimension mismatch");
    if (projective && !F)
      throw PreconditionError("mat_to_perm: projective mode needs generators");
    add_point(s);
  }

  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vec w = vec_mul(out.points[i], gens[g]);
      images[g].push_back(add_point(std::move(w)));
    }
  std::vector<Permutation> perms;
  for (auto &im : images)
    perms.emplace_back(std::move(im));
  out.group = PermGroup(out.points.size(), std::move(perms));
  return out;
}

Family isometry_family(FormKind kind)
{
  switch (kind) {
  case FormKind::symplectic:
    return Family::Sp;
  case FormKind::unitary:
    return Family::GU;
  case FormKind::quadratic_plus:
    return Family::GOplus;
  case FormKind::quadratic_minus:
    return Family::GOminus;
  case FormKind::quadratic_odd:
    return Family::GOodd;
  }
  return Family::GL;
}

std::vector<MatFq> form_stabilizer_generators(FormedSpace const &s, std::size_t bound)
{
  Field const &F = *s.field;
  if (s.kind == FormKind::quadratic_odd && F.p() == 2)
    throw PreconditionError("form_stabilizer_generators: odd orthogonal needs odd q");
  BigInt target = classical_order(isometry_family(s.kind), s.dim, s.q);
  std::uint64_t count = vector_count(F, s.dim, bound);

  // Scalars used by the recipes.
  std::vector<Fq> trans_scalars;
  Fq zeta = 1;
  if (s.kind == FormKind::unitary) {
    // trace-zero a (a + a^q = 0) times a basis of GF(q) over GF(p)
    Fq a0 = 0;
    for (Fq a = 1; a < F.q() && a0 == 0; ++a)
      if (F.add(a, s.conj(a)) == 0)
        a0 = a;
    auto base = Field::of_order(s.q)->prime_basis();
    // GF(q) inside GF(q^2) is generated additively by w^((q+1) k)
    Fq w = F.pow(F.primitive(), static_cast<std::int64_t>(s.q + 1));
    Fq b = 1;
    for (std::size_t k = 0; k < base.size(); ++k) {
      trans_scalars.push_back(F.mul(a0, b));
      b = F.mul(b, w);
    }
    zeta = F.pow(F.primitive(), static_cast<std::int64_t>(s.q - 1));
  } else {
    trans_scalars = F.prime_basis();
  }

  std::vector<MatFq> chosen;
  std::vector<Permutation> chosen_perms;
  permcore::StabilizerChain chain(count - 1, {});
  auto consider = [&](MatFq const &m) {
    if (!preserves_form(s, m))
      throw InvariantError("form_stabilizer_generators: recipe matrix does not preserve the form");
    Permutation p = perm_on_all_vectors(m, s.dim, count);
    if (chain.contains(p))
      return;
    chosen.push_back(m);
    chosen_perms.push_back(std::move(p));
    chain = permcore::StabilizerChain(count - 1, chosen_perms);
  };

  std::size_t tried = 0;
  for (std::uint64_t idx = 1; idx < count && chain.order() != target; ++idx) {
    Vec v = vec_from_index(F, s.dim, idx);
    if (s.kind == FormKind::symplectic || s.kind == FormKind::unitary) {
      Fq n = eval_form(s, v, v);
      if (n == 0) {
        for (Fq a : trans_scalars)
          consider(rank_one_update(s, v, a, v));
      } else if (s.kind == FormKind::unitary) {
        Fq c = F.div(F.sub(zeta, 1), n);
        consider(rank_one_update(s, v, c, v));
      }
    } else {
      Fq qv = eval_quadratic(s, v);
      if (qv == 0)
        continue;
      consider(rank_one_update(s, v, F.neg(F.inv(qv)), v));
    }
    if (++tried > 20000)
      break;
  }
  if (chain.order() != target)
    throw InvariantError("form_stabilizer_generators: certification failed for " + to_string(s.kind) +
                         " dim " + std::to_string(s.dim) + " q " + std::to_string(s.q) + ": got " +
                         chain.order().get_str() + ", expected " + target.get_str());
  return chosen;
}

std::vector<MatFq> sl_generators(FieldPtr const &F, std::size_t n)
{
  std::vector<MatFq> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (Fq a : F->prime_basis()) {
        MatFq m = MatFq::identity(F, n);
        m.set(i, j, a);
        gens.push_back(std::move(m));
      }
    }
  return gens;
}

PermGroup psl_on_points(std::size_t n, std::uint64_t q)
{
  auto F = Field::of_order(q);
  Vec e1(n, 0);
  e1[0] = 1;
  auto res = mat_to_perm(sl_generators(F, n), {e1}, kDefaultDegreeBound, true);
  return permcore::with_reduced_generators(res.group);
}

PermGroup pgl_on_points(std::size_t n, std::uint64_t q)
{
  auto F = Field::of_order(q);
  auto gens = sl_generators(F, n);
  MatFq d = MatFq::identity(F, n);
  d.set(0, 0, F->primitive());
  gens.push_back(d);
  Vec e1(n, 0);
  e1[0] = 1;
  auto res = mat_to_perm(gens, {e1}, kDefaultDegreeBound, true);
  return permcore::with_reduced_generators(res.group);
}

PermGroup pgaml_on_points(std::size_t n, std::uint64_t q)
{
  auto F = Field::of_order(q);
  auto gens = sl_generators(F, n);
  MatFq d = MatFq::identity(F, n);
  d.set(0, 0, F->primitive());
  gens.push_back(d);
  Vec e1(n, 0);
  e1[0] = 1;
  auto res = mat_to_perm(gens, {e1}, kDefaultDegreeBound, true);
  std::map<Vec, permcore::Point> index;
  for (std::size_t i = 0; i < res.points.size(); ++i)
    index[res.points[i]] = static_cast<permcore::Point>(i);
  std::vector<permcore::Point> img(res.points.size());
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    Vec v = res.points[i];
    for (auto &x : v)
      x = F->frobenius(x);
    img[i] = index.at(projective_normalize(*F, v));
  }
  auto pgens = res.group.generators();
  pgens.push_back(permcore::Permutation(std::move(img)));
  return permcore::with_reduced_generators(PermGroup(res.points.size(), std::move(pgens)));
}

MatGroupFile parse_mgp(std::string const &text, std::string const &source)
{
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  MatGroupFile out;
  std::vector<Vec> rows;
  std::size_t block_start = 0;

  auto finish_block = [&](std::size_t at_line) {
    if (rows.empty())
      return;
    if (rows.size() != out.dim)
      throw ParseError(source, block_start,
                       "generator has " + std::to_string(rows.size()) + " rows, expected " +
                           std::to_string(out.dim));
    MatFq m = MatFq::from_rows(out.field, rows);
    if (!m.is_invertible())
      throw ParseError(source, at_line, "generator is singular");
    out.generators.push_back(std::move(m));
    rows.clear();
  };

  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#')
      continue;
    if (first == std::string::npos) {
      if (header)
        finish_block(lineno);
      continue;
    }
    std::istringstream ls(line);
    if (!header) {
      std::string tag;
      long long p = 0, f = 0, dim = 0;
      if (!(ls >> tag >> p >> f >> dim) || tag != "mat" || p < 2 || f < 1 || dim < 1)
        throw ParseError(source, lineno, "expected header 'mat <p> <f> <dim>'");
      std::string extra;
      if (ls >> extra)
        throw ParseError(source, lineno, "trailing tokens in header");
      try {
        out.field = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(f));
      } catch (std::exception const &e) {
        throw ParseError(source, lineno, e.what());
      }
      out.dim = static_cast<std::size_t>(dim);
      header = true;
      continue;
    }
    if (rows.empty())
      block_start = lineno;
    Vec row;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &pos);
      } catch (std::exception const &) {
        pos = 0;
      }
      if (pos != tok.size() || v < 0 || v >= static_cast<long long>(out.field->q()))
        throw ParseError(source, lineno, "invalid field element '" + tok + "'");
      row.push_back(static_cast<Fq>(v));
    }
    if (row.size() != out.dim)
      throw ParseError(source, lineno,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(out.dim));
    rows.push_back(std::move(row));
    if (rows.size() > out.dim)
      throw ParseError(source, lineno, "generator has too many rows");
  }
  if (!header)
    throw ParseError(source, lineno, "missing header");
  finish_block(lineno);
  return out;
}

MatGroupFile load_mgp(std::string const &path)
{
  std::ifstream f(path);
  if (!f)
    throw ParseError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_mgp(ss.str(), path);
}

}  // namespace groupfact::gfmat
