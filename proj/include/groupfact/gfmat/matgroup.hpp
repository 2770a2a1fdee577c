#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "groupfact/gfmat/forms.hpp"
#include "groupfact/gfmat/matrix.hpp"
#include "groupfact/gfmat/orders.hpp"
#include "groupfact/permcore/perm_group.hpp"

namespace groupfact::gfmat {

inline constexpr std::size_t kDefaultDegreeBound = 100000;

// Companion matrix of the smallest primitive degree-m polynomial over F.
MatFq singer_matrix(FieldPtr const &F, std::size_t m);

struct MatPermResult {
  permcore::PermGroup group;
  std::vector<Vec> points;  // point index -> vector (BFS order from the seeds)
};

// Permutation image on the union of the seed orbits. With projective set,
// vectors are normalized to first nonzero coordinate 1 (action on 1-spaces).
MatPermResult mat_to_perm(std::vector<MatFq> const &gens, std::vector<Vec> const &seeds,
                          std::size_t bound = kDefaultDegreeBound, bool projective = false);

// Normalizes a nonzero vector so that its first nonzero entry is 1.
Vec projective_normalize(Field const &F, Vec v);

// Generators of the full isometry group of the form (GU, Sp, GO), selected
// greedily from transvections, quasi-reflections and reflections and
// certified against classical_order on all nonzero vectors.
std::vector<MatFq> form_stabilizer_generators(FormedSpace const &s,
                                              std::size_t bound = kDefaultDegreeBound);
Family isometry_family(FormKind kind);

// Elementary generators of SL_n(q).
std::vector<MatFq> sl_generators(FieldPtr const &F, std::size_t n);

// PSL_n(q) and PGL_n(q) on the projective points of GF(q)^n.
permcore::PermGroup psl_on_points(std::size_t n, std::uint64_t q);
permcore::PermGroup pgl_on_points(std::size_t n, std::uint64_t q);
// PGammaL_n(q): PGL_n(q) extended by the Frobenius map on coordinates.
permcore::PermGroup pgaml_on_points(std::size_t n, std::uint64_t q);

struct MatGroupFile {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<MatFq> generators;
};

// .mgp: "mat <p> <f> <dim>", then dim rows of integer element codes per
// generator, generators separated by blank lines; '#' lines are comments.
MatGroupFile parse_mgp(std::string const &text, std::string const &source = "<input>");
MatGroupFile load_mgp(std::string const &path);

}  // namespace groupfact::gfmat
