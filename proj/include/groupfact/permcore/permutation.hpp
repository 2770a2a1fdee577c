#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "groupfact/bigint.hpp"

namespace groupfact::permcore {

using Point = std::uint32_t;

// Permutations act on the right: x^(pq) = (x^p)^q.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Skips the bijection check; callers guarantee validity.
  static Permutation unchecked(std::vector<Point> images);

  // Cycles are given with 0-based points, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  // Least common multiple of the cycle lengths.
  BigInt order() const;
  std::uint64_t order_u64() const;

  // Smallest moved point, or degree() if none.
  Point first_moved() const;
  std::size_t hash() const;

  std::string to_cycle_string() const;

  bool operator==(Permutation const &other) const = default;
  bool operator<(Permutation const &other) const { return images_ < other.images_; }

private:
  std::vector<Point> images_;
};

// compose(p, q) maps x to q(p(x)).
Permutation compose(Permutation const &p, Permutation const &q);
inline Permutation operator*(Permutation const &p, Permutation const &q) { return compose(p, q); }

// out = p * q without allocation when out already has the right size.
void compose_into(Permutation const &p, Permutation const &q, std::vector<Point> &out);

// x^-1 p x
Permutation conjugate(Permutation const &p, Permutation const &x);

// a^-1 b^-1 a b
Permutation commutator(Permutation const &a, Permutation const &b);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const { return p.hash(); }
};

}  // namespace groupfact::permcore
