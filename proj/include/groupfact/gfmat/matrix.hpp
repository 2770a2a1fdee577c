#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groupfact/gfmat/field.hpp"

namespace groupfact::gfmat {

using Vec = std::vector<Fq>;

// Dense row-major matrix over a finite field. Vectors are rows and act on
// the right: v -> v*M.
class MatFq {
public:
  MatFq() = default;
  MatFq(FieldPtr field, std::size_t rows, std::size_t cols);
  static MatFq identity(FieldPtr field, std::size_t n);
  static MatFq from_rows(FieldPtr field, std::vector<Vec> const &rows);

  FieldPtr const &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fq at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Fq v) { data_[i * cols_ + j] = v; }
  std::vector<Fq> const &data() const { return data_; }
  Vec row(std::size_t i) const;

  MatFq operator*(MatFq const &o) const;
  MatFq operator+(MatFq const &o) const;
  bool operator==(MatFq const &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  MatFq transpose() const;
  // Entrywise x -> x^(p^k).
  MatFq frobenius(std::uint32_t k) const;
  MatFq pow(std::uint64_t e) const;
  Fq det() const;
  bool is_invertible() const { return det() != 0; }
  MatFq inverse() const;
  bool is_identity() const;

private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fq> data_;
};

Vec vec_mul(Vec const &v, MatFq const &m);
Vec vec_add(Field const &F, Vec const &a, Vec const &b);
Vec vec_scale(Field const &F, Fq c, Vec const &v);
bool is_zero(Vec const &v);

// Multiplicative order of an invertible matrix, given a known multiple n of
// it (e.g. q^m - 1 for Singer matrices).
std::uint64_t matrix_order_dividing(MatFq const &m, std::uint64_t n);

// Index of a vector in the enumeration of F^n (base-q digits, first
// coordinate least significant), and its inverse.
std::uint64_t vec_index(Field const &F, Vec const &v);
Vec vec_from_index(Field const &F, std::size_t n, std::uint64_t idx);

}  // namespace groupfact::gfmat
