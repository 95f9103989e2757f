#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ddc/gf.hpp"

namespace ddc {

class Vec {
 public:
  Vec(const Field& f, std::size_t n) : field_(&f), v_(n, 0) {}
  Vec(const Field& f, std::vector<uint8_t> values);

  const Field& field() const { return *field_; }
  std::size_t size() const { return v_.size(); }
  uint8_t operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, uint8_t value);
  const std::vector<uint8_t>& values() const { return v_; }
  std::size_t weight() const;

  bool operator==(const Vec& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

 private:
  const Field* field_;
  std::vector<uint8_t> v_;
};

class Matrix {
 public:
  Matrix() = default;  // empty 0x0 placeholder; field() is invalid until assigned
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint8_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, uint8_t value);
  Vec row(std::size_t r) const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<uint8_t> a_;
};

// Gauss-Jordan elimination processing columns in the given order (a
// permutation of 0..cols-1). Pivot = first nonzero entry scanning the ordered
// columns left to right, rows top to bottom. Pivot columns are reported in
// processing order, i.e. row r of the result is systematic on pivot_cols[r].
Matrix rref_in_column_order(const Matrix& m, const std::vector<std::size_t>& order,
                            std::vector<std::size_t>* pivot_cols = nullptr);

Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Euclidean (or, over GF(4), Hermitian: sum u_i * conj(v_i)) inner product.
FieldElement inner_product(const Vec& u, const Vec& v, bool hermitian = false);

// Basis of the Euclidean dual of the row space; input must have full row
// rank. For (I_k | A) the result is (-A^T | I_{n-k}).
Matrix dual_basis(const Matrix& g);

// Text format: header "q=<q> rows=<r> cols=<c>", then one row per line of
// space-separated field symbols.
std::string to_text(const Matrix& m);
Matrix matrix_from_text(std::string_view text);

}  // namespace ddc
