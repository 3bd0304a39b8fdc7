#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liebreadth/field.hpp"

namespace liebreadth {

/// Dense exact matrix, row-major. A 0 x k or k x 0 matrix is valid.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<std::vector<Scalar>>& cols, std::size_t rows);
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> values);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// Rank by fraction-free (Bareiss) elimination. Over Q the rows are first
/// scaled to integers so every intermediate entry stays an integer.
std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in rref order.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Some x with m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

Matrix inverse(const Matrix& m);

Matrix lift(const Matrix& m, Field target);

std::vector<Scalar> zero_vector(Field field, std::size_t n);
std::vector<Scalar> unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const Scalar> v);

}  // namespace liebreadth
