#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact/linalg/integer.hpp"

namespace exact {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major integer matrix. Zero-row and zero-column shapes are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix diagonal(const std::vector<Integer>& entries);
  static IntMatrix column_vector(const std::vector<Integer>& entries);
  static IntMatrix from_rows(std::size_t rows, std::size_t cols,
                             const std::vector<std::vector<Integer>>& data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  IntMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  IntMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
  void set_block(std::size_t row0, std::size_t col0, const IntMatrix& m);

  // Row-major flattening is not used; vec() stacks columns.
  IntMatrix vec() const;
  static IntMatrix unvec(const IntMatrix& v, std::size_t rows, std::size_t cols);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  Integer max_abs() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(IntMatrix a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const std::vector<IntMatrix>& parts, std::size_t rows);
IntMatrix vstack(const std::vector<IntMatrix>& parts, std::size_t cols);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace exact
