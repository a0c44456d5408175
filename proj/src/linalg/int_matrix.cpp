#include "exact/linalg/int_matrix.hpp"

#include <ostream>
#include <sstream>

namespace exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t rows, std::size_t cols,
                               const std::vector<std::vector<Integer>>& data) {
  if (data.size() != rows) throw DimensionError("row count mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) throw DimensionError("column count mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionError("block out of range");
  IntMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix b(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) b(i, k) = (*this)(i, cols[k]);
  return b;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  IntMatrix b(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) b(k, j) = (*this)(rows[k], j);
  return b;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) throw DimensionError("set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row0 + i, col0 + j) = m(i, j);
}

IntMatrix IntMatrix::vec() const {
  IntMatrix v(rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v(j * rows_ + i, 0) = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::unvec(const IntMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw DimensionError("unvec shape mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v(j * rows + i, 0);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j).swap((*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a).swap((*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (s != 0) (*this)(target, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (s != 0) (*this)(i, target) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

Integer IntMatrix::max_abs() const {
  Integer m = 0;
  for (const auto& v : data_)
    if (abs(v) > m) m = abs(v);
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

IntMatrix operator-(IntMatrix a) {
  for (auto& v : a.data_) v = -v;
  return a;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

IntMatrix hstack(const std::vector<IntMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionError("hstack row mismatch");
    cols += p.cols();
  }
  IntMatrix m(rows, cols);
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(0, at, p);
    at += p.cols();
  }
  return m;
}

IntMatrix vstack(const std::vector<IntMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionError("vstack column mismatch");
    rows += p.rows();
  }
  IntMatrix m(rows, cols);
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(at, 0, p);
    at += p.rows();
  }
  return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
  }
  return os << "]<" << m.rows() << "x" << m.cols() << ">";
}

}  // namespace exact
