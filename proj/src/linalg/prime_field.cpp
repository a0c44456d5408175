#include "exact/linalg/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace exact {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("characteristic must be a prime below 2^31, got " + std::to_string(p));
}

std::int64_t PrimeField::reduce(const Integer& v) const {
  Integer r = mod_floor(v, Integer(static_cast<long>(p_)));
  return r.get_si();
}

IntMatrix PrimeField::reduce(const IntMatrix& m) const {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<long>(reduce(m(i, j)));
  return out;
}

std::int64_t PrimeField::inverse(std::int64_t v) const {
  std::int64_t a = ((v % p_) + p_) % p_;
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  std::int64_t result = 1;
  std::int64_t base = a;
  std::int64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return result;
}

PrimeField::RowEchelon PrimeField::rref(const IntMatrix& m) const {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = reduce(m(i, j));

  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const std::int64_t inv = inverse(a[r][c]);
    for (auto& v : a[r]) v = v * inv % p_;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p_ + p_) % p_;
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.form = IntMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.form(i, j) = static_cast<long>(a[i][j]);
  return out;
}

std::size_t PrimeField::rank(const IntMatrix& m) const { return rref(m).pivot_cols.size(); }

IntMatrix PrimeField::nullspace(const IntMatrix& m) const {
  RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  IntMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      basis(e.pivot_cols[r], k) = static_cast<long>(reduce(-e.form(r, f)));
  }
  return basis;
}

std::optional<IntMatrix> PrimeField::solve(const IntMatrix& a, const IntMatrix& b) const {
  if (a.rows() != b.rows()) throw DimensionError("solve mod p: row mismatch");
  RowEchelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  IntMatrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const std::size_t c = e.pivot_cols[r];
    if (c >= n) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) x(c, k) = e.form(r, n + k);
  }
  return x;
}

bool PrimeField::equal(const IntMatrix& a, const IntMatrix& b) const {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (reduce(a(i, j) - b(i, j)) != 0) return false;
  return true;
}

}  // namespace exact
