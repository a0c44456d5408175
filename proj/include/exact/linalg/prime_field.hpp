#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exact/linalg/int_matrix.hpp"

namespace exact {

bool is_prime(std::int64_t n);

// Gaussian elimination over F_p for p prime and below 2^31. Inputs may carry
// any integer entries; outputs have entries in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t characteristic() const { return p_; }

  IntMatrix reduce(const IntMatrix& m) const;
  std::int64_t reduce(const Integer& v) const;
  std::int64_t inverse(std::int64_t v) const;

  struct RowEchelon {
    IntMatrix form;  // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
  };
  RowEchelon rref(const IntMatrix& m) const;

  std::size_t rank(const IntMatrix& m) const;
  // Basis of the right null space, as columns, read off the reduced form.
  IntMatrix nullspace(const IntMatrix& m) const;
  std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) const;
  bool equal(const IntMatrix& a, const IntMatrix& b) const;

 private:
  std::int64_t p_;
};

}  // namespace exact
