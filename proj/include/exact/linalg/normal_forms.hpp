#pragma once

#include <cstddef>
#include <vector>

#include "exact/linalg/int_matrix.hpp"

namespace exact {

// U * input * V == diagonal, U and V unimodular, left_inverse == U^-1.
// invariants holds the nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix left_inverse;
  std::vector<Integer> invariants;
  std::size_t rank = 0;
};

// Pivots on the entry of least absolute value (ties broken in row-major order),
// so the result is a deterministic function of the input.
SmithForm smith_normal_form(const IntMatrix& a);

// Diagonal of the Smith form without transforms.
std::vector<Integer> invariant_factors(const IntMatrix& a);

// Column-style Hermite form: input * transform == form.
// Columns [0, rank) of form are in echelon shape with pivot rows pivot_rows[j]
// strictly increasing, positive pivots, zeros above each pivot and entries to the
// left of each pivot reduced into [0, pivot). Remaining columns are zero.
struct ColumnHermite {
  IntMatrix form;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

ColumnHermite column_hermite(const IntMatrix& a, bool track_transform = true);

}  // namespace exact
