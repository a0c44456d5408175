#include "exact/linalg/lattice.hpp"

namespace exact {
namespace {

// Back-substitution against a column Hermite form. On success returns the
// coefficient vectors (rank x cols(b)); target is consumed.
std::optional<IntMatrix> echelon_coordinates(const IntMatrix& form, std::size_t rank,
                                             const std::vector<std::size_t>& pivots,
                                             IntMatrix target) {
  IntMatrix coeffs(rank, target.cols());
  for (std::size_t col = 0; col < target.cols(); ++col) {
    for (std::size_t j = 0; j < rank; ++j) {
      const std::size_t p = pivots[j];
      const Integer& piv = form(p, j);
      const Integer& v = target(p, col);
      if (v == 0) continue;
      if (v % piv != 0) return std::nullopt;
      Integer q = v / piv;
      for (std::size_t i = p; i < form.rows(); ++i)
        if (form(i, j) != 0) target(i, col) -= q * form(i, j);
      coeffs(j, col) = std::move(q);
    }
    for (std::size_t i = 0; i < target.rows(); ++i)
      if (target(i, col) != 0) return std::nullopt;
  }
  return coeffs;
}

}  // namespace

Lattice::Lattice(const IntMatrix& generators) {
  ColumnHermite h = column_hermite(generators, false);
  basis_ = h.form.block(0, 0, generators.rows(), h.rank);
  pivot_rows_ = std::move(h.pivot_rows);
}

std::optional<IntMatrix> Lattice::coordinates(const IntMatrix& vector) const {
  if (vector.rows() != ambient_dim()) throw DimensionError("lattice vector dimension mismatch");
  return echelon_coordinates(basis_, rank(), pivot_rows_, vector);
}

bool Lattice::contains(const IntMatrix& vector) const { return coordinates(vector).has_value(); }

bool Lattice::contains_columns(const IntMatrix& m) const {
  if (m.rows() != ambient_dim()) throw DimensionError("lattice vector dimension mismatch");
  return echelon_coordinates(basis_, rank(), pivot_rows_, m).has_value();
}

IntMatrix Lattice::reduce(const IntMatrix& vector) const {
  if (vector.rows() != ambient_dim()) throw DimensionError("lattice vector dimension mismatch");
  IntMatrix v = vector;
  for (std::size_t col = 0; col < v.cols(); ++col)
    for (std::size_t j = 0; j < rank(); ++j) {
      const std::size_t p = pivot_rows_[j];
      Integer q = floor_div(v(p, col), basis_(p, j));
      if (q == 0) continue;
      for (std::size_t i = p; i < v.rows(); ++i)
        if (basis_(i, j) != 0) v(i, col) -= q * basis_(i, j);
    }
  return v;
}

std::optional<IntegerSolution> solve_integer_full(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
  ColumnHermite h = column_hermite(a, true);
  auto coeffs = echelon_coordinates(h.form, h.rank, h.pivot_rows, b);
  if (!coeffs) return std::nullopt;
  IntegerSolution out;
  out.particular = h.transform.block(0, 0, a.cols(), h.rank) * *coeffs;
  out.homogeneous = h.transform.block(0, h.rank, a.cols(), a.cols() - h.rank);
  return out;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  auto s = solve_integer_full(a, b);
  if (!s) return std::nullopt;
  return std::move(s->particular);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  ColumnHermite h = column_hermite(a, true);
  return h.transform.block(0, h.rank, a.cols(), a.cols() - h.rank);
}

std::optional<ModLatticeSolution> solve_mod_lattice(const IntMatrix& a, const IntMatrix& b,
                                                    const IntMatrix& lattice_generators) {
  if (a.rows() != lattice_generators.rows())
    throw DimensionError("solve_mod_lattice: lattice dimension mismatch");
  auto s = solve_integer(hstack(a, lattice_generators), b);
  if (!s) return std::nullopt;
  ModLatticeSolution out;
  out.x = s->block(0, 0, a.cols(), s->cols());
  out.witness = s->block(a.cols(), 0, lattice_generators.cols(), s->cols());
  return out;
}

bool lattice_membership(const IntMatrix& v, const IntMatrix& lattice_generators) {
  return Lattice(lattice_generators).contains_columns(v);
}

}  // namespace exact
