#pragma once

#include <optional>

#include "exact/linalg/int_matrix.hpp"
#include "exact/linalg/normal_forms.hpp"

namespace exact {

// Sublattice of Z^n spanned by the columns of a generator matrix.
// Membership and coordinates go through the column Hermite basis, which is
// unique for the lattice.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(const IntMatrix& generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntMatrix& vector) const;
  bool contains_columns(const IntMatrix& m) const;
  // Coefficients c with basis() * c == vector.
  std::optional<IntMatrix> coordinates(const IntMatrix& vector) const;
  // Canonical representative of vector modulo the lattice: entries at pivot
  // rows are reduced into [0, pivot).
  IntMatrix reduce(const IntMatrix& vector) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

struct ModLatticeSolution {
  IntMatrix x;
  IntMatrix witness;
};

// Particular solution of a*x == b over Z (b may have several columns).
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

// Saturated basis of {x in Z^n : a*x == 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

// x and witness y with a*x + generators(l)*y == b.
std::optional<ModLatticeSolution> solve_mod_lattice(const IntMatrix& a, const IntMatrix& b,
                                                    const IntMatrix& lattice_generators);

bool lattice_membership(const IntMatrix& v, const IntMatrix& lattice_generators);

// Particular solution plus a basis of the homogeneous solution lattice.
struct IntegerSolution {
  IntMatrix particular;
  IntMatrix homogeneous;
};
std::optional<IntegerSolution> solve_integer_full(const IntMatrix& a, const IntMatrix& b);

}  // namespace exact
