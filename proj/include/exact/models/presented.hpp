#pragma once

#include <optional>
#include <vector>

#include "exact/core/category.hpp"

namespace exact {

// Isomorphism between a presented group and its Smith presentation
// Z/d_1 + ... + Z/d_k + Z^r with d_i > 1.
struct CanonicalPresentation {
  Object object;
  Morphism to_canonical;
  Morphism from_canonical;
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
};

CanonicalPresentation canonicalize(const Object& a);
IsoInvariants presented_invariants(const Object& a);

// Kernel and cokernel of a homomorphism of finitely presented abelian groups,
// with objects in Smith presentation.
Morphism abelian_kernel(const Morphism& f);
Morphism abelian_cokernel(const Morphism& f);

// Column reduction modulo the codomain relations.
Morphism reduce_modulo_relations(const Morphism& f);
bool presented_well_defined(const Morphism& f);
bool presented_equal(const Morphism& f, const Morphism& g);

// Solves a linear system of morphisms between presented groups over Z.
std::optional<SystemSolution> solve_presented(const LinearSystem& system);

// Unimodular matrix together with its inverse.
struct UnimodularPair {
  IntMatrix forward;
  IntMatrix backward;
};
UnimodularPair random_unimodular(Rng& rng, std::size_t n, int operations, long max_multiplier);

// Models whose objects are plain presented groups (no idempotent).
class PresentedModel : public ExactCategory {
 public:
  bool contains(const Object& a) const override;
  bool well_defined(const Morphism& f) const override { return presented_well_defined(f); }
  bool equal(const Morphism& f, const Morphism& g) const override { return presented_equal(f, g); }
  Object zero_object() const override { return Object(); }
  Morphism normalize(const Morphism& f) const override { return reduce_modulo_relations(f); }
  std::optional<SystemSolution> solve(const LinearSystem& system) const override {
    return solve_presented(system);
  }
  std::optional<IsoInvariants> iso_invariants(const Object& a) const override {
    return presented_invariants(a);
  }

 protected:
  virtual bool accepts_presentation(const Object& a) const = 0;
};

}  // namespace exact
