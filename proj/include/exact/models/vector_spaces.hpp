#pragma once

#include "exact/core/category.hpp"
#include "exact/linalg/prime_field.hpp"

namespace exact {

// Finite-dimensional vector spaces over F_p. Objects are F_p^n (presented as
// Z^n without relations); matrices are read modulo p.
class VectorSpaces : public ExactCategory {
 public:
  explicit VectorSpaces(std::int64_t p);

  std::int64_t characteristic() const { return field_.characteristic(); }

  std::string name() const override;
  AdmissibilityPolicy policy() const override { return AdmissibilityPolicy::AllKernelCokernel; }
  CompletenessFlags flags() const override { return {true, true}; }
  bool is_abelian() const override { return true; }
  bool requires_splitting() const override { return false; }

  bool contains(const Object& a) const override { return !a.has_idempotent() && !a.has_relations(); }
  bool well_defined(const Morphism&) const override { return true; }
  bool equal(const Morphism& f, const Morphism& g) const override;
  Object zero_object() const override { return Object(); }
  Morphism normalize(const Morphism& f) const override;

  std::optional<Morphism> kernel(const Morphism& f) const override;
  std::optional<Morphism> cokernel(const Morphism& f) const override;
  std::optional<SystemSolution> solve(const LinearSystem& system) const override;

  bool is_short_exact(const Morphism& mono, const Morphism& epi) const override;
  bool is_iso(const Morphism& f) const override;

  bool is_projective(const Object&) const override { return true; }
  std::optional<Morphism> projective_cover(const Object& a) const override { return identity(a); }
  std::optional<IsoInvariants> iso_invariants(const Object& a) const override;

  Object random_object(Rng& rng, const GeneratorBounds& b) const override;
  Morphism random_morphism(Rng& rng, const Object& dom, const Object& cod,
                           const GeneratorBounds& b) const override;
  Morphism random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const override;

  static Object space(std::size_t dim) { return Object::free(dim); }

 private:
  PrimeField field_;
};

}  // namespace exact
