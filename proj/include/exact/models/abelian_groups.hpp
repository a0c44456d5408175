#pragma once

#include "exact/models/presented.hpp"

namespace exact {

// Finitely generated abelian groups, with either all kernel-cokernel pairs
// (the abelian structure) or only the split ones.
class AbelianGroups : public PresentedModel {
 public:
  explicit AbelianGroups(AdmissibilityPolicy policy = AdmissibilityPolicy::AllKernelCokernel);

  std::string name() const override;
  AdmissibilityPolicy policy() const override { return policy_; }
  CompletenessFlags flags() const override { return {true, true}; }
  bool is_abelian() const override { return policy_ == AdmissibilityPolicy::AllKernelCokernel; }
  bool requires_splitting() const override { return policy_ == AdmissibilityPolicy::SplitOnly; }

  std::optional<Morphism> kernel(const Morphism& f) const override { return abelian_kernel(f); }
  std::optional<Morphism> cokernel(const Morphism& f) const override { return abelian_cokernel(f); }

  bool is_short_exact(const Morphism& mono, const Morphism& epi) const override;
  bool is_iso(const Morphism& f) const override;

  bool is_projective(const Object& a) const override;
  std::optional<Morphism> projective_cover(const Object& a) const override;

  Object random_object(Rng& rng, const GeneratorBounds& b) const override;
  Morphism random_morphism(Rng& rng, const Object& dom, const Object& cod,
                           const GeneratorBounds& b) const override;
  Morphism random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const override;

  // Z/n, with cyclic(0) == Z and cyclic(1) == 0.
  static Object cyclic(const Integer& n);
  static Object free(std::size_t rank) { return Object::free(rank); }

 protected:
  bool accepts_presentation(const Object&) const override { return true; }

 private:
  // Extension of `quotient` (Smith-presented, torsion first) by `left`.
  ShortExactSequence random_extension(Rng& rng, const Object& left, const Object& quotient,
                                      const GeneratorBounds& b) const;
  Object random_diagonal_object(Rng& rng, const GeneratorBounds& b) const;

  AdmissibilityPolicy policy_;
};

}  // namespace exact
