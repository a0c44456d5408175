#pragma once

#include "exact/models/presented.hpp"

namespace exact {

// Finitely generated free abelian groups. Kernels are computed in abelian
// groups; cokernels are the torsion-free quotients.
class FreeAbelian : public PresentedModel {
 public:
  explicit FreeAbelian(AdmissibilityPolicy policy = AdmissibilityPolicy::ExactInAmbient);

  std::string name() const override;
  AdmissibilityPolicy policy() const override { return policy_; }
  CompletenessFlags flags() const override { return {true, true}; }
  bool is_abelian() const override { return false; }
  bool requires_splitting() const override { return policy_ == AdmissibilityPolicy::SplitOnly; }

  std::optional<Morphism> kernel(const Morphism& f) const override;
  std::optional<Morphism> cokernel(const Morphism& f) const override;

  bool is_projective(const Object&) const override { return true; }
  std::optional<Morphism> projective_cover(const Object& a) const override { return identity(a); }

  Object random_object(Rng& rng, const GeneratorBounds& b) const override;
  Morphism random_morphism(Rng& rng, const Object& dom, const Object& cod,
                           const GeneratorBounds& b) const override;
  Morphism random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const override;

  static Morphism free_kernel(const Morphism& f);
  static Morphism free_cokernel(const Morphism& f);

 protected:
  bool accepts_presentation(const Object& a) const override { return !a.has_relations(); }

 private:
  AdmissibilityPolicy policy_;
};

// Free abelian groups of even rank with the split exact structure. Kernels and
// cokernels exist exactly when they have even rank.
class EvenRankFree : public FreeAbelian {
 public:
  EvenRankFree() : FreeAbelian(AdmissibilityPolicy::ExactInAmbient) {}

  std::string name() const override { return "even-rank-split"; }
  AdmissibilityPolicy policy() const override { return AdmissibilityPolicy::EvenRankSplit; }
  CompletenessFlags flags() const override { return {false, true}; }
  bool requires_splitting() const override { return true; }

  std::optional<Morphism> kernel(const Morphism& f) const override;
  std::optional<Morphism> cokernel(const Morphism& f) const override;
  std::optional<Morphism> ambient_kernel(const Morphism& f) const override { return free_kernel(f); }
  std::optional<Morphism> ambient_cokernel(const Morphism& f) const override { return free_cokernel(f); }

  Object random_object(Rng& rng, const GeneratorBounds& b) const override;

 protected:
  bool accepts_presentation(const Object& a) const override {
    return !a.has_relations() && a.generators() % 2 == 0;
  }
};

// Free abelian groups that declare every monic admissible, paired with its
// torsion-free cokernel. This violates the axioms (x2 on Z is not a kernel of
// Z -> 0) and exists to check that the law harness reports such failures.
class AllMonicsFree : public FreeAbelian {
 public:
  AllMonicsFree() : FreeAbelian(AdmissibilityPolicy::ExactInAmbient) {}
  std::string name() const override { return "free-all-monics"; }
  bool is_short_exact(const Morphism& mono, const Morphism& epi) const override;
  ShortExactSequence random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const override;
};

}  // namespace exact
