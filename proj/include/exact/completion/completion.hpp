#pragma once

#include <functional>
#include <optional>
#include <string>

#include "exact/core/category.hpp"
#include "exact/core/constructions.hpp"

namespace exact {

// Pairs (A, p) of an object of the base model and an idempotent p on it.
// Morphisms (A, p) -> (B, q) are base morphisms f with q f p = f; the
// identity of (A, p) is p. The object with no generators and no idempotent is
// accepted as the zero object.
//
// Kernels and cokernels are computed by splitting the idempotents in the
// base's ambient structure and padding the result with a killed free summand
// when the bare object is not in the base. Short exactness is the base's
// criterion (kernel-cokernel pair, split when the base requires it) read in
// the completion.
class IdempotentCompletion : public ExactCategory {
 public:
  // The base must outlive the completion.
  explicit IdempotentCompletion(const ExactCategory& base) : base_(base) {}

  const ExactCategory& base() const { return base_; }

  // (A, p); throws InvalidInput unless p is a well-defined idempotent on A.
  Object make_object(const Object& a, const IntMatrix& p) const;
  Object embed(const Object& a) const;
  Morphism embed(const Morphism& f) const;
  // The same matrix between the underlying base objects.
  static Morphism underlying(const Morphism& f);
  static IntMatrix idempotent_of(const Object& a);

  std::string name() const override { return base_.name() + "-completion"; }
  AdmissibilityPolicy policy() const override { return base_.policy(); }
  CompletenessFlags flags() const override { return {true, true}; }
  bool is_abelian() const override { return base_.is_abelian(); }
  bool requires_splitting() const override { return base_.requires_splitting(); }

  bool contains(const Object& a) const override;
  bool well_defined(const Morphism& f) const override;
  bool equal(const Morphism& f, const Morphism& g) const override;

  Object zero_object() const override { return Object(); }
  Morphism identity(const Object& a) const override;
  Biproduct biproduct(const Object& a, const Object& b) const override;
  Morphism normalize(const Morphism& f) const override;

  std::optional<Morphism> kernel(const Morphism& f) const override;
  std::optional<Morphism> cokernel(const Morphism& f) const override;
  std::optional<SystemSolution> solve(const LinearSystem& system) const override;

  bool is_projective(const Object& a) const override;
  std::optional<Morphism> projective_cover(const Object& a) const override;
  std::optional<IsoInvariants> iso_invariants(const Object& a) const override;

  Object random_object(Rng& rng, const GeneratorBounds& b) const override;
  Morphism random_morphism(Rng& rng, const Object& dom, const Object& cod, const GeneratorBounds& b) const override;
  Morphism random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const override;
  ShortExactSequence random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const override;

  // I >-> A ->> I with inclusion o retraction == p, in the base's ambient
  // structure. I need not lie in the base.
  struct AmbientImage {
    Object image;
    Morphism inclusion;
    Morphism retraction;
  };
  AmbientImage ambient_image(const Object& a) const;

 private:
  // (K + Z^m, 1 + 0) for the least m that puts K + Z^m into the base.
  Object pad(const Object& k) const;

  const ExactCategory& base_;
};

// X = (A, p) and an idempotent q on X split as K = (A, p - q), I = (A, q) with
// k : K -> X, i : I -> X, l : X -> K, j : X -> I, lk = 1, ji = 1, kl + ij = 1.
struct IdempotentSplitting {
  Object kernel;
  Object image;
  Morphism k;
  Morphism i;
  Morphism l;
  Morphism j;
};

// Throws InvalidInput when q is not an idempotent endomorphism.
IdempotentSplitting split_idempotent(const IdempotentCompletion& cat, const Morphism& q);

// Additive functor given by its actions. Source and target are non-owning and
// must outlive the functor.
struct Functor {
  std::string name;
  const ExactCategory* source = nullptr;
  const ExactCategory* target = nullptr;
  std::function<Object(const Object&)> on_objects;
  std::function<Morphism(const Morphism&)> on_morphisms;

  Object operator()(const Object& a) const { return on_objects(a); }
  Morphism operator()(const Morphism& f) const { return on_morphisms(f); }
};

Functor identity_functor(const ExactCategory& cat);
Functor compose_functors(const Functor& g, const Functor& f);
// F(A, p) = (F(A), F(p)). Throws PreconditionError when some F(p) is not idempotent.
Functor extend_functor(const Functor& f, const IdempotentCompletion& source, const IdempotentCompletion& target);

// For r s = 1 with a kernel k of r: t with t k = 1, t s = 0 and k t + s r = 1,
// so (k s) : K + C -> B is an isomorphism with inverse (t; r).
struct RetractionSplitting {
  Morphism kernel;      // k : K -> B
  Morphism complement;  // t : B -> K
  Morphism section;     // s : C -> B
  Morphism retraction;  // r : B -> C
};

// Absent when the model has no kernel of r. Throws PreconditionError unless r s = 1.
std::optional<RetractionSplitting> retraction_kernel_probe(const ExactCategory& cat, const Morphism& r,
                                                           const Morphism& s);
bool verify_splitting(const ExactCategory& cat, const RetractionSplitting& s);

}  // namespace exact
