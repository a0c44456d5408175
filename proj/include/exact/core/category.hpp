#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/core/object.hpp"
#include "exact/util/random.hpp"

namespace exact {

enum class AdmissibilityPolicy { AllKernelCokernel, SplitOnly, ExactInAmbient, EvenRankSplit };

std::string to_string(AdmissibilityPolicy p);

struct CompletenessFlags {
  bool idempotent_complete = false;
  bool weakly_idempotent_complete = false;
};

struct GeneratorBounds {
  std::size_t max_generators = 4;
  long max_relation_entry = 9;
  long max_morphism_entry = 9;
};

// One unknown morphism H_u : domain -> codomain.
struct Unknown {
  Object domain;
  Object codomain;
};

// scale * left o H_unknown o right. Missing factors are identities.
struct LinearTerm {
  std::size_t unknown = 0;
  std::optional<Morphism> left;
  std::optional<Morphism> right;
  Integer scale = 1;
};

// Sum of terms equals rhs, as morphisms (compared in the hom-group).
struct LinearEquation {
  std::vector<LinearTerm> terms;
  Morphism rhs;
};

struct LinearSystem {
  std::vector<Unknown> unknowns;
  std::vector<LinearEquation> equations;
  bool want_homogeneous = false;
};

struct SystemSolution {
  std::vector<Morphism> values;
  // Generators of the solution set of the homogeneous system, one vector of
  // morphisms per generator. Filled only when requested.
  std::vector<std::vector<Morphism>> homogeneous;
};

// An additive category with a chosen exact structure, presented by integer
// matrices. Every model implements the primitive operations below; derived
// notions (admissibility, pushouts, analyses) are built on them in
// constructions.hpp.
class ExactCategory {
 public:
  virtual ~ExactCategory() = default;

  virtual std::string name() const = 0;
  virtual AdmissibilityPolicy policy() const = 0;
  virtual CompletenessFlags flags() const = 0;
  // Every morphism has a kernel and a cokernel and every kernel-cokernel pair
  // is admissible.
  virtual bool is_abelian() const = 0;
  // Admissible sequences must additionally split.
  virtual bool requires_splitting() const = 0;

  virtual bool contains(const Object& a) const = 0;
  virtual bool well_defined(const Morphism& f) const = 0;
  virtual bool equal(const Morphism& f, const Morphism& g) const = 0;

  virtual Object zero_object() const = 0;
  virtual Morphism identity(const Object& a) const;
  virtual Morphism zero(const Object& dom, const Object& cod) const;
  virtual Morphism compose(const Morphism& g, const Morphism& f) const;
  virtual Morphism add(const Morphism& f, const Morphism& g) const;
  virtual Morphism negate(const Morphism& f) const;
  Morphism subtract(const Morphism& f, const Morphism& g) const { return add(f, negate(g)); }
  virtual Morphism scale(const Integer& c, const Morphism& f) const;
  virtual Biproduct biproduct(const Object& a, const Object& b) const;
  // Canonical representative of the same morphism.
  virtual Morphism normalize(const Morphism& f) const = 0;
  // Morphism given by a block matrix over the biproducts of the listed objects.
  Morphism matrix_morphism(const std::vector<Object>& domains, const std::vector<Object>& codomains,
                           const std::vector<std::vector<Morphism>>& blocks) const;
  Object direct_sum(const std::vector<Object>& parts) const;

  virtual std::optional<Morphism> kernel(const Morphism& f) const = 0;
  virtual std::optional<Morphism> cokernel(const Morphism& f) const = 0;

  // Kernel and cokernel computed in an idempotent-complete ambient model that
  // contains this one. The results may leave the model.
  virtual std::optional<Morphism> ambient_kernel(const Morphism& f) const { return kernel(f); }
  virtual std::optional<Morphism> ambient_cokernel(const Morphism& f) const { return cokernel(f); }

  virtual std::optional<SystemSolution> solve(const LinearSystem& system) const = 0;

  // Kernel-cokernel pair in the chosen exact structure.
  virtual bool is_short_exact(const Morphism& mono, const Morphism& epi) const;

  virtual bool is_iso(const Morphism& f) const;
  virtual std::optional<Morphism> inverse(const Morphism& f) const;

  virtual bool is_projective(const Object& a) const = 0;
  // Admissible epic from a projective object, if the model has one.
  virtual std::optional<Morphism> projective_cover(const Object& a) const = 0;
  virtual std::optional<IsoInvariants> iso_invariants(const Object& a) const = 0;

  // Random generation, deterministic in the state of rng.
  virtual Object random_object(Rng& rng, const GeneratorBounds& b) const = 0;
  virtual Morphism random_morphism(Rng& rng, const Object& dom, const Object& cod,
                                   const GeneratorBounds& b) const = 0;
  virtual Morphism random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const = 0;
  virtual ShortExactSequence random_ses_from(Rng& rng, const Object& left,
                                             const GeneratorBounds& b) const = 0;
  virtual ShortExactSequence random_ses_onto(Rng& rng, const Object& right,
                                             const GeneratorBounds& b) const = 0;
  ShortExactSequence random_ses(Rng& rng, const GeneratorBounds& b) const;

  void require_contains(const Object& a, const std::string& where) const;
  void require_morphism(const Morphism& f, const std::string& where) const;

 protected:
  // Split sequence A -> A+C -> C twisted by a random automorphism of the sum.
  ShortExactSequence random_split_ses(Rng& rng, const Object& left, const Object& right,
                                      const GeneratorBounds& b) const;
};

using CategoryPtr = std::shared_ptr<const ExactCategory>;

}  // namespace exact
