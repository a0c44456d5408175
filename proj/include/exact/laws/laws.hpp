#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/laws/harness.hpp"
#include "exact/resolutions/functors.hpp"

namespace exact {

// Law families. Generation builds each law's premises by construction; the
// checks re-verify the premises before testing the conclusion.

// Identities, composition, pushouts along admissible monics, pullbacks along
// admissible epics, and that the declared sequences are kernel-cokernel pairs.
std::vector<Law> axiom_laws();
// i with a cokernel and j o i an admissible monic: i is an admissible monic.
std::vector<Law> obscure_laws();
// Pullback of an admissible monic along an admissible epic is an admissible monic.
std::vector<Law> pullback_monic_laws();
// Summands of a short exact direct sum are short exact.
std::vector<Law> summand_laws();
// Five lemma for morphisms of short exact sequences and the long five lemma.
std::vector<Law> five_laws();
// g o f admissible epic gives g admissible epic, and dually. Needs weak idempotent completeness.
std::vector<Law> cancellation_laws();
// Chain maps between acyclic complexes have acyclic cones.
std::vector<Law> cone_acyclicity_laws();
// Complexes with null-homotopic identity are acyclic. Holds in idempotent
// complete models; includes the alternating projection complex as a fixed instance.
std::vector<Law> null_homotopic_laws();
// Heller-style axiom set: identities, composition, cancellation and the 3x3 first-column law.
std::vector<Law> heller_laws();
// F maps short exact sequences to short exact sequences and pushout squares
// along admissible monics to pushout squares (pullback squares for Hom(-, T)).
std::vector<Law> functor_exact_laws(const FunctorSpec& f);

LawReport check_axioms(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_obscure(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_pullback_monic(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_summands(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_five(const ExactCategory& cat, const LawConfig& cfg);
// Throws PreconditionError unless the model is weakly idempotent complete.
LawReport check_cancellation(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_cone_acyclicity(const ExactCategory& cat, const LawConfig& cfg);
LawReport check_null_homotopic(const ExactCategory& cat, const LawConfig& cfg);
// Throws PreconditionError unless the model is weakly idempotent complete.
LawReport check_heller(const ExactCategory& cat, const LawConfig& cfg);
// Throws PreconditionError unless the model's objects are plain presented groups.
LawReport check_functor_exact(const FunctorSpec& f, const ExactCategory& cat, const LawConfig& cfg);

// Suites runnable by name (all of the above except the functor suite).
std::vector<std::string> suite_names();
// Throws InvalidInput for an unknown name.
LawReport run_named_suite(const std::string& name, const ExactCategory& cat, const LawConfig& cfg);

// Periodic complex on Z^2 with differentials alternating between diag(1, 0)
// and diag(0, 1); absent when Z^2 (or its embedding into a completion) is not
// an object of the model. `window` must be even.
std::optional<ChainComplex> alternating_projection_complex(const ExactCategory& cat, std::size_t window);

// Reason why (i, p) is not a kernel-cokernel pair (split when the model
// requires it), computed from the model's kernels and cokernels.
std::optional<std::string> kernel_cokernel_defect(const ExactCategory& cat, const Morphism& i, const Morphism& p);

}  // namespace exact
