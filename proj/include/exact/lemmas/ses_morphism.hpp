#pragma once

#include <optional>
#include <vector>

#include "exact/core/constructions.hpp"

namespace exact {

// A morphism of short exact sequences with components left, middle, right.
struct SesMorphism {
  ShortExactSequence source;
  ShortExactSequence target;
  Morphism left;
  Morphism middle;
  Morphism right;
};

// Both rows short exact, components well typed, both squares commute.
bool is_valid(const ExactCategory& cat, const SesMorphism& m);

SesMorphism identity_ses_morphism(const ExactCategory& cat, const ShortExactSequence& s);
// Componentwise g o f; throws InvalidInput unless f.target and g.source are the same sequence.
SesMorphism compose(const ExactCategory& cat, const SesMorphism& g, const SesMorphism& f);

// Random middle component b with b(A') inside A, chosen from the solution
// lattice of that constraint; left and right components are induced.
SesMorphism random_ses_morphism(const ExactCategory& cat, Rng& rng, const ShortExactSequence& source,
                                const ShortExactSequence& target, const GeneratorBounds& b);
SesMorphism random_ses_morphism(const ExactCategory& cat, Rng& rng, const GeneratorBounds& b);

// middle == from_middle o to_middle, where A -> D -> C' is the pushout of the
// source monic along `left`. The square into D is a pushout, the square out of
// D is a pullback.
struct SesFactorization {
  ShortExactSequence middle_row;  // target.left >-> D ->> source.right
  Morphism to_middle;             // source.middle -> D
  Morphism from_middle;           // D -> target.middle
  Pullback pullback;              // target.middle x_{target.right} source.right, built independently
  Morphism to_pullback;           // D -> pullback.object
  Morphism from_pullback;         // its inverse
};

SesFactorization factor_ses_morphism(const ExactCategory& cat, const SesMorphism& m);

enum class ArrowClass { Isomorphism, AdmissibleMonic, AdmissibleEpic };

const char* to_string(ArrowClass c);
bool has_class(const ExactCategory& cat, const Morphism& f, ArrowClass c);

struct FiveLemmaCase {
  ArrowClass property;
  bool outer_hold;   // left and right components have the property
  bool middle_holds;
  bool factors_hold;  // both factors through the middle row have the property
};

struct FiveLemmaVerdict {
  std::vector<FiveLemmaCase> cases;
  // Every case whose hypothesis holds has a middle arrow with the property.
  bool holds() const;
};

FiveLemmaVerdict five_lemma_verify(const ExactCategory& cat, const SesMorphism& m);

// Two rows of four composable admissible morphisms joined by five vertical arrows.
struct Ladder {
  std::vector<Morphism> top;       // A1 -> A2 -> A3 -> A4 -> A5
  std::vector<Morphism> bottom;    // B1 -> ... -> B5
  std::vector<Morphism> vertical;  // Ai -> Bi
};

struct LongFiveVerdict {
  bool outer_isomorphisms;
  bool middle_isomorphism;
  bool holds() const { return !outer_isomorphisms || middle_isomorphism; }
};

LongFiveVerdict long_five_verify(const ExactCategory& cat, const Ladder& ladder);

}  // namespace exact
