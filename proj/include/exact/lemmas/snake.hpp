#pragma once

#include <vector>

#include "exact/lemmas/ses_morphism.hpp"

namespace exact {

// Ker f >-> Ker h -> Ker g -> Coker f -> Coker h ->> Coker g for h = g o f.
struct KerCokerResult {
  Analysis first;      // of f
  Analysis second;     // of g
  Analysis composite;  // of h
  std::vector<Factorization> arrows;  // five arrows, each as monic o epic

  std::vector<Morphism> composed(const ExactCategory& cat) const;
  bool exact(const ExactCategory& cat) const;
};

KerCokerResult ker_coker_sequence(const ExactCategory& cat, const Morphism& f, const Morphism& g);

// Kernels and cokernels of the components of a morphism of short exact
// sequences, with the connecting morphism from the right kernel to the left
// cokernel.
struct SnakeResult {
  Morphism kernel_left;  // K' >-> A'
  Morphism kernel_middle;
  Morphism kernel_right;
  Morphism cokernel_left;  // B' ->> C'
  Morphism cokernel_middle;
  Morphism cokernel_right;
  Morphism kernel_first;  // K' -> K
  Morphism kernel_second;  // K -> K''
  Morphism delta;  // K'' -> C'
  Morphism cokernel_first;  // C' -> C
  Morphism cokernel_second;  // C -> C''
  KerCokerResult through;  // the sequence of A -> D -> B that delta is read from

  std::vector<Morphism> six_term() const;
  bool exact(const ExactCategory& cat) const;
};

SnakeResult snake(const ExactCategory& cat, const SesMorphism& m);

// A morphism from the snake input m to the snake input n: alpha from
// m.source to n.source and beta from m.target to n.target with
// n o alpha == beta o m.
struct SnakeInputMorphism {
  SesMorphism alpha;
  SesMorphism beta;
};

// Arrows induced on the kernels of the right components and on the cokernels
// of the left components, and whether the connecting morphisms commute with them.
struct DeltaSquare {
  Morphism on_kernels;    // Ker m.right -> Ker n.right
  Morphism on_cokernels;  // Coker m.left -> Coker n.left
  bool commutes = false;
};

// Throws PreconditionError unless f is a morphism of snake inputs.
DeltaSquare delta_naturality(const ExactCategory& cat, const SesMorphism& m, const SesMorphism& n,
                             const SnakeInputMorphism& f);

}  // namespace exact
