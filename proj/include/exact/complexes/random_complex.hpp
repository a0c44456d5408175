#pragma once

#include "exact/complexes/complex.hpp"

namespace exact {

// Bounded complex on [lo, lo + length - 1]. Each differential is a random
// combination of generators of the maps that vanish on the previous image.
ChainComplex random_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length, const GeneratorBounds& b);
ChainComplex random_complex(const ExactCategory& cat, Rng& rng, int lo, std::vector<Object> objects,
                            const GeneratorBounds& b);

// Bounded complex spliced from random short exact sequences, starting and
// ending at zero cycle objects.
ChainComplex random_acyclic_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length,
                                    const GeneratorBounds& b);

// cone(id_X) for a random X, conjugated by random degreewise automorphisms.
ChainComplex random_contractible_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length,
                                         const GeneratorBounds& b);

// Random combination of generators of the group of chain maps x -> y.
ChainMap random_chain_map(const ExactCategory& cat, Rng& rng, const ChainComplex& x, const ChainComplex& y,
                          const GeneratorBounds& b);

// d h + h d for random components h^n.
ChainMap random_null_homotopic_map(const ExactCategory& cat, Rng& rng, const ChainComplex& x, const ChainComplex& y,
                                   const GeneratorBounds& b);

// The complex with differentials y^{n+1} o d^n o (y^n)^{-1} for automorphisms y^n.
ChainComplex conjugate(const ExactCategory& cat, const ChainComplex& x, const std::vector<Morphism>& automorphisms);

}  // namespace exact
