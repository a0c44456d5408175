#pragma once

#include <cstddef>

#include "exact/complexes/acyclicity.hpp"
#include "exact/complexes/complex.hpp"

namespace exact {

// P_n sits in cochain degree -n; differential(n) is P_n -> P_{n-1}.
struct Resolution {
  ChainComplex complex;
  Morphism augmentation;  // P_0 -> A
  // The construction stopped at max_length with a nonzero kernel left over.
  bool truncated = false;

  const Object& resolved() const { return augmentation.codomain(); }
  Object component(std::size_t n) const { return complex.object(-static_cast<int>(n)); }
  Morphism differential(std::size_t n) const { return complex.differential(-static_cast<int>(n)); }
  // Highest n with P_n stored.
  std::size_t length() const { return complex.empty() ? 0 : static_cast<std::size_t>(-complex.lo()); }
};

// ... -> P_1 -> P_0 -> A with A in degree 1.
ChainComplex augmented_complex(const ExactCategory& cat, const Resolution& r);
// Projective components and an acyclic augmented complex.
bool is_resolution(const ExactCategory& cat, const Resolution& r);

// The identity when A is projective, the model's cover otherwise. Throws
// UnsupportedOperation when the model has no cover for A.
Morphism projective_cover_of(const ExactCategory& cat, const Object& a);

// Cover, kernel, cover, ... starting from the given admissible epic P_0 ->> A.
Resolution resolve_from_cover(const ExactCategory& cat, const Morphism& cover, std::size_t max_length = 8);
Resolution projective_resolution(const ExactCategory& cat, const Object& a, std::size_t max_length = 8);

// Chain map P -> Q over f : P.resolved() -> Q.resolved(). Each component is
// lifted through the factorization of the next differential of Q.
ChainMap compare_lift(const ExactCategory& cat, const Morphism& f, const Resolution& p, const Resolution& q);

// h with first - second = dh + hd, for two lifts of the same map. Throws
// InvalidInput when the degree-0 components cover different maps.
ChainHomotopy lift_homotopy(const ExactCategory& cat, const Resolution& p, const Resolution& q, const ChainMap& first,
                            const ChainMap& second);

struct Horseshoe {
  Resolution middle;      // P_n = P'_n + P''_n
  ChainMap inclusion;     // P' -> P
  ChainMap projection;    // P -> P''
};

// Fills in a resolution of ses.middle() from resolutions of its ends. Throws
// InvalidInput when the resolutions do not resolve the ends of ses.
Horseshoe horseshoe(const ExactCategory& cat, const ShortExactSequence& ses, const Resolution& left,
                    const Resolution& right);

struct ProjectiveReplacement {
  ChainComplex complex;
  ChainMap map;  // complex -> the input
  // Stopped after max_extra degrees below the input window with B_n nonzero.
  bool truncated = false;
};

// Bounded complex of projectives P with a map P -> A whose cone is acyclic,
// built from iterated pullbacks B_{n+1} = P_n x_{B_n} A^{n+1} and covers
// P_n ->> B_n. Below the input window the construction continues until B_n
// vanishes or max_extra further degrees have been added.
ProjectiveReplacement projective_replacement(const ExactCategory& cat, const ChainComplex& a,
                                             std::size_t max_extra = 8);

}  // namespace exact
