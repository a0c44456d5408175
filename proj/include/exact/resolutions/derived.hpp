#pragma once

#include <string>
#include <vector>

#include "exact/resolutions/functors.hpp"
#include "exact/resolutions/resolution.hpp"

namespace exact {

// values[i] = H_i(F(P)) for covariant F, H^i(Hom(P, T)) for HomInto, each in
// Smith presentation.
struct DerivedFunctorResult {
  FunctorSpec functor;
  Resolution resolution;
  std::vector<Object> values;
};

// Presented models with enough projectives only; throws UnsupportedOperation
// otherwise.
DerivedFunctorResult derived(const ExactCategory& cat, const FunctorSpec& f, const Object& a, std::size_t max_degree);

// Covariant: L_k(A') -> L_k(A) -> L_k(A'') -> L_{k-1}(A') -> ... -> L_0(A'').
// HomInto: R^0(A'') -> R^0(A) -> R^0(A') -> R^1(A'') -> ... -> R^k(A').
// Built from a horseshoe; `exact` covers every interior joint plus the
// surjectivity of the last arrow (covariant) or injectivity of the first.
struct DerivedSequence {
  std::vector<Morphism> arrows;
  std::vector<std::string> labels;
  bool exact = false;
};

DerivedSequence derived_les(const ExactCategory& cat, const FunctorSpec& f, const ShortExactSequence& ses,
                            std::size_t max_degree);

}  // namespace exact
