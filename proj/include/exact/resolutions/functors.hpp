#pragma once

#include <string>

#include "exact/complexes/complex.hpp"

namespace exact {

enum class FunctorKind { TensorWith, HomFrom, HomInto };

// - ⊗ T, Hom(T, -) or Hom(-, T) on presented abelian groups, with values in
// presented abelian groups. Hom groups are kernels in Smith presentation.
struct FunctorSpec {
  FunctorKind kind = FunctorKind::TensorWith;
  Object parameter;

  bool contravariant() const { return kind == FunctorKind::HomInto; }
  std::string to_string() const;
};

Object apply(const FunctorSpec& f, const Object& a);
// For HomInto the result goes F(codomain) -> F(domain).
Morphism apply(const FunctorSpec& f, const Morphism& m);

// Degreewise application. For HomInto the result has F(X^{-n}) in degree n.
// `target` must be an abelian groups model.
ChainComplex apply(const ExactCategory& target, const FunctorSpec& f, const ChainComplex& x);
// For HomInto the map is reversed: F(y) -> F(x).
ChainMap apply(const ExactCategory& target, const FunctorSpec& f, const ChainMap& m);

}  // namespace exact
