#include "exact/resolutions/functors.hpp"

#include "exact/core/errors.hpp"
#include "exact/models/presented.hpp"

namespace exact {

namespace {

IntMatrix id(std::size_t n) { return IntMatrix::identity(n); }

// A^k as the presentation of k copies of a.
Object power(const Object& a, std::size_t k) { return Object(kronecker(id(k), a.relations())); }

void require_presented(const Object& a, const char* what) {
  if (a.has_idempotent()) throw UnsupportedOperation(std::string(what) + ": objects with idempotents are not supported");
}

// Hom(T, A) >-> A^t, with X : Z^t -> A stored column-major as vec(X).
Morphism hom_from_inclusion(const Object& t, const Object& a) {
  const std::size_t r = t.relations().cols();
  const Morphism restrict_to_relations(power(a, t.generators()), power(a, r),
                                       kronecker(t.relations().transpose(), id(a.generators())));
  return abelian_kernel(restrict_to_relations);
}

// Hom(A, T) >-> T^a, with X : Z^a -> T stored column-major as vec(X).
Morphism hom_into_inclusion(const Object& a, const Object& t) {
  const std::size_t r = a.relations().cols();
  const Morphism restrict_to_relations(power(t, a.generators()), power(t, r),
                                       kronecker(a.relations().transpose(), id(t.generators())));
  return abelian_kernel(restrict_to_relations);
}

Morphism induced_on_kernels(const Morphism& source_inclusion, const Morphism& target_inclusion, const IntMatrix& action) {
  const Morphism ambient(source_inclusion.codomain(), target_inclusion.codomain(), action);
  const Morphism through = Morphism(source_inclusion.domain(), ambient.codomain(),
                                    ambient.matrix() * source_inclusion.matrix());
  auto lifted = solve_presented(LinearSystem{{Unknown{source_inclusion.domain(), target_inclusion.domain()}},
                                             {LinearEquation{{LinearTerm{0, target_inclusion, std::nullopt, 1}}, through}},
                                             false});
  return reduce_modulo_relations(guaranteed(lifted, "induced map on hom groups").values.at(0));
}

Object apply_presented(const FunctorSpec& f, const Object& a);

}  // namespace

std::string FunctorSpec::to_string() const {
  const std::string t = presented_invariants(parameter).to_string();
  switch (kind) {
    case FunctorKind::TensorWith:
      return "- (x) " + t;
    case FunctorKind::HomFrom:
      return "Hom(" + t + ", -)";
    case FunctorKind::HomInto:
      return "Hom(-, " + t + ")";
  }
  return "?";
}

namespace {

Object apply_presented(const FunctorSpec& f, const Object& a) {
  const Object& t = f.parameter;
  switch (f.kind) {
    case FunctorKind::TensorWith:
      return Object(hstack(kronecker(a.relations(), id(t.generators())), kronecker(id(a.generators()), t.relations())));
    case FunctorKind::HomFrom:
      return hom_from_inclusion(t, a).domain();
    case FunctorKind::HomInto:
      return hom_into_inclusion(a, t).domain();
  }
  throw InvalidInput("unknown functor");
}

}  // namespace

Object apply(const FunctorSpec& f, const Object& a) {
  require_presented(a, "functor");
  require_presented(f.parameter, "functor");
  const Object out = apply_presented(f, a);
  return out.generators() == 0 ? Object() : out;
}

Morphism apply(const FunctorSpec& f, const Morphism& m) {
  const Object& t = f.parameter;
  const Object dom = apply(f, f.contravariant() ? m.codomain() : m.domain());
  const Object cod = apply(f, f.contravariant() ? m.domain() : m.codomain());
  switch (f.kind) {
    case FunctorKind::TensorWith:
      return reduce_modulo_relations(Morphism(dom, cod, kronecker(m.matrix(), id(t.generators()))));
    case FunctorKind::HomFrom:
      // X |-> M X, i.e. (I_t (x) M) vec(X).
      return Morphism(dom, cod,
                      induced_on_kernels(hom_from_inclusion(t, m.domain()), hom_from_inclusion(t, m.codomain()),
                                         kronecker(id(t.generators()), m.matrix()))
                          .matrix());
    case FunctorKind::HomInto:
      // X |-> X M, i.e. (M^T (x) I_t) vec(X).
      return Morphism(dom, cod,
                      induced_on_kernels(hom_into_inclusion(m.codomain(), t), hom_into_inclusion(m.domain(), t),
                                         kronecker(m.matrix().transpose(), id(t.generators())))
                          .matrix());
  }
  throw InvalidInput("unknown functor");
}

ChainComplex apply(const ExactCategory& target, const FunctorSpec& f, const ChainComplex& x) {
  if (x.is_periodic()) throw UnsupportedOperation("functor: periodic complexes are not supported");
  if (x.empty()) return ChainComplex();
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  if (!f.contravariant()) {
    for (int n = x.lo(); n <= x.hi(); ++n) {
      objects.push_back(apply(f, x.object(n)));
      if (n < x.hi()) diffs.push_back(apply(f, x.differential(n)));
    }
    return ChainComplex::bounded(target, x.lo(), std::move(objects), std::move(diffs));
  }
  // Degree n holds F(X^{-n}) with differential F(d^{-n-1}).
  for (int n = -x.hi(); n <= -x.lo(); ++n) {
    objects.push_back(apply(f, x.object(-n)));
    if (n < -x.lo()) diffs.push_back(apply(f, x.differential(-n - 1)));
  }
  return ChainComplex::bounded(target, -x.hi(), std::move(objects), std::move(diffs));
}

ChainMap apply(const ExactCategory& target, const FunctorSpec& f, const ChainMap& m) {
  const ChainComplex source = apply(target, f, m.source());
  const ChainComplex image = apply(target, f, m.target());
  std::map<int, Morphism> components;
  for (int n : common_degrees(m.source(), m.target())) {
    if (f.contravariant()) {
      components.emplace(-n, apply(f, m.component(n)));
    } else {
      components.emplace(n, apply(f, m.component(n)));
    }
  }
  if (f.contravariant()) return ChainMap(target, image, source, std::move(components));
  return ChainMap(target, source, image, std::move(components));
}

}  // namespace exact
