#include "exact/resolutions/derived.hpp"

#include "exact/core/errors.hpp"
#include "exact/models/abelian_groups.hpp"

namespace exact {

namespace {

void require_presented_model(const ExactCategory& cat) {
  if (dynamic_cast<const PresentedModel*>(&cat) == nullptr)
    throw UnsupportedOperation("derived functors: model " + cat.name() + " does not consist of presented groups");
}

int cochain_degree(const FunctorSpec& f, std::size_t i) {
  return f.contravariant() ? static_cast<int>(i) : -static_cast<int>(i);
}

std::string label(const FunctorSpec& f, std::size_t i, const char* object) {
  const std::string index = std::to_string(i);
  return (f.contravariant() ? "R^" + index : "L_" + index) + "F(" + object + ")";
}

}  // namespace

DerivedFunctorResult derived(const ExactCategory& cat, const FunctorSpec& f, const Object& a, std::size_t max_degree) {
  require_presented_model(cat);
  const AbelianGroups groups;
  Resolution resolution = projective_resolution(cat, a, std::max<std::size_t>(max_degree + 1, 8));
  const ChainComplex image = apply(groups, f, resolution.complex);
  std::vector<Object> values;
  for (std::size_t i = 0; i <= max_degree; ++i)
    values.push_back(canonicalize(homology(groups, image, cochain_degree(f, i)).object).object);
  return DerivedFunctorResult{f, std::move(resolution), std::move(values)};
}

DerivedSequence derived_les(const ExactCategory& cat, const FunctorSpec& f, const ShortExactSequence& ses,
                            std::size_t max_degree) {
  require_presented_model(cat);
  const AbelianGroups groups;
  const std::size_t length = std::max<std::size_t>(max_degree + 1, 8);
  const Horseshoe h =
      horseshoe(cat, ses, projective_resolution(cat, ses.left(), length), projective_resolution(cat, ses.right(), length));
  const ChainMap in = apply(groups, f, h.inclusion);
  const ChainMap out = apply(groups, f, h.projection);

  DerivedSequence result;
  const int k = static_cast<int>(max_degree);
  if (!f.contravariant()) {
    HomologySequence s = homology_sequence(groups, in, out, -k, 0);
    result.arrows = std::move(s.arrows);
    for (std::size_t i = max_degree + 1; i-- > 0;)
      for (const char* name : {"A'", "A", "A''"}) result.labels.push_back(label(f, i, name));
    result.exact = is_exact_sequence(groups, result.arrows) && is_epic(groups, result.arrows.back());
  } else {
    HomologySequence s = homology_sequence(groups, out, in, 0, k);
    result.arrows = std::move(s.arrows);
    for (std::size_t i = 0; i <= max_degree; ++i)
      for (const char* name : {"A''", "A", "A'"}) result.labels.push_back(label(f, i, name));
    result.exact = is_exact_sequence(groups, result.arrows) && is_monic(groups, result.arrows.front());
  }
  return result;
}

}  // namespace exact
