#include "exact/resolutions/resolution.hpp"

#include <algorithm>

#include "exact/core/errors.hpp"

namespace exact {

namespace {

int degree_of(std::size_t n) { return -static_cast<int>(n); }

// Cochain complex with P_n in degree -n from homological components and
// differentials d_n : P_n -> P_{n-1}, n >= 1.
ChainComplex homological_complex(const ExactCategory& cat, const std::vector<Object>& objects,
                                 const std::vector<Morphism>& diffs) {
  std::vector<Object> cochain_objects(objects.rbegin(), objects.rend());
  std::vector<Morphism> cochain_diffs(diffs.rbegin(), diffs.rend());
  return ChainComplex::bounded(cat, degree_of(objects.size() - 1), std::move(cochain_objects),
                               std::move(cochain_diffs));
}

}  // namespace

ChainComplex augmented_complex(const ExactCategory& cat, const Resolution& r) {
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  for (std::size_t n = r.length() + 1; n-- > 0;) {
    objects.push_back(r.component(n));
    if (n > 0) diffs.push_back(r.differential(n));
  }
  objects.push_back(r.resolved());
  diffs.push_back(r.augmentation);
  return ChainComplex::bounded(cat, degree_of(r.length()), std::move(objects), std::move(diffs));
}

bool is_resolution(const ExactCategory& cat, const Resolution& r) {
  if (r.augmentation.domain() != r.component(0)) return false;
  for (std::size_t n = 0; n <= r.length(); ++n)
    if (!cat.is_projective(r.component(n))) return false;
  return is_acyclic(cat, augmented_complex(cat, r)).has_value();
}

Morphism projective_cover_of(const ExactCategory& cat, const Object& a) {
  if (cat.is_projective(a)) return cat.identity(a);
  auto cover = cat.projective_cover(a);
  if (!cover) throw UnsupportedOperation("model " + cat.name() + " has no projective cover of " + a.to_string());
  return *cover;
}

Resolution resolve_from_cover(const ExactCategory& cat, const Morphism& cover, std::size_t max_length) {
  if (!cat.is_projective(cover.domain()) || !is_admissible_epic(cat, cover))
    throw InvalidInput("resolve_from_cover: not an admissible epic from a projective object");
  std::vector<Object> objects{cover.domain()};
  std::vector<Morphism> diffs;
  Morphism current = cover;
  bool truncated = false;
  for (std::size_t n = 1;; ++n) {
    const Morphism k = guaranteed(cat.kernel(current), "kernel of a cover");
    if (is_zero_object(cat, k.domain())) break;
    if (n > max_length) {
      truncated = true;
      break;
    }
    current = projective_cover_of(cat, k.domain());
    diffs.push_back(cat.compose(k, current));
    objects.push_back(current.domain());
  }
  return Resolution{homological_complex(cat, objects, diffs), cover, truncated};
}

Resolution projective_resolution(const ExactCategory& cat, const Object& a, std::size_t max_length) {
  cat.require_contains(a, "projective_resolution");
  return resolve_from_cover(cat, projective_cover_of(cat, a), max_length);
}

ChainMap compare_lift(const ExactCategory& cat, const Morphism& f, const Resolution& p, const Resolution& q) {
  if (f.domain() != p.resolved() || f.codomain() != q.resolved())
    throw InvalidInput("compare_lift: map does not go between the resolved objects");
  std::map<int, Morphism> components;
  Morphism previous = guaranteed(solve_left(cat, q.augmentation, cat.compose(f, p.augmentation)), "lift of f");
  components.emplace(0, previous);
  for (std::size_t n = 1; n <= p.length(); ++n) {
    // f_{n-1} o d^P_n factors through the image of d^Q_n, then lifts along its coimage.
    const Morphism target = cat.compose(previous, p.differential(n));
    const Analysis a = guaranteed(analyze(cat, q.differential(n)), "factorization of a differential of Q");
    const Morphism into_image = guaranteed(solve_left(cat, a.image, target), "map into the image");
    previous = guaranteed(solve_left(cat, a.coimage, into_image), "lift through the coimage");
    components.emplace(degree_of(n), previous);
  }
  return ChainMap(cat, p.complex, q.complex, std::move(components));
}

ChainHomotopy lift_homotopy(const ExactCategory& cat, const Resolution& p, const Resolution& q, const ChainMap& first,
                            const ChainMap& second) {
  const Morphism first_base = cat.compose(q.augmentation, first.component(0));
  const Morphism second_base = cat.compose(q.augmentation, second.component(0));
  if (!commutes(cat, first_base, second_base))
    throw InvalidInput("lift_homotopy: the chain maps lift different morphisms");
  if (first.source().lo() != p.complex.lo() || first.target().lo() != q.complex.lo())
    throw InvalidInput("lift_homotopy: chain maps do not go between the given resolutions");
  const ChainMap difference = add(cat, first, negate(cat, second));
  return guaranteed(find_null_homotopy(cat, difference), "homotopy between lifts");
}

Horseshoe horseshoe(const ExactCategory& cat, const ShortExactSequence& ses, const Resolution& left,
                    const Resolution& right) {
  if (left.resolved() != ses.left() || right.resolved() != ses.right())
    throw InvalidInput("horseshoe: resolutions do not resolve the ends of the sequence");
  if (!is_resolution(cat, left) || !is_resolution(cat, right)) throw InvalidInput("horseshoe: input is not a resolution");
  if (!is_short_exact(cat, ses)) throw InvalidInput("horseshoe: sequence is not short exact");

  const std::size_t top = std::max(left.length(), right.length());
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  std::map<int, Morphism> inclusion;
  std::map<int, Morphism> projection;
  Morphism augmentation = ses.mono;

  // Current column K' >-> K ->> K'' with augmentations e' : P'_n -> K', e'' : P''_n -> K''.
  ShortExactSequence column = ses;
  Morphism left_aug = left.augmentation;
  Morphism right_aug = right.augmentation;
  std::optional<Morphism> kernel_inclusion;  // K >-> P_{n-1}
  for (std::size_t n = 0; n <= top; ++n) {
    const Biproduct sum = cat.biproduct(left.component(n), right.component(n));
    const Morphism lifted = guaranteed(solve_left(cat, column.epi, right_aug), "lift through the middle epic");
    const Morphism eps = copair_from(cat, cat.compose(column.mono, left_aug), lifted);
    if (kernel_inclusion) {
      diffs.push_back(cat.compose(*kernel_inclusion, eps));
    } else {
      augmentation = eps;
    }
    objects.push_back(sum.sum);
    inclusion.emplace(degree_of(n), sum.inject_first);
    projection.emplace(degree_of(n), sum.project_second);
    if (n == top) break;

    const Morphism k_left = guaranteed(cat.kernel(left_aug), "kernel of e'");
    const Morphism k_mid = guaranteed(cat.kernel(eps), "kernel of e");
    const Morphism k_right = guaranteed(cat.kernel(right_aug), "kernel of e''");
    const Morphism mono =
        guaranteed(solve_left(cat, k_mid, cat.compose(sum.inject_first, k_left)), "kernel column monic");
    const Morphism epi =
        guaranteed(solve_left(cat, k_right, cat.compose(sum.project_second, k_mid)), "kernel column epic");
    if (!is_short_exact(cat, mono, epi)) throw ConstructionFailure("horseshoe: kernel column is not short exact");
    column = ShortExactSequence{mono, epi};
    left_aug = guaranteed(solve_left(cat, k_left, left.differential(n + 1)), "d' into the kernel");
    right_aug = guaranteed(solve_left(cat, k_right, right.differential(n + 1)), "d'' into the kernel");
    kernel_inclusion = k_mid;
  }

  Resolution middle{homological_complex(cat, objects, diffs), augmentation, left.truncated || right.truncated};
  ChainMap in(cat, left.complex, middle.complex, std::move(inclusion));
  ChainMap out(cat, middle.complex, right.complex, std::move(projection));
  return Horseshoe{std::move(middle), std::move(in), std::move(out)};
}

ProjectiveReplacement projective_replacement(const ExactCategory& cat, const ChainComplex& a,
                                             std::size_t max_extra) {
  if (a.is_periodic()) throw UnsupportedOperation("projective_replacement: periodic complexes are not right bounded");
  if (a.empty()) return ProjectiveReplacement{ChainComplex(), identity_map(cat, a), false};
  // Homological indexing A_n = A^{hi-n}, d^A_n : A_{n+1} -> A_n.
  const int hi = a.hi();
  const std::size_t span = static_cast<std::size_t>(a.hi() - a.lo());
  auto object = [&](std::size_t n) { return a.object(hi - static_cast<int>(n)); };
  auto diff = [&](std::size_t n) { return a.differential(hi - static_cast<int>(n) - 1); };

  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  std::map<int, Morphism> components;
  bool truncated = false;

  Morphism cover = projective_cover_of(cat, object(0));  // p'_0 : P_0 ->> B_0 = A_0
  Morphism down = diff(0);                               // p''_0 : A_1 -> B_0
  objects.push_back(cover.domain());
  components.emplace(hi, cover);
  for (std::size_t n = 0;; ++n) {
    // B_{n+1} = P_n x_{B_n} A_{n+1} with i' : B_{n+1} -> P_n and i'' : B_{n+1} ->> A_{n+1}.
    const Pullback pb = pullback_along_epic(cat, cover, down);
    if (n >= span && is_zero_object(cat, pb.object)) break;
    if (n >= span + max_extra) {
      truncated = true;
      break;
    }
    const Morphism next_cover = projective_cover_of(cat, pb.object);
    const Morphism next_down = guaranteed(
        pullback_induced(cat, pb, zero_between(object(n + 2), cover.domain()), diff(n + 1)), "induced map into B");
    diffs.push_back(cat.compose(pb.to_middle, next_cover));
    objects.push_back(next_cover.domain());
    components.emplace(hi - static_cast<int>(n) - 1, cat.compose(pb.to_source, next_cover));
    cover = next_cover;
    down = next_down;
  }
  ChainComplex p = ChainComplex::bounded(cat, hi - static_cast<int>(objects.size()) + 1,
                                         std::vector<Object>(objects.rbegin(), objects.rend()),
                                         std::vector<Morphism>(diffs.rbegin(), diffs.rend()));
  ChainMap alpha(cat, p, a, std::move(components));
  return ProjectiveReplacement{std::move(p), std::move(alpha), truncated};
}

}  // namespace exact
