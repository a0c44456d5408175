#include "exact/models/abelian_groups.hpp"

#include "exact/core/constructions.hpp"
#include "exact/core/errors.hpp"

namespace exact {
namespace {

// Order of generator i of a Smith-presented object (0 for free generators).
Integer generator_order(const CanonicalPresentation& c, std::size_t i) {
  return i < c.torsion.size() ? c.torsion[i] : Integer(0);
}

// Multiplier making g_source -> step * g_target well defined.
Integer hom_step(const Integer& source_order, const Integer& target_order) {
  if (target_order == 0) return source_order == 0 ? 1 : 0;
  return target_order / gcd(source_order, target_order);
}

}  // namespace

AbelianGroups::AbelianGroups(AdmissibilityPolicy policy) : policy_(policy) {
  if (policy != AdmissibilityPolicy::AllKernelCokernel && policy != AdmissibilityPolicy::SplitOnly)
    throw InvalidInput("abelian groups support the all-kernel-cokernel and split-only policies");
}

std::string AbelianGroups::name() const {
  return policy_ == AdmissibilityPolicy::SplitOnly ? "fgab-split" : "fgab";
}

Object AbelianGroups::cyclic(const Integer& n) {
  if (n < 0) throw InvalidInput("cyclic: order must be non-negative");
  if (n == 0) return Object::free(1);
  if (n == 1) return Object();
  IntMatrix rel(1, 1);
  rel(0, 0) = n;
  return Object(rel);
}

bool AbelianGroups::is_iso(const Morphism& f) const {
  return abelian_kernel(f).domain().generators() == 0 &&
         abelian_cokernel(f).codomain().generators() == 0;
}

bool AbelianGroups::is_short_exact(const Morphism& mono, const Morphism& epi) const {
  if (mono.codomain() != epi.domain()) throw InvalidInput("is_short_exact: arrows are not composable");
  if (!is_zero_morphism(*this, compose(epi, mono))) return false;
  if (abelian_kernel(mono).domain().generators() != 0) return false;
  if (abelian_cokernel(epi).codomain().generators() != 0) return false;
  if (!solve_left(*this, mono, abelian_kernel(epi))) return false;
  if (requires_splitting() && !solve_left(*this, epi, identity(epi.codomain()))) return false;
  return true;
}

bool AbelianGroups::is_projective(const Object& a) const {
  if (policy_ == AdmissibilityPolicy::SplitOnly) return true;
  return presented_invariants(a).torsion.empty();
}

std::optional<Morphism> AbelianGroups::projective_cover(const Object& a) const {
  if (policy_ == AdmissibilityPolicy::SplitOnly) return identity(a);
  return Morphism(Object::free(a.generators()), a, IntMatrix::identity(a.generators()));
}

Object AbelianGroups::random_object(Rng& rng, const GeneratorBounds& b) const {
  const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b.max_generators)));
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
  IntMatrix rel(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      rel(i, j) = static_cast<long>(rng.uniform(-b.max_relation_entry, b.max_relation_entry));
  return Object(rel);
}

Object AbelianGroups::random_diagonal_object(Rng& rng, const GeneratorBounds& b) const {
  const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b.max_generators)));
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
  const long top = std::max(2L, b.max_relation_entry);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(1, 3))
      ++free_rank;
    else
      torsion.emplace_back(static_cast<long>(rng.uniform(2, top)));
  }
  IntMatrix rel(n, torsion.size());
  for (std::size_t c = 0; c < torsion.size(); ++c) rel(c, c) = torsion[c];
  return Object(rel);
}

Morphism AbelianGroups::random_morphism(Rng& rng, const Object& dom, const Object& cod,
                                        const GeneratorBounds& b) const {
  CanonicalPresentation cd = canonicalize(dom);
  CanonicalPresentation cc = canonicalize(cod);
  const std::size_t k_dom = cd.object.generators();
  const std::size_t k_cod = cc.object.generators();
  IntMatrix m(k_cod, k_dom);
  for (std::size_t j = 0; j < k_cod; ++j)
    for (std::size_t i = 0; i < k_dom; ++i) {
      Integer step = hom_step(generator_order(cd, i), generator_order(cc, j));
      if (step == 0) continue;
      m(j, i) = step * static_cast<long>(rng.uniform(-b.max_morphism_entry, b.max_morphism_entry));
    }
  Morphism core(cd.object, cc.object, m);
  return compose(cc.from_canonical, compose(reduce_modulo_relations(core), cd.to_canonical));
}

Morphism AbelianGroups::random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const {
  CanonicalPresentation c = canonicalize(a);
  const std::size_t k = c.object.generators();
  IntMatrix m = IntMatrix::identity(k);
  if (k > 0) {
    const int ops = static_cast<int>(2 * k);
    for (int op = 0; op < ops; ++op) {
      const std::size_t target = rng.index(k);
      const std::size_t source = rng.index(k);
      if (target == source) {
        if (rng.chance(1, 2)) m.negate_col(source);
        continue;
      }
      Integer step = hom_step(generator_order(c, source), generator_order(c, target));
      if (step == 0) continue;
      const long bound = std::max(1L, std::min(3L, b.max_morphism_entry));
      Integer coeff = step * static_cast<long>(rng.uniform(-bound, bound));
      // generator `source` is sent to itself plus coeff * generator `target`
      m.add_row_multiple(target, source, coeff);
    }
  }
  Morphism core = reduce_modulo_relations(Morphism(c.object, c.object, m));
  return compose(c.from_canonical, compose(core, c.to_canonical));
}

ShortExactSequence AbelianGroups::random_extension(Rng& rng, const Object& left, const Object& quotient,
                                                   const GeneratorBounds& b) const {
  const std::size_t na = left.generators();
  const std::size_t nx = quotient.generators();
  const IntMatrix& dx = quotient.relations();
  const std::size_t ra = left.relations().cols();
  const std::size_t t = dx.cols();
  IntMatrix rel(na + nx, ra + t);
  rel.set_block(0, 0, left.relations());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < t; ++j)
      rel(i, ra + j) = static_cast<long>(rng.uniform(-b.max_relation_entry, b.max_relation_entry));
  rel.set_block(na, ra, dx);

  IntMatrix mono(na + nx, na), epi(nx, na + nx);
  for (std::size_t i = 0; i < na; ++i) mono(i, i) = 1;
  for (std::size_t i = 0; i < nx; ++i) epi(i, na + i) = 1;

  UnimodularPair u = random_unimodular(rng, na + nx, static_cast<int>(2 * (na + nx)), 2);
  Object middle(u.forward * rel);
  return ShortExactSequence{reduce_modulo_relations(Morphism(left, middle, u.forward * mono)),
                            reduce_modulo_relations(Morphism(middle, quotient, epi * u.backward))};
}

ShortExactSequence AbelianGroups::random_ses_from(Rng& rng, const Object& left,
                                                  const GeneratorBounds& b) const {
  if (requires_splitting()) return random_split_ses(rng, left, random_object(rng, b), b);
  Object quotient = random_diagonal_object(rng, b);
  ShortExactSequence s = random_extension(rng, left, quotient, b);
  UnimodularPair v = random_unimodular(rng, quotient.generators(), static_cast<int>(quotient.generators()), 2);
  Object presented(v.forward * quotient.relations());
  Morphism reindex(quotient, presented, v.forward);
  return ShortExactSequence{s.mono, compose(reindex, s.epi)};
}

ShortExactSequence AbelianGroups::random_ses_onto(Rng& rng, const Object& right,
                                                  const GeneratorBounds& b) const {
  if (requires_splitting()) return random_split_ses(rng, random_object(rng, b), right, b);
  CanonicalPresentation c = canonicalize(right);
  ShortExactSequence s = random_extension(rng, random_object(rng, b), c.object, b);
  return ShortExactSequence{s.mono, compose(c.from_canonical, s.epi)};
}

}  // namespace exact
