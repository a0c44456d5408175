#include "exact/models/free_groups.hpp"

#include "exact/core/constructions.hpp"
#include "exact/core/errors.hpp"

namespace exact {

FreeAbelian::FreeAbelian(AdmissibilityPolicy policy) : policy_(policy) {
  if (policy != AdmissibilityPolicy::ExactInAmbient && policy != AdmissibilityPolicy::SplitOnly)
    throw InvalidInput("free abelian groups support the exact-in-ambient and split-only policies");
}

std::string FreeAbelian::name() const {
  return policy_ == AdmissibilityPolicy::SplitOnly ? "free-split" : "free";
}

Morphism FreeAbelian::free_kernel(const Morphism& f) { return abelian_kernel(f); }

Morphism FreeAbelian::free_cokernel(const Morphism& f) {
  Morphism q = abelian_cokernel(f);
  const Object& quotient = q.codomain();
  const std::size_t torsion = quotient.relations().cols();
  const std::size_t free_rank = quotient.generators() - torsion;
  IntMatrix rows = q.matrix().block(torsion, 0, free_rank, q.matrix().cols());
  return Morphism(f.codomain(), Object::free(free_rank), rows);
}

std::optional<Morphism> FreeAbelian::kernel(const Morphism& f) const { return free_kernel(f); }
std::optional<Morphism> FreeAbelian::cokernel(const Morphism& f) const { return free_cokernel(f); }

Object FreeAbelian::random_object(Rng& rng, const GeneratorBounds& b) const {
  return Object::free(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b.max_generators))));
}

Morphism FreeAbelian::random_morphism(Rng& rng, const Object& dom, const Object& cod,
                                      const GeneratorBounds& b) const {
  IntMatrix m(cod.generators(), dom.generators());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = static_cast<long>(rng.uniform(-b.max_morphism_entry, b.max_morphism_entry));
  return Morphism(dom, cod, m);
}

Morphism FreeAbelian::random_automorphism(Rng& rng, const Object& a, const GeneratorBounds&) const {
  const std::size_t n = a.generators();
  return Morphism(a, a, random_unimodular(rng, n, static_cast<int>(2 * n), 2).forward);
}

ShortExactSequence FreeAbelian::random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const {
  return random_split_ses(rng, left, random_object(rng, b), b);
}

ShortExactSequence FreeAbelian::random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const {
  return random_split_ses(rng, random_object(rng, b), right, b);
}

std::optional<Morphism> EvenRankFree::kernel(const Morphism& f) const {
  Morphism k = free_kernel(f);
  if (k.domain().generators() % 2 != 0) return std::nullopt;
  return k;
}

std::optional<Morphism> EvenRankFree::cokernel(const Morphism& f) const {
  Morphism c = free_cokernel(f);
  if (c.codomain().generators() % 2 != 0) return std::nullopt;
  return c;
}

Object EvenRankFree::random_object(Rng& rng, const GeneratorBounds& b) const {
  const auto half = static_cast<std::int64_t>(b.max_generators / 2);
  return Object::free(2 * static_cast<std::size_t>(rng.uniform(0, half)));
}

namespace {

bool injective(const Morphism& f) { return FreeAbelian::free_kernel(f).domain().generators() == 0; }

// Injective left -> Z^(left + extra), or absent after a few unlucky draws.
std::optional<Morphism> random_injection(const FreeAbelian& cat, Rng& rng, const Object& left, std::size_t extra,
                                         const GeneratorBounds& b) {
  const Object middle = Object::free(left.generators() + extra);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Morphism m = cat.random_morphism(rng, left, middle, b);
    if (injective(m)) return m;
  }
  return std::nullopt;
}

}  // namespace

bool AllMonicsFree::is_short_exact(const Morphism& mono, const Morphism& epi) const {
  if (mono.codomain() != epi.domain() || !injective(mono)) return false;
  if (!is_zero_morphism(*this, compose(epi, mono))) return false;
  if (free_cokernel(epi).codomain().generators() != 0) return false;
  return mono.domain().generators() + epi.codomain().generators() == mono.codomain().generators();
}

ShortExactSequence AllMonicsFree::random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const {
  const auto extra = static_cast<std::size_t>(rng.uniform(0, 2));
  if (auto m = random_injection(*this, rng, left, extra, b)) return {*m, free_cokernel(*m)};
  return FreeAbelian::random_ses_from(rng, left, b);
}

ShortExactSequence AllMonicsFree::random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const {
  const Object left = Object::free(static_cast<std::size_t>(rng.uniform(1, 2)));
  if (auto m = random_injection(*this, rng, left, right.generators(), b)) {
    const Morphism c = free_cokernel(*m);
    // The cokernel is free of the same rank as `right`.
    return {*m, Morphism(c.domain(), right, c.matrix())};
  }
  return FreeAbelian::random_ses_onto(rng, right, b);
}

}  // namespace exact
