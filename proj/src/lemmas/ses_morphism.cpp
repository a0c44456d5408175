#include "exact/lemmas/ses_morphism.hpp"

#include <algorithm>

#include "exact/core/errors.hpp"

namespace exact {

bool is_valid(const ExactCategory& cat, const SesMorphism& m) {
  if (m.left.domain() != m.source.left() || m.left.codomain() != m.target.left()) return false;
  if (m.middle.domain() != m.source.middle() || m.middle.codomain() != m.target.middle()) return false;
  if (m.right.domain() != m.source.right() || m.right.codomain() != m.target.right()) return false;
  if (!is_short_exact(cat, m.source) || !is_short_exact(cat, m.target)) return false;
  return commutes(cat, cat.compose(m.middle, m.source.mono), cat.compose(m.target.mono, m.left)) &&
         commutes(cat, cat.compose(m.right, m.source.epi), cat.compose(m.target.epi, m.middle));
}

SesMorphism identity_ses_morphism(const ExactCategory& cat, const ShortExactSequence& s) {
  return SesMorphism{s, s, cat.identity(s.left()), cat.identity(s.middle()), cat.identity(s.right())};
}

SesMorphism compose(const ExactCategory& cat, const SesMorphism& g, const SesMorphism& f) {
  if (!cat.equal(f.target.mono, g.source.mono) || !cat.equal(f.target.epi, g.source.epi))
    throw InvalidInput("compose: the sequences do not match");
  return SesMorphism{f.source, g.target, cat.compose(g.left, f.left), cat.compose(g.middle, f.middle),
                     cat.compose(g.right, f.right)};
}

SesMorphism random_ses_morphism(const ExactCategory& cat, Rng& rng, const ShortExactSequence& source,
                                const ShortExactSequence& target, const GeneratorBounds& b) {
  LinearSystem sys;
  sys.unknowns.push_back({source.middle(), target.middle()});
  sys.equations.push_back(
      {{LinearTerm{0, target.epi, source.mono, 1}}, cat.zero(source.left(), target.right())});
  sys.want_homogeneous = true;
  const SystemSolution sol = guaranteed(cat.solve(sys), "homogeneous system");
  Morphism middle = cat.zero(source.middle(), target.middle());
  const auto coefficient = std::max<std::int64_t>(1, std::min<std::int64_t>(2, b.max_morphism_entry));
  for (const auto& generator : sol.homogeneous)
    middle = cat.add(middle, cat.scale(Integer(static_cast<long>(rng.uniform(-coefficient, coefficient))), generator[0]));
  const Morphism left = guaranteed(solve_left(cat, target.mono, cat.compose(middle, source.mono)), "induced left");
  const Morphism right = guaranteed(solve_right(cat, source.epi, cat.compose(target.epi, middle)), "induced right");
  return SesMorphism{source, target, left, middle, right};
}

SesMorphism random_ses_morphism(const ExactCategory& cat, Rng& rng, const GeneratorBounds& b) {
  const ShortExactSequence source = cat.random_ses(rng, b);
  const ShortExactSequence target = cat.random_ses(rng, b);
  return random_ses_morphism(cat, rng, source, target, b);
}

SesFactorization factor_ses_morphism(const ExactCategory& cat, const SesMorphism& m) {
  if (!is_valid(cat, m)) throw PreconditionError("factor_ses_morphism", "not a morphism of short exact sequences");
  const Pushout po = pushout_along_monic(cat, m.source.mono, m.left);
  const Morphism epi = guaranteed(
      pushout_induced(cat, po, m.source.epi, cat.zero(m.target.left(), m.source.right())), "D ->> C'");
  const Morphism from_middle = guaranteed(pushout_induced(cat, po, m.middle, m.target.mono), "D -> B");
  const Pullback pb = pullback_along_epic(cat, m.target.epi, m.right);
  const Morphism to_pullback = guaranteed(pullback_induced(cat, pb, from_middle, epi), "D -> B x_C C'");
  const Morphism from_pullback = guaranteed(cat.inverse(to_pullback), "pushout and pullback comparison");
  return SesFactorization{ShortExactSequence{po.from_target, epi}, po.from_middle, from_middle, pb, to_pullback,
                          from_pullback};
}

const char* to_string(ArrowClass c) {
  switch (c) {
    case ArrowClass::Isomorphism: return "isomorphism";
    case ArrowClass::AdmissibleMonic: return "admissible monic";
    case ArrowClass::AdmissibleEpic: return "admissible epic";
  }
  return "?";
}

bool has_class(const ExactCategory& cat, const Morphism& f, ArrowClass c) {
  switch (c) {
    case ArrowClass::Isomorphism: return cat.is_iso(f);
    case ArrowClass::AdmissibleMonic: return is_admissible_monic(cat, f);
    case ArrowClass::AdmissibleEpic: return is_admissible_epic(cat, f);
  }
  return false;
}

bool FiveLemmaVerdict::holds() const {
  for (const auto& c : cases)
    if (c.outer_hold && !(c.middle_holds && c.factors_hold)) return false;
  return true;
}

FiveLemmaVerdict five_lemma_verify(const ExactCategory& cat, const SesMorphism& m) {
  if (!is_valid(cat, m)) throw PreconditionError("five_lemma_verify", "rows are not short exact or squares do not commute");
  const SesFactorization split = factor_ses_morphism(cat, m);
  FiveLemmaVerdict verdict;
  for (ArrowClass c : {ArrowClass::Isomorphism, ArrowClass::AdmissibleMonic, ArrowClass::AdmissibleEpic}) {
    FiveLemmaCase item{c, has_class(cat, m.left, c) && has_class(cat, m.right, c), has_class(cat, m.middle, c), true};
    if (item.outer_hold)
      item.factors_hold = has_class(cat, split.to_middle, c) && has_class(cat, split.from_middle, c);
    verdict.cases.push_back(item);
  }
  return verdict;
}

LongFiveVerdict long_five_verify(const ExactCategory& cat, const Ladder& ladder) {
  if (ladder.top.size() != 4 || ladder.bottom.size() != 4 || ladder.vertical.size() != 5)
    throw InvalidInput("long_five_verify: expected rows of four arrows and five verticals");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!commutes(cat, cat.compose(ladder.vertical[i + 1], ladder.top[i]),
                  cat.compose(ladder.bottom[i], ladder.vertical[i])))
      throw PreconditionError("long_five_verify", "square " + std::to_string(i + 1) + " does not commute");
  }
  if (!is_exact_sequence(cat, ladder.top) || !is_exact_sequence(cat, ladder.bottom))
    throw PreconditionError("long_five_verify", "rows are not exact");
  LongFiveVerdict verdict{true, cat.is_iso(ladder.vertical[2])};
  for (std::size_t i : {0, 1, 3, 4}) verdict.outer_isomorphisms = verdict.outer_isomorphisms && cat.is_iso(ladder.vertical[i]);
  return verdict;
}

}  // namespace exact
