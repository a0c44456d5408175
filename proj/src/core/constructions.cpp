#include "exact/core/constructions.hpp"

#include "exact/core/errors.hpp"

namespace exact {

std::optional<Morphism> solve_left(const ExactCategory& cat, const Morphism& left, const Morphism& rhs) {
  if (left.codomain() != rhs.codomain()) throw InvalidInput("solve_left: codomains differ");
  LinearSystem sys;
  sys.unknowns.push_back(Unknown{rhs.domain(), left.domain()});
  sys.equations.push_back(LinearEquation{{LinearTerm{0, left, std::nullopt, 1}}, rhs});
  auto sol = cat.solve(sys);
  if (!sol) return std::nullopt;
  return sol->values[0];
}

std::optional<Morphism> solve_right(const ExactCategory& cat, const Morphism& right, const Morphism& rhs) {
  if (right.domain() != rhs.domain()) throw InvalidInput("solve_right: domains differ");
  LinearSystem sys;
  sys.unknowns.push_back(Unknown{right.codomain(), rhs.codomain()});
  sys.equations.push_back(LinearEquation{{LinearTerm{0, std::nullopt, right, 1}}, rhs});
  auto sol = cat.solve(sys);
  if (!sol) return std::nullopt;
  return sol->values[0];
}

bool is_zero_object(const ExactCategory& cat, const Object& a) {
  return cat.equal(cat.identity(a), cat.zero(a, a));
}

bool is_zero_morphism(const ExactCategory& cat, const Morphism& f) {
  return cat.equal(f, cat.zero(f.domain(), f.codomain()));
}

bool commutes(const ExactCategory& cat, const Morphism& lhs, const Morphism& rhs) {
  if (lhs.domain() != rhs.domain() || lhs.codomain() != rhs.codomain()) return false;
  return cat.equal(lhs, rhs);
}

bool ExactCategory::is_short_exact(const Morphism& mono, const Morphism& epi) const {
  const ExactCategory& cat = *this;
  if (mono.codomain() != epi.domain()) throw InvalidInput("is_short_exact: arrows are not composable");
  if (!is_zero_morphism(cat, cat.compose(epi, mono))) return false;
  auto k = cat.kernel(epi);
  if (!k) return false;
  auto phi = solve_left(cat, *k, mono);
  if (!phi || !cat.is_iso(*phi)) return false;
  auto c = cat.cokernel(mono);
  if (!c) return false;
  auto psi = solve_right(cat, *c, epi);
  if (!psi || !cat.is_iso(*psi)) return false;
  if (cat.requires_splitting() && !solve_left(cat, epi, cat.identity(epi.codomain()))) return false;
  return true;
}

bool is_short_exact(const ExactCategory& cat, const Morphism& mono, const Morphism& epi) {
  return cat.is_short_exact(mono, epi);
}

bool is_short_exact(const ExactCategory& cat, const ShortExactSequence& s) {
  return is_short_exact(cat, s.mono, s.epi);
}

bool is_admissible_monic(const ExactCategory& cat, const Morphism& f) {
  auto c = cat.cokernel(f);
  return c && is_short_exact(cat, f, *c);
}

bool is_admissible_epic(const ExactCategory& cat, const Morphism& f) {
  auto k = cat.kernel(f);
  return k && is_short_exact(cat, *k, f);
}

bool is_monic(const ExactCategory& cat, const Morphism& f) {
  auto k = cat.kernel(f);
  if (!k) throw UnsupportedOperation("is_monic: kernel does not exist in " + cat.name());
  return is_zero_object(cat, k->domain());
}

bool is_epic(const ExactCategory& cat, const Morphism& f) {
  auto c = cat.cokernel(f);
  if (!c) throw UnsupportedOperation("is_epic: cokernel does not exist in " + cat.name());
  return is_zero_object(cat, c->codomain());
}

std::optional<Analysis> analyze(const ExactCategory& cat, const Morphism& f) {
  auto k = cat.kernel(f);
  if (!k) return std::nullopt;
  auto c = cat.cokernel(f);
  if (!c) return std::nullopt;
  auto e = cat.cokernel(*k);
  if (!e) return std::nullopt;
  auto m = cat.kernel(*c);
  if (!m) return std::nullopt;
  if (!is_short_exact(cat, *k, *e) || !is_short_exact(cat, *m, *c)) return std::nullopt;
  auto through_coimage = solve_right(cat, *e, f);
  if (!through_coimage) return std::nullopt;
  auto middle = solve_left(cat, *m, *through_coimage);
  if (!middle || !cat.is_iso(*middle)) return std::nullopt;
  return Analysis{*k, cat.compose(*middle, *e), *m, *c};
}

bool is_admissible(const ExactCategory& cat, const Morphism& f) { return analyze(cat, f).has_value(); }

bool is_exact_at(const ExactCategory& cat, const Morphism& u, const Morphism& v) {
  if (u.codomain() != v.domain()) throw InvalidInput("is_exact_at: arrows are not composable");
  auto au = analyze(cat, u);
  if (!au) return false;
  auto av = analyze(cat, v);
  if (!av) return false;
  return is_short_exact(cat, au->image, av->coimage);
}

Morphism pair_into(const ExactCategory& cat, const Morphism& f, const Morphism& g) {
  if (f.domain() != g.domain()) throw InvalidInput("pair_into: domains differ");
  return cat.matrix_morphism({f.domain()}, {f.codomain(), g.codomain()}, {{f}, {g}});
}

Morphism copair_from(const ExactCategory& cat, const Morphism& f, const Morphism& g) {
  if (f.codomain() != g.codomain()) throw InvalidInput("copair_from: codomains differ");
  return cat.matrix_morphism({f.domain(), g.domain()}, {f.codomain()}, {{f, g}});
}

Morphism direct_sum_map(const ExactCategory& cat, const Morphism& f, const Morphism& g) {
  return cat.matrix_morphism({f.domain(), g.domain()}, {f.codomain(), g.codomain()},
                             {{f, cat.zero(g.domain(), f.codomain())},
                              {cat.zero(f.domain(), g.codomain()), g}});
}

Pushout pushout_along_monic(const ExactCategory& cat, const Morphism& mono, const Morphism& along) {
  if (mono.domain() != along.domain()) throw InvalidInput("pushout_along_monic: arrows do not share a source");
  if (!is_admissible_monic(cat, mono))
    throw PreconditionError("pushout_along_monic", "first arrow is not an admissible monic");
  Morphism column = pair_into(cat, mono, cat.negate(along));
  auto q = cat.cokernel(column);
  if (!q) throw PreconditionError("pushout_along_monic", "cokernel of (mono, -along) does not exist");
  Biproduct s = cat.biproduct(mono.codomain(), along.codomain());
  return Pushout{q->codomain(), cat.compose(*q, s.inject_first), cat.compose(*q, s.inject_second), *q};
}

Pullback pullback_along_epic(const ExactCategory& cat, const Morphism& epi, const Morphism& along) {
  if (epi.codomain() != along.codomain()) throw InvalidInput("pullback_along_epic: arrows do not share a target");
  if (!is_admissible_epic(cat, epi))
    throw PreconditionError("pullback_along_epic", "first arrow is not an admissible epic");
  Morphism row = copair_from(cat, epi, cat.negate(along));
  auto k = cat.kernel(row);
  if (!k) throw PreconditionError("pullback_along_epic", "kernel of (epi, -along) does not exist");
  Biproduct s = cat.biproduct(epi.domain(), along.domain());
  return Pullback{k->domain(), cat.compose(s.project_first, *k), cat.compose(s.project_second, *k), *k};
}

std::optional<Morphism> pushout_induced(const ExactCategory& cat, const Pushout& p,
                                        const Morphism& from_middle, const Morphism& from_target) {
  return solve_right(cat, p.quotient, copair_from(cat, from_middle, from_target));
}

std::optional<Morphism> pullback_induced(const ExactCategory& cat, const Pullback& p,
                                         const Morphism& to_middle, const Morphism& to_source) {
  return solve_left(cat, p.inclusion, pair_into(cat, to_middle, to_source));
}

bool is_exact_sequence(const ExactCategory& cat, const std::vector<Morphism>& arrows) {
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (arrows[i].codomain() != arrows[i + 1].domain()) return false;
    if (!is_exact_at(cat, arrows[i], arrows[i + 1])) return false;
  }
  return true;
}

bool is_exact_sequence(const ExactCategory& cat, const std::vector<Factorization>& arrows) {
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (arrows[i].monic.codomain() != arrows[i + 1].epic.domain()) return false;
    if (!is_short_exact(cat, arrows[i].monic, arrows[i + 1].epic)) return false;
  }
  return true;
}

}  // namespace exact
