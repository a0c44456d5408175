#include "doctest.h"
#include "oracles.hpp"

#include "exact/core/constructions.hpp"
#include "exact/core/errors.hpp"
#include "exact/models/abelian_groups.hpp"
#include "exact/models/free_groups.hpp"

using namespace exact;

namespace {

const AbelianGroups fgab;
const FreeAbelian free_model;
const FreeAbelian free_split(AdmissibilityPolicy::SplitOnly);
const EvenRankFree even_rank;

Morphism scalar(const ExactCategory& cat, const Object& a, const Object& b, long k) {
  IntMatrix m(b.generators(), a.generators());
  m(0, 0) = k;
  return cat.normalize(Morphism(a, b, m));
}

}  // namespace

TEST_CASE("is_short_exact examples") {
  Object z = Object::free(1);
  Object z2 = AbelianGroups::cyclic(2);
  Biproduct s = fgab.biproduct(z, z2);
  CHECK(is_short_exact(fgab, s.inject_first, s.project_second));
  CHECK(is_short_exact(fgab, fgab.identity(z2), fgab.zero(z2, Object())));
  CHECK_FALSE(is_short_exact(fgab, scalar(fgab, z, z, 2), fgab.identity(z)));
  CHECK(is_short_exact(fgab, scalar(fgab, z, z, 2), scalar(fgab, z, z2, 1)));
  CHECK_THROWS_AS(is_short_exact(fgab, fgab.identity(z), fgab.identity(z2)), InvalidInput);
}

TEST_CASE("pushout of x2 along x3") {
  Object z = Object::free(1);
  Pushout p = pushout_along_monic(fgab, scalar(fgab, z, z, 2), scalar(fgab, z, z, 3));
  CHECK(presented_invariants(p.object) == IsoInvariants{1, {}});
  REQUIRE(p.object.generators() == 1);
  const Integer f = p.from_middle.matrix()(0, 0);
  const Integer i = p.from_target.matrix()(0, 0);
  CHECK(abs(f) == 3);
  CHECK(abs(i) == 2);
  CHECK(sgn(f) == sgn(i));
  CHECK(commutes(fgab, fgab.compose(p.from_middle, scalar(fgab, z, z, 2)),
                 fgab.compose(p.from_target, scalar(fgab, z, z, 3))));
  CHECK(is_admissible_monic(fgab, p.from_target));
}

TEST_CASE("pushout along zero map") {
  Object z = Object::free(1);
  Object z2 = Object::free(2);
  Morphism i(z, z2, IntMatrix{{1}, {0}});
  Pushout p = pushout_along_monic(fgab, i, fgab.zero(z, Object()));
  CHECK(presented_invariants(p.object) == IsoInvariants{1, {}});
  CHECK(p.from_middle.matrix().rows() == 1);
  CHECK(p.from_middle.matrix()(0, 0) == 0);
  CHECK(abs(p.from_middle.matrix()(0, 1)) == 1);
}

TEST_CASE("pushout along identity is the original monic up to iso") {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    ShortExactSequence s = fgab.random_ses(rng, {});
    Pushout p = pushout_along_monic(fgab, s.mono, fgab.identity(s.left()));
    CHECK(fgab.is_iso(p.from_middle));
  }
}

TEST_CASE("pullback examples") {
  Object z = Object::free(1);
  Object z2 = Object::free(2);
  Morphism p(z2, z, IntMatrix{{0, 1}});
  Pullback pb = pullback_along_epic(fgab, p, scalar(fgab, z, z, 3));
  CHECK(pb.to_source.matrix() == IntMatrix{{0, 1}});
  CHECK(pb.to_middle.matrix() == IntMatrix{{1, 0}, {0, 3}});

  Object c2 = AbelianGroups::cyclic(2);
  Pullback kernel_case = pullback_along_epic(fgab, Morphism(z, c2, IntMatrix{{1}}), fgab.zero(Object(), c2));
  CHECK(presented_invariants(kernel_case.object) == IsoInvariants{1, {}});
  CHECK(abs(kernel_case.to_middle.matrix()(0, 0)) == 2);
}

TEST_CASE("pushout and pullback preconditions") {
  Object z = Object::free(1);
  CHECK_THROWS_AS(pushout_along_monic(fgab, fgab.zero(z, z), fgab.identity(z)), PreconditionError);
  CHECK_THROWS_AS(pullback_along_epic(fgab, scalar(fgab, z, z, 2), fgab.identity(z)), PreconditionError);
}

TEST_CASE("biproduct presentations and identities") {
  Object z = Object::free(1);
  Biproduct s = fgab.biproduct(z, AbelianGroups::cyclic(2));
  CHECK(s.sum.relations() == IntMatrix{{0}, {2}});
  CHECK(presented_invariants(fgab.biproduct(AbelianGroups::cyclic(2), AbelianGroups::cyclic(3)).sum) ==
        IsoInvariants{0, {6}});
  CHECK(fgab.biproduct(Object(), z).sum == z);
  CHECK(commutes(fgab, fgab.compose(s.project_first, s.inject_first), fgab.identity(z)));
  CHECK(is_zero_morphism(fgab, fgab.compose(s.project_first, s.inject_second)));
  CHECK(commutes(fgab,
                 fgab.add(fgab.compose(s.inject_first, s.project_first),
                          fgab.compose(s.inject_second, s.project_second)),
                 fgab.identity(s.sum)));
}

TEST_CASE("analysis examples") {
  Object z = Object::free(1);
  auto a = analyze(fgab, scalar(fgab, z, z, 2));
  REQUIRE(a);
  CHECK(a->kernel.domain().generators() == 0);
  CHECK(fgab.is_iso(a->coimage));
  CHECK(presented_invariants(a->cokernel.codomain()) == IsoInvariants{0, {2}});
  CHECK(commutes(fgab, fgab.compose(a->image, a->coimage), scalar(fgab, z, z, 2)));

  Object c6 = AbelianGroups::cyclic(6);
  auto zero = analyze(fgab, fgab.zero(c6, z));
  REQUIRE(zero);
  CHECK(fgab.is_iso(zero->kernel));
  CHECK(fgab.is_iso(zero->cokernel));

  CHECK_FALSE(analyze(free_split, scalar(free_split, z, z, 2)));
  CHECK_FALSE(analyze(free_model, scalar(free_model, z, z, 2)));
}

TEST_CASE("admissibility examples") {
  Object z = Object::free(1);
  CHECK(is_admissible_monic(fgab, fgab.identity(z)));
  CHECK(is_admissible_epic(fgab, fgab.identity(z)));
  CHECK(is_admissible_monic(fgab, scalar(fgab, z, z, 2)));
  CHECK_FALSE(is_admissible_epic(fgab, scalar(fgab, z, z, 2)));
  CHECK_FALSE(is_admissible_monic(free_split, scalar(free_split, z, z, 2)));
  CHECK_FALSE(is_admissible_monic(free_model, scalar(free_model, z, z, 2)));

  Object z2 = Object::free(2);
  Morphism p(z2, z2, IntMatrix{{1, 0}, {0, 0}});
  CHECK_FALSE(is_admissible_monic(even_rank, p));
  CHECK_FALSE(is_admissible_epic(even_rank, p));
  CHECK_FALSE(even_rank.kernel(p));
  CHECK(is_admissible_monic(even_rank, even_rank.identity(z2)));
}

TEST_CASE("free model admissible monics are the saturated ones") {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    Object a = Object::free(rng.index(3));
    Object b = Object::free(rng.index(4));
    Morphism f = free_model.random_morphism(rng, a, b, {});
    bool monic = abelian_kernel(f).domain().generators() == 0;
    bool saturated = presented_invariants(abelian_cokernel(f).codomain()).torsion.empty();
    CHECK(is_admissible_monic(free_model, f) == (monic && saturated));
    bool surjective = abelian_cokernel(f).codomain().generators() == 0;
    CHECK(is_admissible_epic(free_model, f) == surjective);
  }
}

TEST_CASE("analysis reconstructs f in the abelian model") {
  Rng rng(101);
  for (int k = 0; k < 60; ++k) {
    Object a = fgab.random_object(rng, {});
    Object b = fgab.random_object(rng, {});
    Morphism f = fgab.random_morphism(rng, a, b, {});
    auto an = analyze(fgab, f);
    REQUIRE(an);
    CHECK(commutes(fgab, fgab.compose(an->image, an->coimage), f));
    CHECK(is_short_exact(fgab, an->kernel, an->coimage));
    CHECK(is_short_exact(fgab, an->image, an->cokernel));
  }
}

TEST_CASE("pushouts are bicartesian against generated cones") {
  Rng rng(202);
  for (int k = 0; k < 40; ++k) {
    ShortExactSequence s = fgab.random_ses(rng, {});
    Object target = fgab.random_object(rng, {});
    Morphism f = fgab.random_morphism(rng, s.left(), target, {});
    Pushout p = pushout_along_monic(fgab, s.mono, f);
    CHECK(commutes(fgab, fgab.compose(p.from_middle, s.mono), fgab.compose(p.from_target, f)));
    Morphism column = pair_into(fgab, s.mono, fgab.negate(f));
    CHECK(is_short_exact(fgab, column, p.quotient));
    // Pullback property: cones X -> B, X -> A' agreeing in P factor uniquely through A.
    Object x = fgab.random_object(rng, {});
    Morphism cone = fgab.compose(*fgab.kernel(p.quotient), fgab.random_morphism(rng, x, fgab.kernel(p.quotient)->domain(), {}));
    Biproduct bp = fgab.biproduct(s.middle(), target);
    Morphism to_b = fgab.compose(bp.project_first, cone);
    Morphism to_t = fgab.negate(fgab.compose(bp.project_second, cone));
    auto t = solve_left(fgab, s.mono, to_b);
    REQUIRE(t);
    CHECK(commutes(fgab, fgab.compose(f, *t), to_t));
  }
}

TEST_CASE("pullback of an admissible monic along an admissible epic is an admissible monic") {
  Rng rng(303);
  for (int k = 0; k < 40; ++k) {
    ShortExactSequence s = fgab.random_ses(rng, {});
    ShortExactSequence t = fgab.random_ses_onto(rng, s.right(), {});
    Pullback pb = pullback_along_epic(fgab, t.epi, s.epi);
    CHECK(is_admissible_epic(fgab, pb.to_source));
    // The monic s.mono pulled back along t.epi's pullback arrow.
    ShortExactSequence m = fgab.random_ses_onto(rng, s.middle(), {});
    Pullback q = pullback_along_epic(fgab, m.epi, s.mono);
    CHECK(is_admissible_monic(fgab, q.to_middle));
  }
}

TEST_CASE("composites of admissible monics and epics") {
  Rng rng(404);
  for (const ExactCategory* cat : std::initializer_list<const ExactCategory*>{&fgab, &free_model, &even_rank}) {
    for (int k = 0; k < 30; ++k) {
      ShortExactSequence s = cat->random_ses(rng, {});
      ShortExactSequence t = cat->random_ses_from(rng, s.middle(), {});
      CHECK(is_short_exact(*cat, s));
      CHECK(is_admissible_monic(*cat, cat->compose(t.mono, s.mono)));
      ShortExactSequence u = cat->random_ses_onto(rng, s.middle(), {});
      CHECK(is_admissible_epic(*cat, cat->compose(s.epi, u.epi)));
    }
  }
}

TEST_CASE("direct summands of short exact sequences") {
  Rng rng(505);
  for (int k = 0; k < 30; ++k) {
    ShortExactSequence s = fgab.random_ses(rng, {});
    ShortExactSequence t = fgab.random_ses(rng, {});
    Morphism i = direct_sum_map(fgab, s.mono, t.mono);
    Morphism p = direct_sum_map(fgab, s.epi, t.epi);
    CHECK(is_short_exact(fgab, i, p));
  }
}
