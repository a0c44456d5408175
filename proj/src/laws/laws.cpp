#include "exact/laws/laws.hpp"

#include "exact/completion/completion.hpp"
#include "exact/complexes/acyclicity.hpp"
#include "exact/core/constructions.hpp"
#include "exact/lemmas/noether.hpp"
#include "exact/models/abelian_groups.hpp"

namespace exact {

namespace {

// Premise evaluation: constructions that refuse count as the premise failing.
template <class F>
bool holds(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return false;
  }
}

Morphism inverse_of(const ExactCategory& cat, const Morphism& f) { return guaranteed(cat.inverse(f), "inverse"); }

bool admissible_monic(const ExactCategory& cat, const Morphism& f) {
  return holds([&] { return is_admissible_monic(cat, f); });
}

bool admissible_epic(const ExactCategory& cat, const Morphism& f) {
  return holds([&] { return is_admissible_epic(cat, f); });
}

bool exact_pair(const ExactCategory& cat, const Morphism& i, const Morphism& p) {
  return holds([&] { return is_short_exact(cat, i, p); });
}

bool exact_pair(const ExactCategory& cat, const ShortExactSequence& s) { return exact_pair(cat, s.mono, s.epi); }

Law make_law(std::string id, std::string statement, std::function<Document(const ExactCategory&, Source&)> generate,
             std::function<Outcome(const ExactCategory&, const Document&)> check,
             std::function<std::vector<Document>(const ExactCategory&)> fixed = {}) {
  return Law{std::move(id), std::move(statement), std::move(generate), std::move(check), std::move(fixed)};
}

Document single_object(Source& src) {
  Document d;
  d.put_object("A", src.object());
  return d;
}

// i' = t o (mono, g) : A -> B + X and j' = p_B o t^-1 with j' o i' == mono.
Document monic_factorization(const ExactCategory& cat, Source& src) {
  const ShortExactSequence s = src.ses();
  const Object x = src.object();
  const Morphism g = src.morphism(s.left(), x);
  const Biproduct sum = cat.biproduct(s.middle(), x);
  const Morphism twist = src.automorphism(sum.sum);
  Document d;
  d.put_morphism("i", "A", "M", cat.compose(twist, pair_into(cat, s.mono, g)));
  d.put_morphism("j", "M", "B", cat.compose(sum.project_first, inverse_of(cat, twist)));
  return d;
}

// f' = t o in_B : B -> B + X and g' = (epi k) o t^-1 with g' o f' == epi.
Document epic_factorization(const ExactCategory& cat, Source& src) {
  const ShortExactSequence s = src.ses();
  const Object x = src.object();
  const Morphism k = src.morphism(x, s.right());
  const Biproduct sum = cat.biproduct(s.middle(), x);
  const Morphism twist = src.automorphism(sum.sum);
  Document d;
  d.put_morphism("f", "B", "N", cat.compose(twist, sum.inject_first));
  d.put_morphism("g", "N", "C", cat.compose(copair_from(cat, s.epi, k), inverse_of(cat, twist)));
  return d;
}

Outcome check_monic_cancellation(const ExactCategory& cat, const Document& d, bool require_cokernel) {
  const Morphism i = d.morphism("i");
  const Morphism j = d.morphism("j");
  if (!admissible_monic(cat, cat.compose(j, i))) return Outcome::discard("j o i is not an admissible monic");
  if (require_cokernel && !holds([&] { return cat.cokernel(i).has_value(); }))
    return Outcome::discard("i has no cokernel");
  if (!admissible_monic(cat, i)) return Outcome::fail("j o i is an admissible monic but i is not");
  return Outcome::pass();
}

Outcome check_epic_cancellation(const ExactCategory& cat, const Document& d) {
  const Morphism f = d.morphism("f");
  const Morphism g = d.morphism("g");
  if (!admissible_epic(cat, cat.compose(g, f))) return Outcome::discard("g o f is not an admissible epic");
  if (!admissible_epic(cat, g)) return Outcome::fail("g o f is an admissible epic but g is not");
  return Outcome::pass();
}

Outcome identity_is(const ExactCategory& cat, const Document& d, bool monic, bool epic) {
  const Morphism id = cat.identity(d.object("A"));
  if (monic && !admissible_monic(cat, id)) return Outcome::fail("the identity of A is not an admissible monic");
  if (epic && !admissible_epic(cat, id)) return Outcome::fail("the identity of A is not an admissible epic");
  return Outcome::pass();
}

Document composable_sequences(Source& src) {
  const ShortExactSequence s = src.ses();
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  d.put_ses("t", src.ses_from(s.middle()), "B", "D", "E");
  d.put_ses("u", src.ses_onto(s.middle()), "F", "G", "B");
  return d;
}

Outcome check_monic_composite(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const ShortExactSequence t = d.ses("t");
  if (!exact_pair(cat, s) || !exact_pair(cat, t)) return Outcome::discard("a sequence is not short exact");
  if (!admissible_monic(cat, cat.compose(t.mono, s.mono)))
    return Outcome::fail("composite of admissible monics is not an admissible monic");
  return Outcome::pass();
}

Outcome check_epic_composite(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const ShortExactSequence u = d.ses("u");
  if (!exact_pair(cat, s) || !exact_pair(cat, u)) return Outcome::discard("a sequence is not short exact");
  if (!admissible_epic(cat, cat.compose(s.epi, u.epi)))
    return Outcome::fail("composite of admissible epics is not an admissible epic");
  return Outcome::pass();
}

Document sequence_and_arrow(Source& src, bool out_of_left) {
  const ShortExactSequence s = src.ses();
  const Object other = src.object();
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  if (out_of_left) {
    d.put_morphism("f", "A", "X", src.morphism(s.left(), other));
  } else {
    d.put_morphism("f", "X", "C", src.morphism(other, s.right()));
  }
  return d;
}

Outcome check_pushout(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const Morphism f = d.morphism("f");
  if (!exact_pair(cat, s)) return Outcome::discard("s is not short exact");
  const Pushout p = pushout_along_monic(cat, s.mono, f);
  if (!commutes(cat, cat.compose(p.from_middle, s.mono), cat.compose(p.from_target, f)))
    return Outcome::fail("pushout square does not commute");
  if (!admissible_monic(cat, p.from_target)) return Outcome::fail("pushed-out arrow is not an admissible monic");
  auto epi = pushout_induced(cat, p, s.epi, cat.zero(f.codomain(), s.right()));
  if (!epi) return Outcome::fail("no induced arrow from the pushout to the cokernel");
  if (!exact_pair(cat, p.from_target, *epi)) return Outcome::fail("pushed-out sequence is not short exact");
  return Outcome::pass();
}

Outcome check_pullback(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const Morphism f = d.morphism("f");
  if (!exact_pair(cat, s)) return Outcome::discard("s is not short exact");
  const Pullback p = pullback_along_epic(cat, s.epi, f);
  if (!commutes(cat, cat.compose(s.epi, p.to_middle), cat.compose(f, p.to_source)))
    return Outcome::fail("pullback square does not commute");
  if (!admissible_epic(cat, p.to_source)) return Outcome::fail("pulled-back arrow is not an admissible epic");
  auto mono = pullback_induced(cat, p, s.mono, cat.zero(s.left(), f.domain()));
  if (!mono) return Outcome::fail("no induced arrow from the kernel to the pullback");
  if (!exact_pair(cat, *mono, p.to_source)) return Outcome::fail("pulled-back sequence is not short exact");
  return Outcome::pass();
}

Document ses_document(Source& src) {
  Document d;
  d.put_ses("s", src.ses(), "A", "B", "C");
  return d;
}

// The generated target is either independent of the source or the source
// twisted by an automorphism of its middle object.
ShortExactSequence related_sequence(const ExactCategory& cat, Source& src, const ShortExactSequence& s) {
  if (src.coin()) return src.ses();
  const Morphism b = src.automorphism(s.middle());
  return {cat.compose(b, s.mono), cat.compose(s.epi, inverse_of(cat, b))};
}

Document ses_morphism_document(const ExactCategory& cat, Source& src, bool twisted_only) {
  const ShortExactSequence s = src.ses();
  ShortExactSequence t = s;
  if (twisted_only) {
    const Morphism b = src.automorphism(s.middle());
    t = {cat.compose(b, s.mono), cat.compose(s.epi, inverse_of(cat, b))};
  } else {
    t = related_sequence(cat, src, s);
  }
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  d.put_ses("t", t, "A2", "B2", "C2");
  d.put_ses_morphism("m", src.ses_morphism(s, t), "s", "t");
  return d;
}

Outcome check_five_lemma(const ExactCategory& cat, const Document& d) {
  const SesMorphism m = d.ses_morphism("m");
  if (!holds([&] { return is_valid(cat, m); })) return Outcome::discard("not a morphism of short exact sequences");
  const FiveLemmaVerdict v = five_lemma_verify(cat, m);
  for (const auto& c : v.cases) {
    if (c.outer_hold && !c.middle_holds)
      return Outcome::fail(std::string("outer components are ") + to_string(c.property) + " but the middle is not");
  }
  if (!v.holds()) return Outcome::fail("five lemma verdict does not hold");
  return Outcome::pass();
}

// (a, b (1 + i h p), c) from s to s transported along automorphisms a, b, c.
Document five_iso_document(const ExactCategory& cat, Source& src) {
  const ShortExactSequence s = src.ses();
  const Morphism h = src.morphism(s.right(), s.left());
  const Morphism shear = cat.add(cat.identity(s.middle()), cat.compose(s.mono, cat.compose(h, s.epi)));
  const Morphism a = src.automorphism(s.left());
  const Morphism b = src.automorphism(s.middle());
  const Morphism c = src.automorphism(s.right());
  const ShortExactSequence t{cat.compose(b, cat.compose(s.mono, inverse_of(cat, a))),
                             cat.compose(c, cat.compose(s.epi, inverse_of(cat, b)))};
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  d.put_ses("t", t, "A2", "B2", "C2");
  d.put_ses_morphism("m", SesMorphism{s, t, a, cat.compose(b, shear), c}, "s", "t");
  return d;
}

Outcome check_five_iso(const ExactCategory& cat, const Document& d) {
  const SesMorphism m = d.ses_morphism("m");
  if (!holds([&] { return is_valid(cat, m); })) return Outcome::discard("not a morphism of short exact sequences");
  if (!cat.is_iso(m.left) || !cat.is_iso(m.right)) return Outcome::discard("outer components are not isomorphisms");
  if (!cat.is_iso(m.middle)) return Outcome::fail("outer components are isomorphisms but the middle is not");
  return Outcome::pass();
}

Outcome check_long_five(const ExactCategory& cat, const Document& d) {
  const SesMorphism m = d.ses_morphism("m");
  if (!holds([&] { return is_valid(cat, m); })) return Outcome::discard("not a morphism of short exact sequences");
  const Object zero = cat.zero_object();
  const Ladder ladder{
      {cat.zero(zero, m.source.left()), m.source.mono, m.source.epi, cat.zero(m.source.right(), zero)},
      {cat.zero(zero, m.target.left()), m.target.mono, m.target.epi, cat.zero(m.target.right(), zero)},
      {cat.identity(zero), m.left, m.middle, m.right, cat.identity(zero)}};
  const LongFiveVerdict v = long_five_verify(cat, ladder);
  if (!v.holds()) return Outcome::fail("outer arrows are isomorphisms but the middle arrow is not");
  return Outcome::pass();
}

Document summand_document(const ExactCategory& cat, Source& src) {
  const ShortExactSequence s = src.ses();
  const ShortExactSequence t = src.ses();
  // Mostly automorphisms, so that the direct sum stays exact.
  const Morphism u = src.coin() || src.coin() ? src.automorphism(t.left()) : src.morphism(t.left(), t.left());
  const Morphism v = src.coin() || src.coin() ? src.automorphism(t.right()) : src.morphism(t.right(), t.right());
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  d.put_morphism("i2", "A2", "B2", cat.compose(t.mono, u));
  d.put_morphism("p2", "B2", "C2", cat.compose(v, t.epi));
  return d;
}

Outcome summands_outcome(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const Morphism i2 = d.morphism("i2");
  const Morphism p2 = d.morphism("p2");
  if (!exact_pair(cat, direct_sum_map(cat, s.mono, i2), direct_sum_map(cat, s.epi, p2)))
    return Outcome::discard("direct sum is not short exact");
  if (!exact_pair(cat, s)) return Outcome::fail("first summand is not short exact");
  if (!exact_pair(cat, i2, p2)) return Outcome::fail("second summand is not short exact");
  return Outcome::pass();
}

Document pullback_monic_document(Source& src) {
  const ShortExactSequence s = src.ses();
  Document d;
  d.put_morphism("i", "A", "B", s.mono);
  d.put_morphism("e", "B1", "B", src.ses_onto(s.middle()).epi);
  return d;
}

Outcome pullback_monic_outcome(const ExactCategory& cat, const Document& d) {
  const Morphism i = d.morphism("i");
  const Morphism e = d.morphism("e");
  if (!admissible_monic(cat, i) || !admissible_epic(cat, e))
    return Outcome::discard("i is not an admissible monic or e is not an admissible epic");
  const Pullback p = pullback_along_epic(cat, e, i);
  if (!commutes(cat, cat.compose(e, p.to_middle), cat.compose(i, p.to_source)))
    return Outcome::fail("pullback square does not commute");
  if (!admissible_monic(cat, p.to_middle)) return Outcome::fail("pulled-back arrow is not an admissible monic");
  return Outcome::pass();
}

Document cone_document(Source& src) {
  const ChainComplex x = src.acyclic_complex(0, src.size(2, 4));
  const ChainComplex y = src.acyclic_complex(0, src.size(2, 4));
  Document d;
  d.put_complex("X", x);
  d.put_complex("Y", y);
  d.put_chain_map("f", src.chain_map(x, y), "X", "Y");
  return d;
}

Outcome check_cone(const ExactCategory& cat, const Document& d) {
  const ChainMap f = d.chain_map(cat, "f");
  if (!holds([&] { return is_acyclic(cat, f.source()).has_value() && is_acyclic(cat, f.target()).has_value(); }))
    return Outcome::discard("an endpoint is not acyclic");
  auto cert = is_acyclic(cat, mapping_cone(cat, f));
  if (!cert) return Outcome::fail("cone is not acyclic");
  if (!cert->verify(cat)) return Outcome::fail("cone certificate does not verify");
  const ConeAcyclicity built = check_cone_acyclic(cat, f);
  if (!built.verified || !built.certificate.verify(cat))
    return Outcome::fail("certificate built from the cycle sequences does not verify");
  return Outcome::pass();
}

Document contractible_document(Source& src) {
  Document d;
  d.put_complex("X", src.contractible_complex(0, src.size(2, 4)));
  return d;
}

Outcome contraction_outcome(const ExactCategory& cat, const Document& d) {
  const ChainComplex x = d.complex(cat, "X");
  if (!holds([&] { return find_contraction(cat, x).has_value(); }))
    return Outcome::discard("the identity is not null-homotopic");
  auto cert = is_acyclic(cat, x);
  if (!cert) return Outcome::fail("the identity is null-homotopic but the complex is not acyclic");
  if (!cert->verify(cat)) return Outcome::fail("acyclicity certificate does not verify");
  return Outcome::pass();
}

std::vector<Document> alternating_projection_instances(const ExactCategory& cat) {
  std::vector<Document> out;
  if (auto x = alternating_projection_complex(cat, 6)) {
    Document d;
    d.put_complex("X", *x);
    out.push_back(std::move(d));
  }
  return out;
}

Document factorization_pair(const ExactCategory& cat, Source& src) {
  Document d = monic_factorization(cat, src);
  const Document e = epic_factorization(cat, src);
  // Rename the epic half so the two instances share no names.
  d.put_morphism("f", "B'", "N", e.morphism("f"));
  d.put_morphism("g", "N", "C'", e.morphism("g"));
  return d;
}

Outcome check_heller_cancellation(const ExactCategory& cat, const Document& d) {
  const Outcome monic = check_monic_cancellation(cat, d, false);
  if (monic.verdict == Verdict::Fail) return monic;
  const Outcome epic = check_epic_cancellation(cat, d);
  if (epic.verdict == Verdict::Fail) return epic;
  if (monic.verdict == Verdict::Discard && epic.verdict == Verdict::Discard)
    return Outcome::discard("neither composite is admissible");
  return Outcome::pass();
}

// Rows top, middle, bottom and columns first (A), second (B), third (C):
// top and second are generated, C is the pushout of second.mono along top.epi,
// and the rest are kernels, cokernels and induced arrows.
Document nine_diagram(const ExactCategory& cat, Source& src) {
  const ShortExactSequence top = src.ses();
  const ShortExactSequence second = src.ses_from(top.middle());
  const Pushout p = pushout_along_monic(cat, second.mono, top.epi);
  const Morphism& g = p.from_middle;
  const Morphism& c = p.from_target;
  const Morphism c2 = guaranteed(cat.cokernel(c), "cokernel of C' -> C");
  const Morphism f = guaranteed(cat.kernel(g), "kernel of B -> C");
  const Morphism a = guaranteed(solve_left(cat, f, cat.compose(second.mono, top.mono)), "A' -> A");
  const Morphism a2 = guaranteed(cat.cokernel(a), "cokernel of A' -> A");
  const Morphism f2 = guaranteed(solve_right(cat, a2, cat.compose(second.epi, f)), "A'' -> B''");
  const Morphism g2 = guaranteed(solve_right(cat, second.epi, cat.compose(c2, g)), "B'' -> C''");
  Document d;
  d.put_ses("top", top, "A1", "B1", "C1");
  d.put_ses("middle", {f, g}, "A", "B", "C");
  d.put_ses("bottom", {f2, g2}, "A2", "B2", "C2");
  d.put_ses("first", {a, a2}, "A1", "A", "A2");
  d.put_ses("second", second, "B1", "B", "B2");
  d.put_ses("third", {c, c2}, "C1", "C", "C2");
  return d;
}

Outcome check_nine_diagram(const ExactCategory& cat, const Document& d) {
  const ShortExactSequence top = d.ses("top"), middle = d.ses("middle"), bottom = d.ses("bottom");
  const ShortExactSequence first = d.ses("first"), second = d.ses("second"), third = d.ses("third");
  for (const auto* s : {&top, &middle, &bottom, &second, &third})
    if (!exact_pair(cat, *s)) return Outcome::discard("a row or one of the last two columns is not short exact");
  const bool squares =
      commutes(cat, cat.compose(second.mono, top.mono), cat.compose(middle.mono, first.mono)) &&
      commutes(cat, cat.compose(third.mono, top.epi), cat.compose(middle.epi, second.mono)) &&
      commutes(cat, cat.compose(second.epi, middle.mono), cat.compose(bottom.mono, first.epi)) &&
      commutes(cat, cat.compose(third.epi, middle.epi), cat.compose(bottom.epi, second.epi));
  if (!squares) return Outcome::discard("the diagram does not commute");
  if (!exact_pair(cat, first)) return Outcome::fail("first column is not short exact");
  // Second route: the 3x3 construction on the transposed diagram.
  const ThreeByThree grid{top, middle, bottom, std::nullopt, GridRow{second.mono, second.epi},
                          GridRow{third.mono, third.epi}};
  const ThreeByThreeResult r = three_by_three(cat, grid, MissingRow::Top);
  if (!r.short_exact) return Outcome::fail("3x3 construction gives a first column that is not short exact");
  if (!commutes(cat, r.row.first, first.mono) || !commutes(cat, r.row.second, first.epi))
    return Outcome::fail("3x3 construction disagrees with the first column");
  return Outcome::pass();
}

const AbelianGroups& functor_target() {
  static const AbelianGroups target;
  return target;
}

Outcome check_functor_ses(const FunctorSpec& spec, const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  if (!exact_pair(cat, s)) return Outcome::discard("s is not short exact");
  const ExactCategory& target = functor_target();
  Morphism first = apply(spec, s.mono);
  Morphism second = apply(spec, s.epi);
  if (spec.contravariant()) std::swap(first, second);
  if (!is_monic(target, first)) return Outcome::fail("F of the sequence: first arrow is not monic");
  if (!is_epic(target, second)) return Outcome::fail("F of the sequence: second arrow is not epic");
  if (!exact_pair(target, first, second)) return Outcome::fail("F of the sequence is not exact in the middle");
  return Outcome::pass();
}

Outcome check_functor_pushout(const FunctorSpec& spec, const ExactCategory& cat, const Document& d) {
  const ShortExactSequence s = d.ses("s");
  const Morphism f = d.morphism("f");
  if (!exact_pair(cat, s)) return Outcome::discard("s is not short exact");
  const ExactCategory& target = functor_target();
  const Pushout p = pushout_along_monic(cat, s.mono, f);
  const Morphism fi = apply(spec, s.mono), ff = apply(spec, f);
  const Morphism fm = apply(spec, p.from_middle), ft = apply(spec, p.from_target);
  if (!spec.contravariant()) {
    if (!admissible_monic(target, fi)) return Outcome::fail("F(mono) is not an admissible monic");
    const Pushout q = pushout_along_monic(target, fi, ff);
    auto u = pushout_induced(target, q, fm, ft);
    if (!u || !target.is_iso(*u)) return Outcome::fail("F of the pushout square is not a pushout");
    return Outcome::pass();
  }
  // Hom(-, T) turns the square into a pullback over F(A).
  if (!admissible_epic(target, fi)) return Outcome::fail("F(mono) is not an admissible epic");
  const Pullback q = pullback_along_epic(target, fi, ff);
  auto u = pullback_induced(target, q, fm, ft);
  if (!u || !target.is_iso(*u)) return Outcome::fail("F of the pushout square is not a pullback");
  return Outcome::pass();
}

std::vector<Document> doubling_instances(const ExactCategory& cat, bool with_arrow) {
  const Object z = Object::free(1);
  const Object z2 = AbelianGroups::cyclic(2);
  if (!cat.contains(z) || !cat.contains(z2)) return {};
  const ShortExactSequence s{Morphism(z, z, IntMatrix{{2}}), Morphism(z, z2, IntMatrix{{1}})};
  Document d;
  d.put_ses("s", s, "A", "B", "C");
  if (with_arrow) d.put_morphism("f", "A", "X", cat.identity(z));
  return {d};
}

void require_wic(const ExactCategory& cat, const char* suite) {
  if (!cat.flags().weakly_idempotent_complete)
    throw PreconditionError(suite, "model " + cat.name() + " is not weakly idempotent complete");
}

}  // namespace

std::optional<std::string> kernel_cokernel_defect(const ExactCategory& cat, const Morphism& i, const Morphism& p) {
  if (!is_zero_morphism(cat, cat.compose(p, i))) return "the composite is not zero";
  auto k = cat.kernel(p);
  if (!k) return "the second arrow has no kernel";
  auto u = solve_left(cat, *k, i);
  if (!u || !cat.is_iso(*u)) {
    std::string why = "the first arrow is not a kernel of the second";
    if (!i.codomain().has_idempotent() && !i.domain().has_idempotent())
      why += "; its cokernel in abelian groups is " + presented_invariants(abelian_cokernel(i).codomain()).to_string();
    return why;
  }
  auto c = cat.cokernel(i);
  if (!c) return "the first arrow has no cokernel";
  auto v = solve_right(cat, *c, p);
  if (!v || !cat.is_iso(*v)) return "the second arrow is not a cokernel of the first";
  if (cat.requires_splitting() && !solve_right(cat, i, cat.identity(i.domain())))
    return "the sequence does not split";
  return std::nullopt;
}

std::optional<ChainComplex> alternating_projection_complex(const ExactCategory& cat, std::size_t window) {
  const Object z2 = Object::free(2);
  Object a = z2;
  if (const auto* completion = dynamic_cast<const IdempotentCompletion*>(&cat)) {
    if (!completion->base().contains(z2)) return std::nullopt;
    a = completion->embed(z2);
  } else if (!cat.contains(z2)) {
    return std::nullopt;
  }
  const Morphism p(a, a, IntMatrix{{1, 0}, {0, 0}});
  const Morphism q(a, a, IntMatrix{{0, 0}, {0, 1}});
  std::vector<Object> objects(window, a);
  std::vector<Morphism> diffs;
  for (std::size_t k = 0; k < window; ++k) diffs.push_back(k % 2 == 0 ? p : q);
  return ChainComplex::periodic(cat, 0, std::move(objects), std::move(diffs));
}

std::vector<Law> axiom_laws() {
  return {
      make_law("E0", "identities are admissible monics",
               [](const ExactCategory&, Source& src) { return single_object(src); },
               [](const ExactCategory& cat, const Document& d) { return identity_is(cat, d, true, false); }),
      make_law("E0op", "identities are admissible epics",
               [](const ExactCategory&, Source& src) { return single_object(src); },
               [](const ExactCategory& cat, const Document& d) { return identity_is(cat, d, false, true); }),
      make_law("E1", "admissible monics compose",
               [](const ExactCategory&, Source& src) { return composable_sequences(src); }, check_monic_composite),
      make_law("E1op", "admissible epics compose",
               [](const ExactCategory&, Source& src) { return composable_sequences(src); }, check_epic_composite),
      make_law("E2", "pushouts along admissible monics exist and give admissible monics",
               [](const ExactCategory&, Source& src) { return sequence_and_arrow(src, true); }, check_pushout),
      make_law("E2op", "pullbacks along admissible epics exist and give admissible epics",
               [](const ExactCategory&, Source& src) { return sequence_and_arrow(src, false); }, check_pullback),
      make_law("kernel-cokernel", "declared short exact sequences are kernel-cokernel pairs",
               [](const ExactCategory&, Source& src) { return ses_document(src); },
               [](const ExactCategory& cat, const Document& d) {
                 const ShortExactSequence s = d.ses("s");
                 if (!holds([&] { return cat.is_short_exact(s.mono, s.epi); }))
                   return Outcome::discard("the model does not declare s short exact");
                 if (auto defect = kernel_cokernel_defect(cat, s.mono, s.epi)) return Outcome::fail(*defect);
                 return Outcome::pass();
               }),
  };
}

std::vector<Law> obscure_laws() {
  return {make_law("obscure", "i with a cokernel and j o i an admissible monic make i an admissible monic",
                   monic_factorization,
                   [](const ExactCategory& cat, const Document& d) { return check_monic_cancellation(cat, d, true); })};
}

std::vector<Law> pullback_monic_laws() {
  return {make_law("pullback-monic", "pullback of an admissible monic along an admissible epic is an admissible monic",
                   [](const ExactCategory&, Source& src) { return pullback_monic_document(src); },
                   pullback_monic_outcome)};
}

std::vector<Law> summand_laws() {
  return {make_law("summands", "summands of a short exact direct sum are short exact", summand_document,
                   summands_outcome)};
}

std::vector<Law> five_laws() {
  return {
      make_law("five", "five lemma for isomorphisms, admissible monics and admissible epics",
               [](const ExactCategory& cat, Source& src) { return ses_morphism_document(cat, src, false); },
               check_five_lemma),
      make_law("five-iso", "outer isomorphisms force a middle isomorphism", five_iso_document, check_five_iso),
      make_law("long-five", "long five lemma on zero-padded short exact sequences",
               [](const ExactCategory& cat, Source& src) { return ses_morphism_document(cat, src, true); },
               check_long_five),
  };
}

std::vector<Law> cancellation_laws() {
  return {
      make_law("cancellation-epic", "g o f an admissible epic makes g an admissible epic", epic_factorization,
               [](const ExactCategory& cat, const Document& d) { return check_epic_cancellation(cat, d); }),
      make_law("cancellation-monic", "g o f an admissible monic makes f an admissible monic", monic_factorization,
               [](const ExactCategory& cat, const Document& d) { return check_monic_cancellation(cat, d, false); }),
  };
}

std::vector<Law> cone_acyclicity_laws() {
  return {make_law("cone-acyclicity", "chain maps between acyclic complexes have acyclic cones",
                   [](const ExactCategory&, Source& src) { return cone_document(src); }, check_cone)};
}

std::vector<Law> null_homotopic_laws() {
  return {make_law("null-homotopic", "complexes with null-homotopic identity are acyclic",
                   [](const ExactCategory&, Source& src) { return contractible_document(src); },
                   contraction_outcome, alternating_projection_instances)};
}

std::vector<Law> heller_laws() {
  return {
      make_law("heller-i", "identities are admissible monics and admissible epics",
               [](const ExactCategory&, Source& src) { return single_object(src); },
               [](const ExactCategory& cat, const Document& d) { return identity_is(cat, d, true, true); }),
      make_law("heller-ii", "admissible monics and admissible epics compose",
               [](const ExactCategory&, Source& src) { return composable_sequences(src); },
               [](const ExactCategory& cat, const Document& d) {
                 const Outcome monic = check_monic_composite(cat, d);
                 if (monic.verdict != Verdict::Pass) return monic;
                 return check_epic_composite(cat, d);
               }),
      make_law("heller-iii", "g o f admissible monic makes f one; g o f admissible epic makes g one",
               factorization_pair, check_heller_cancellation),
      make_law("heller-iv", "exact rows and last two columns force an exact first column", nine_diagram,
               check_nine_diagram),
  };
}

std::vector<Law> functor_exact_laws(const FunctorSpec& f) {
  return {
      make_law("preserves-ses", "F maps short exact sequences to short exact sequences",
               [](const ExactCategory&, Source& src) { return ses_document(src); },
               [f](const ExactCategory& cat, const Document& d) { return check_functor_ses(f, cat, d); },
               [](const ExactCategory& cat) { return doubling_instances(cat, false); }),
      make_law("preserves-pushouts", "F maps pushouts along admissible monics to pushouts",
               [](const ExactCategory&, Source& src) { return sequence_and_arrow(src, true); },
               [f](const ExactCategory& cat, const Document& d) { return check_functor_pushout(f, cat, d); },
               [](const ExactCategory& cat) { return doubling_instances(cat, true); }),
  };
}

LawReport check_axioms(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("axioms", axiom_laws(), cat, cfg);
}
LawReport check_obscure(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("obscure", obscure_laws(), cat, cfg);
}
LawReport check_pullback_monic(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("pullback-monic", pullback_monic_laws(), cat, cfg);
}
LawReport check_summands(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("summands", summand_laws(), cat, cfg);
}
LawReport check_five(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("five", five_laws(), cat, cfg);
}
LawReport check_cancellation(const ExactCategory& cat, const LawConfig& cfg) {
  require_wic(cat, "check_cancellation");
  return run_suite("cancellation", cancellation_laws(), cat, cfg);
}
LawReport check_cone_acyclicity(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("cone-acyclicity", cone_acyclicity_laws(), cat, cfg);
}
LawReport check_null_homotopic(const ExactCategory& cat, const LawConfig& cfg) {
  return run_suite("null-homotopic", null_homotopic_laws(), cat, cfg);
}
LawReport check_heller(const ExactCategory& cat, const LawConfig& cfg) {
  require_wic(cat, "check_heller");
  return run_suite("heller", heller_laws(), cat, cfg);
}

LawReport check_functor_exact(const FunctorSpec& f, const ExactCategory& cat, const LawConfig& cfg) {
  if (!dynamic_cast<const PresentedModel*>(&cat))
    throw PreconditionError("check_functor_exact", "model " + cat.name() + " does not consist of presented groups");
  return run_suite("functor-exact " + f.to_string(), functor_exact_laws(f), cat, cfg);
}

std::vector<std::string> suite_names() {
  return {"axioms", "obscure", "pullback-monic", "summands", "five",
          "cancellation", "cone-acyclicity", "null-homotopic", "heller"};
}

LawReport run_named_suite(const std::string& name, const ExactCategory& cat, const LawConfig& cfg) {
  if (name == "axioms") return check_axioms(cat, cfg);
  if (name == "obscure") return check_obscure(cat, cfg);
  if (name == "pullback-monic") return check_pullback_monic(cat, cfg);
  if (name == "summands") return check_summands(cat, cfg);
  if (name == "five") return check_five(cat, cfg);
  if (name == "cancellation") return check_cancellation(cat, cfg);
  if (name == "cone-acyclicity") return check_cone_acyclicity(cat, cfg);
  if (name == "null-homotopic") return check_null_homotopic(cat, cfg);
  if (name == "heller") return check_heller(cat, cfg);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace exact
