#include "exact/completion/completion.hpp"

#include "exact/core/errors.hpp"
#include "exact/models/presented.hpp"

namespace exact {

namespace {

IntMatrix selection(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) m(k, k) = 1;
  return m;
}

// (A, p) with the bare zero object for A = 0.
Object pair_object(const IntMatrix& relations, const IntMatrix& p) {
  return relations.rows() == 0 ? Object() : Object(relations, p);
}

}  // namespace

IntMatrix IdempotentCompletion::idempotent_of(const Object& a) {
  return a.has_idempotent() ? a.idempotent() : IntMatrix::identity(a.generators());
}

Morphism IdempotentCompletion::underlying(const Morphism& f) {
  return Morphism(f.domain().underlying(), f.codomain().underlying(), f.matrix());
}

Object IdempotentCompletion::make_object(const Object& a, const IntMatrix& p) const {
  Object out = pair_object(a.relations(), p);
  if (!contains(out)) throw InvalidInput("completion: not an idempotent on an object of " + base_.name());
  return out;
}

Object IdempotentCompletion::embed(const Object& a) const {
  base_.require_contains(a, "embed");
  return pair_object(a.relations(), IntMatrix::identity(a.generators()));
}

Morphism IdempotentCompletion::embed(const Morphism& f) const {
  return Morphism(embed(f.domain()), embed(f.codomain()), f.matrix());
}

bool IdempotentCompletion::contains(const Object& a) const {
  if (a.generators() == 0) return true;
  if (!a.has_idempotent() || !base_.contains(a.underlying())) return false;
  const Morphism p(a.underlying(), a.underlying(), a.idempotent());
  return base_.well_defined(p) && base_.equal(base_.compose(p, p), p);
}

bool IdempotentCompletion::well_defined(const Morphism& f) const {
  const Morphism u = underlying(f);
  if (!base_.well_defined(u)) return false;
  const Morphism p(f.domain().underlying(), f.domain().underlying(), idempotent_of(f.domain()));
  const Morphism q(f.codomain().underlying(), f.codomain().underlying(), idempotent_of(f.codomain()));
  return base_.equal(base_.compose(q, base_.compose(u, p)), u);
}

bool IdempotentCompletion::equal(const Morphism& f, const Morphism& g) const {
  return base_.equal(underlying(f), underlying(g));
}

Morphism IdempotentCompletion::identity(const Object& a) const { return Morphism(a, a, idempotent_of(a)); }

Biproduct IdempotentCompletion::biproduct(const Object& a, const Object& b) const {
  const std::size_t m = a.generators();
  const std::size_t n = b.generators();
  const IntMatrix pa = idempotent_of(a);
  const IntMatrix pb = idempotent_of(b);
  const Object sum = pair_object(block_diagonal(a.relations(), b.relations()), block_diagonal(pa, pb));
  IntMatrix i1(m + n, m), i2(m + n, n), p1(m, m + n), p2(n, m + n);
  i1.set_block(0, 0, pa);
  p1.set_block(0, 0, pa);
  i2.set_block(m, 0, pb);
  p2.set_block(0, m, pb);
  return Biproduct{sum, Morphism(a, sum, i1), Morphism(b, sum, i2), Morphism(sum, a, p1), Morphism(sum, b, p2)};
}

Morphism IdempotentCompletion::normalize(const Morphism& f) const {
  return Morphism(f.domain(), f.codomain(), base_.normalize(underlying(f)).matrix());
}

IdempotentCompletion::AmbientImage IdempotentCompletion::ambient_image(const Object& a) const {
  const Object base_object = a.underlying();
  const Morphism p(base_object, base_object, idempotent_of(a));
  const Morphism complement = base_.add(base_.identity(base_object), base_.negate(p));
  const Morphism inclusion = guaranteed(base_.ambient_kernel(complement), "image of an idempotent");
  const Morphism retraction = guaranteed(solve_left(base_, inclusion, p), "retraction onto the image");
  return AmbientImage{inclusion.domain(), inclusion, retraction};
}

Object IdempotentCompletion::pad(const Object& k) const {
  for (std::size_t m = 0; m <= 2; ++m) {
    const Object padded(block_diagonal(k.relations(), IntMatrix(m, 0)));
    if (base_.contains(padded)) return pair_object(padded.relations(), selection(k.generators() + m, k.generators()) *
                                                                      selection(k.generators(), k.generators() + m));
  }
  throw UnsupportedOperation("completion: no padding of " + k.to_string() + " lies in " + base_.name());
}

std::optional<Morphism> IdempotentCompletion::kernel(const Morphism& f) const {
  const AmbientImage source = ambient_image(f.domain());
  const Morphism restricted(source.image, f.codomain().underlying(), f.matrix() * source.inclusion.matrix());
  const auto k = base_.ambient_kernel(restricted);
  if (!k) return std::nullopt;
  const Object padded = pad(k->domain());
  const IntMatrix into = source.inclusion.matrix() * k->matrix() * selection(k->domain().generators(), padded.generators());
  return normalize(Morphism(padded, f.domain(), into));
}

std::optional<Morphism> IdempotentCompletion::cokernel(const Morphism& f) const {
  const AmbientImage source = ambient_image(f.domain());
  const AmbientImage target = ambient_image(f.codomain());
  const Morphism restricted(source.image, target.image,
                            target.retraction.matrix() * f.matrix() * source.inclusion.matrix());
  const auto c = base_.ambient_cokernel(restricted);
  if (!c) return std::nullopt;
  const Object padded = pad(c->codomain());
  const IntMatrix onto =
      selection(padded.generators(), c->codomain().generators()) * c->matrix() * target.retraction.matrix();
  return normalize(Morphism(f.codomain(), padded, onto));
}

std::optional<SystemSolution> IdempotentCompletion::solve(const LinearSystem& system) const {
  LinearSystem lowered;
  lowered.want_homogeneous = system.want_homogeneous;
  for (const Unknown& u : system.unknowns) lowered.unknowns.push_back({u.domain.underlying(), u.codomain.underlying()});
  for (const LinearEquation& eq : system.equations) {
    LinearEquation out{{}, underlying(eq.rhs)};
    for (const LinearTerm& t : eq.terms) {
      LinearTerm lt{t.unknown, std::nullopt, std::nullopt, t.scale};
      if (t.left) lt.left = underlying(*t.left);
      if (t.right) lt.right = underlying(*t.right);
      out.terms.push_back(std::move(lt));
    }
    lowered.equations.push_back(std::move(out));
  }
  // Each unknown lies in q Hom(A, B) p.
  for (std::size_t k = 0; k < system.unknowns.size(); ++k) {
    const Unknown& u = system.unknowns[k];
    const Object a = u.domain.underlying();
    const Object b = u.codomain.underlying();
    lowered.equations.push_back(LinearEquation{
        {LinearTerm{k, Morphism(b, b, idempotent_of(u.codomain)), Morphism(a, a, idempotent_of(u.domain)), 1},
         LinearTerm{k, std::nullopt, std::nullopt, -1}},
        base_.zero(a, b)});
  }
  auto solution = base_.solve(lowered);
  if (!solution) return std::nullopt;
  auto lift = [&](const Morphism& m, std::size_t k) {
    return Morphism(system.unknowns[k].domain, system.unknowns[k].codomain, m.matrix());
  };
  SystemSolution out;
  for (std::size_t k = 0; k < solution->values.size(); ++k) out.values.push_back(lift(solution->values[k], k));
  for (const auto& generator : solution->homogeneous) {
    std::vector<Morphism> g;
    for (std::size_t k = 0; k < generator.size(); ++k) g.push_back(lift(generator[k], k));
    out.homogeneous.push_back(std::move(g));
  }
  return out;
}

bool IdempotentCompletion::is_projective(const Object& a) const {
  return base_.is_projective(ambient_image(a).image);
}

std::optional<Morphism> IdempotentCompletion::projective_cover(const Object& a) const {
  auto cover = base_.projective_cover(a.underlying());
  if (!cover) return std::nullopt;
  const Object p = embed(cover->domain());
  return normalize(Morphism(p, a, idempotent_of(a) * cover->matrix()));
}

std::optional<IsoInvariants> IdempotentCompletion::iso_invariants(const Object& a) const {
  return base_.iso_invariants(ambient_image(a).image);
}

Object IdempotentCompletion::random_object(Rng& rng, const GeneratorBounds& b) const {
  const Biproduct parts = base_.biproduct(base_.random_object(rng, b), base_.random_object(rng, b));
  const Object& sum = parts.sum;
  switch (rng.uniform(0, 3)) {
    case 0:
      return embed(sum);
    case 1:
      return pair_object(sum.relations(), IntMatrix(sum.generators(), sum.generators()));
    default: {
      const Morphism twist = base_.random_automorphism(rng, sum, b);
      const Morphism inverse = guaranteed(base_.inverse(twist), "inverse automorphism");
      const Morphism projection = base_.compose(parts.inject_first, parts.project_first);
      return pair_object(sum.relations(), base_.compose(twist, base_.compose(projection, inverse)).matrix());
    }
  }
}

Morphism IdempotentCompletion::random_morphism(Rng& rng, const Object& dom, const Object& cod,
                                               const GeneratorBounds& b) const {
  const Morphism f = base_.random_morphism(rng, dom.underlying(), cod.underlying(), b);
  return normalize(Morphism(dom, cod, idempotent_of(cod) * f.matrix() * idempotent_of(dom)));
}

Morphism IdempotentCompletion::random_automorphism(Rng& rng, const Object& a, const GeneratorBounds& b) const {
  const AmbientImage split = ambient_image(a);
  IntMatrix twist = IntMatrix::identity(split.image.generators());
  if (base_.contains(split.image)) {
    twist = base_.random_automorphism(rng, split.image, b).matrix();
  } else if (!split.image.has_relations()) {
    twist = random_unimodular(rng, split.image.generators(), 4, b.max_morphism_entry).forward;
  }
  return normalize(Morphism(a, a, split.inclusion.matrix() * twist * split.retraction.matrix()));
}

ShortExactSequence IdempotentCompletion::random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const {
  const AmbientImage split = ambient_image(left);
  if (!base_.contains(split.image)) return random_split_ses(rng, left, random_object(rng, b), b);
  const ShortExactSequence s = base_.random_ses_from(rng, split.image, b);
  const Morphism mono(left, embed(s.middle()), s.mono.matrix() * split.retraction.matrix());
  return ShortExactSequence{normalize(mono), embed(s.epi)};
}

ShortExactSequence IdempotentCompletion::random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const {
  const AmbientImage split = ambient_image(right);
  if (!base_.contains(split.image)) return random_split_ses(rng, random_object(rng, b), right, b);
  const ShortExactSequence s = base_.random_ses_onto(rng, split.image, b);
  const Morphism epi(embed(s.middle()), right, split.inclusion.matrix() * s.epi.matrix());
  return ShortExactSequence{embed(s.mono), normalize(epi)};
}

IdempotentSplitting split_idempotent(const IdempotentCompletion& cat, const Morphism& q) {
  const Object& x = q.domain();
  if (q.codomain() != x || !cat.contains(x) || !cat.well_defined(q) || !cat.equal(cat.compose(q, q), q))
    throw InvalidInput("split_idempotent: not an idempotent endomorphism");
  const Morphism rest = cat.add(cat.identity(x), cat.negate(q));
  const Object kernel = pair_object(x.relations(), rest.matrix());
  const Object image = pair_object(x.relations(), q.matrix());
  return IdempotentSplitting{kernel,
                             image,
                             Morphism(kernel, x, rest.matrix()),
                             Morphism(image, x, q.matrix()),
                             Morphism(x, kernel, rest.matrix()),
                             Morphism(x, image, q.matrix())};
}

Functor identity_functor(const ExactCategory& cat) {
  return Functor{"id", &cat, &cat, [](const Object& a) { return a; }, [](const Morphism& f) { return f; }};
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (f.target != g.source) throw InvalidInput("compose_functors: target and source differ");
  return Functor{g.name + " o " + f.name, f.source, g.target, [f, g](const Object& a) { return g(f(a)); },
                 [f, g](const Morphism& m) { return g(f(m)); }};
}

Functor extend_functor(const Functor& f, const IdempotentCompletion& source, const IdempotentCompletion& target) {
  if (f.source != &source.base() || f.target != &target.base())
    throw InvalidInput("extend_functor: completions do not match the functor");
  const ExactCategory& base_target = target.base();
  auto on_objects = [f, &base_target](const Object& a) {
    const Object image = f(a.underlying());
    const Morphism p = f(Morphism(a.underlying(), a.underlying(), IdempotentCompletion::idempotent_of(a)));
    if (!base_target.equal(base_target.compose(p, p), p))
      throw PreconditionError("extend_functor", "F(p) is not idempotent");
    return pair_object(image.relations(), p.matrix());
  };
  auto on_morphisms = [f, on_objects](const Morphism& m) {
    return Morphism(on_objects(m.domain()), on_objects(m.codomain()), f(IdempotentCompletion::underlying(m)).matrix());
  };
  return Functor{f.name + "^", &source, &target, on_objects, on_morphisms};
}

std::optional<RetractionSplitting> retraction_kernel_probe(const ExactCategory& cat, const Morphism& r,
                                                           const Morphism& s) {
  if (!cat.equal(cat.compose(r, s), cat.identity(r.codomain())))
    throw PreconditionError("retraction_kernel_probe", "r o s is not the identity");
  const auto k = cat.kernel(r);
  if (!k) return std::nullopt;
  const Morphism rest = cat.add(cat.identity(r.domain()), cat.negate(cat.compose(s, r)));
  const Morphism t = guaranteed(solve_left(cat, *k, rest), "1 - s r through the kernel");
  return RetractionSplitting{*k, t, s, r};
}

bool verify_splitting(const ExactCategory& cat, const RetractionSplitting& s) {
  const Object& kernel = s.kernel.domain();
  const Object& middle = s.retraction.domain();
  return cat.equal(cat.compose(s.complement, s.kernel), cat.identity(kernel)) &&
         is_zero_morphism(cat, cat.compose(s.complement, s.section)) &&
         cat.equal(cat.compose(s.retraction, s.section), cat.identity(s.retraction.codomain())) &&
         cat.equal(cat.add(cat.compose(s.kernel, s.complement), cat.compose(s.section, s.retraction)),
                   cat.identity(middle));
}

}  // namespace exact
