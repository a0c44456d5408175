#include "exact/complexes/acyclicity.hpp"

#include "exact/core/errors.hpp"
#include "exact/lemmas/ses_morphism.hpp"

namespace exact {

namespace {

// Degrees n of the cycle objects Z^n that can be nonzero.
std::vector<int> cycle_degrees(const ChainComplex& x) {
  std::vector<int> out = x.degrees();
  if (!x.is_periodic() && !x.empty()) out.push_back(x.hi() + 1);
  return out;
}

}  // namespace

AcyclicityCertificate::AcyclicityCertificate(ChainComplex complex, std::map<int, Factorization> factors)
    : complex_(std::move(complex)) {
  for (auto& [n, f] : factors) factors_.insert_or_assign(complex_.canonical_degree(n), std::move(f));
}

Object AcyclicityCertificate::cycles(int n) const {
  auto it = factors_.find(complex_.canonical_degree(n));
  return it == factors_.end() ? Object() : it->second.monic.domain();
}

Morphism AcyclicityCertificate::epic(int n) const {
  auto it = factors_.find(complex_.canonical_degree(n));
  return it == factors_.end() ? zero_between(complex_.object(n - 1), Object()) : it->second.epic;
}

Morphism AcyclicityCertificate::monic(int n) const {
  auto it = factors_.find(complex_.canonical_degree(n));
  return it == factors_.end() ? zero_between(Object(), complex_.object(n)) : it->second.monic;
}

std::vector<int> AcyclicityCertificate::degrees() const {
  std::vector<int> out;
  for (const auto& [n, f] : factors_) out.push_back(n);
  return out;
}

bool AcyclicityCertificate::verify(const ExactCategory& cat) const {
  for (int n : cycle_degrees(complex_)) {
    if (epic(n).domain() != complex_.object(n - 1) || monic(n).codomain() != complex_.object(n)) return false;
    if (!commutes(cat, cat.compose(monic(n), epic(n)), complex_.differential(n - 1))) return false;
  }
  for (int n : complex_.degrees())
    if (!is_short_exact(cat, monic(n), epic(n + 1))) return false;
  return true;
}

std::optional<AcyclicityCertificate> is_acyclic(const ExactCategory& cat, const ChainComplex& x) {
  std::map<int, Factorization> factors;
  for (int n : cycle_degrees(x)) {
    auto a = analyze(cat, x.differential(n - 1));
    if (!a) return std::nullopt;
    factors.emplace(n, Factorization{a->coimage, a->image});
  }
  AcyclicityCertificate cert(x, std::move(factors));
  for (int n : x.degrees())
    if (!is_short_exact(cat, cert.monic(n), cert.epic(n + 1))) return std::nullopt;
  return cert;
}

Homology homology(const ExactCategory& cat, const ChainComplex& x, int n) {
  if (!cat.is_abelian()) throw UnsupportedOperation("homology: model " + cat.name() + " is not abelian");
  const Morphism cycles = guaranteed(cat.kernel(x.differential(n)), "kernel of d^n");
  const Morphism boundaries = guaranteed(solve_left(cat, cycles, x.differential(n - 1)), "d^{n-1} into cycles");
  const Morphism projection = guaranteed(cat.cokernel(boundaries), "cokernel of boundaries");
  return Homology{projection.codomain(), cycles, projection};
}

Morphism homology_map(const ExactCategory& cat, const ChainMap& f, int n) {
  const Homology source = homology(cat, f.source(), n);
  const Homology target = homology(cat, f.target(), n);
  const Morphism on_cycles =
      guaranteed(solve_left(cat, target.cycles, cat.compose(f.component(n), source.cycles)), "map on cycles");
  return guaranteed(solve_right(cat, source.projection, cat.compose(target.projection, on_cycles)), "map on homology");
}

bool is_quasi_iso(const ExactCategory& cat, const ChainMap& f) {
  if (!cat.flags().idempotent_complete)
    throw PreconditionError("is_quasi_iso",
                            "model " + cat.name() + " is not idempotent complete; the cone criterion does not decide it");
  return is_acyclic(cat, mapping_cone(cat, f)).has_value();
}

HomologySequence homology_sequence(const ExactCategory& cat, const ChainMap& i, const ChainMap& p, int lo, int hi) {
  if (!cat.is_abelian()) throw UnsupportedOperation("homology_sequence: model " + cat.name() + " is not abelian");
  const ChainComplex& left = i.source();
  const ChainComplex& middle = i.target();
  const ChainComplex& right = p.target();
  for (int n = lo; n <= hi + 1; ++n)
    if (!is_short_exact(cat, i.component(n), p.component(n)))
      throw PreconditionError("homology_sequence", "degree " + std::to_string(n) + " is not short exact");

  HomologySequence out;
  auto label = [](const char* name, int n) { return std::string("H^") + std::to_string(n) + "(" + name + ")"; };
  for (int n = lo; n <= hi; ++n) {
    out.arrows.push_back(homology_map(cat, i, n));
    out.arrows.push_back(homology_map(cat, p, n));
    out.labels.push_back(label("C'", n));
    out.labels.push_back(label("C", n));
    out.labels.push_back(label("C''", n));
    if (n == hi) break;

    const Homology source = homology(cat, right, n);
    const Homology target = homology(cat, left, n + 1);
    const Morphism section = guaranteed(solve_left(cat, p.component(n), cat.identity(right.object(n))), "section");
    const Morphism retraction =
        guaranteed(solve_right(cat, i.component(n + 1), cat.identity(left.object(n + 1))), "retraction");
    const Morphism lifted =
        cat.compose(retraction, cat.compose(middle.differential(n), cat.compose(section, source.cycles)));
    const Morphism on_cycles = guaranteed(solve_left(cat, target.cycles, lifted), "connecting map on cycles");
    out.arrows.push_back(
        guaranteed(solve_right(cat, source.projection, cat.compose(target.projection, on_cycles)), "connecting map"));
  }
  return out;
}

ConeAcyclicity check_cone_acyclic(const ExactCategory& cat, const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  auto cert_a = is_acyclic(cat, a);
  if (!cert_a) throw PreconditionError("check_cone_acyclic", "source complex is not acyclic");
  auto cert_b = is_acyclic(cat, b);
  if (!cert_b) throw PreconditionError("check_cone_acyclic", "target complex is not acyclic");

  const ChainComplex cone = mapping_cone(cat, f);
  const std::vector<int> degrees = cycle_degrees(cone);

  // g^n : Z^n A -> Z^n B induced by f^n.
  auto on_cycles = [&](int n) {
    return guaranteed(solve_left(cat, cert_b->monic(n), cat.compose(f.component(n), cert_a->monic(n))),
                      "map of cycle objects");
  };

  std::map<int, SesFactorization> split;
  for (int n : degrees) {
    const SesMorphism m{ShortExactSequence{cert_a->monic(n), cert_a->epic(n + 1)},
                        ShortExactSequence{cert_b->monic(n), cert_b->epic(n + 1)}, on_cycles(n), f.component(n),
                        on_cycles(n + 1)};
    split.emplace(n, factor_ses_morphism(cat, m));
  }

  // Z^n C >-> A^{n+1} + B^n and A^n + B^{n-1} ->> Z^n C.
  std::map<int, Factorization> factors;
  std::map<int, ShortExactSequence> extensions;
  for (int n : degrees) {
    const SesFactorization& s = split.at(n);
    const Morphism monic = pair_into(cat, cat.negate(cat.compose(cert_a->monic(n + 1), s.middle_row.epi)), s.from_middle);
    const Morphism epic = copair_from(cat, s.to_middle, cat.compose(s.middle_row.mono, cert_b->epic(n)));
    factors.emplace(n, Factorization{epic, monic});
    extensions.emplace(n, s.middle_row);
  }
  AcyclicityCertificate certificate(cone, std::move(factors));
  bool verified = certificate.verify(cat);
  for (const auto& [n, e] : extensions) verified = verified && is_short_exact(cat, e);
  return ConeAcyclicity{std::move(certificate), std::move(extensions), verified};
}

}  // namespace exact
