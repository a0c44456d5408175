#include "exact/models/vector_spaces.hpp"

#include "exact/core/constructions.hpp"
#include "exact/core/errors.hpp"
#include "exact/models/presented.hpp"

namespace exact {

VectorSpaces::VectorSpaces(std::int64_t p) : field_(p) {}

std::string VectorSpaces::name() const { return "vect-" + std::to_string(characteristic()); }

bool VectorSpaces::equal(const Morphism& f, const Morphism& g) const {
  if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
  return field_.equal(f.matrix(), g.matrix());
}

Morphism VectorSpaces::normalize(const Morphism& f) const {
  return Morphism(f.domain(), f.codomain(), field_.reduce(f.matrix()));
}

std::optional<Morphism> VectorSpaces::kernel(const Morphism& f) const {
  IntMatrix basis = field_.nullspace(f.matrix());
  return Morphism(Object::free(basis.cols()), f.domain(), basis);
}

std::optional<Morphism> VectorSpaces::cokernel(const Morphism& f) const {
  IntMatrix left_null = field_.nullspace(f.matrix().transpose()).transpose();
  return Morphism(f.codomain(), Object::free(left_null.rows()), left_null);
}

std::optional<SystemSolution> VectorSpaces::solve(const LinearSystem& sys) const {
  std::vector<std::size_t> offset;
  std::size_t cols = 0;
  for (const auto& u : sys.unknowns) {
    offset.push_back(cols);
    cols += u.codomain.generators() * u.domain.generators();
  }
  std::size_t rows = 0;
  std::vector<std::size_t> row_at;
  for (const auto& eq : sys.equations) {
    row_at.push_back(rows);
    rows += eq.rhs.domain().generators() * eq.rhs.codomain().generators();
  }
  IntMatrix m(rows, cols);
  IntMatrix rhs(rows, 1);
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    const LinearEquation& eq = sys.equations[e];
    for (const auto& t : eq.terms) {
      const Unknown& u = sys.unknowns.at(t.unknown);
      IntMatrix l = t.left ? t.left->matrix() : IntMatrix::identity(u.codomain.generators());
      if (t.scale != 1) l *= t.scale;
      IntMatrix r = t.right ? t.right->matrix() : IntMatrix::identity(u.domain.generators());
      IntMatrix block = kronecker(r.transpose(), l);
      if (block.rows() != eq.rhs.domain().generators() * eq.rhs.codomain().generators())
        throw InvalidInput("linear term does not match its equation");
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(row_at[e] + i, offset[t.unknown] + j) += block(i, j);
    }
    IntMatrix v = eq.rhs.matrix().vec();
    for (std::size_t i = 0; i < v.rows(); ++i) rhs(row_at[e] + i, 0) = v(i, 0);
  }
  auto x = field_.solve(m, rhs);
  if (!x) return std::nullopt;
  SystemSolution out;
  auto unpack = [&](const IntMatrix& vec, std::size_t col) {
    std::vector<Morphism> values;
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
      const Unknown& u = sys.unknowns[k];
      const std::size_t c = u.codomain.generators();
      const std::size_t d = u.domain.generators();
      values.push_back(normalize(Morphism(u.domain, u.codomain,
                                          IntMatrix::unvec(vec.block(offset[k], col, c * d, 1), c, d))));
    }
    return values;
  };
  out.values = unpack(*x, 0);
  if (sys.want_homogeneous) {
    IntMatrix ns = field_.nullspace(m);
    for (std::size_t g = 0; g < ns.cols(); ++g) out.homogeneous.push_back(unpack(ns, g));
  }
  return out;
}

bool VectorSpaces::is_short_exact(const Morphism& mono, const Morphism& epi) const {
  if (mono.codomain() != epi.domain()) throw InvalidInput("is_short_exact: arrows are not composable");
  if (!field_.reduce(epi.matrix() * mono.matrix()).is_zero()) return false;
  const std::size_t a = mono.domain().generators();
  const std::size_t b = mono.codomain().generators();
  const std::size_t c = epi.codomain().generators();
  return field_.rank(mono.matrix()) == a && field_.rank(epi.matrix()) == c && a + c == b;
}

bool VectorSpaces::is_iso(const Morphism& f) const {
  const std::size_t n = f.domain().generators();
  return f.codomain().generators() == n && field_.rank(f.matrix()) == n;
}

std::optional<IsoInvariants> VectorSpaces::iso_invariants(const Object& a) const {
  IsoInvariants inv;
  inv.torsion.assign(a.generators(), Integer(static_cast<long>(characteristic())));
  return inv;
}

Object VectorSpaces::random_object(Rng& rng, const GeneratorBounds& b) const {
  return Object::free(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b.max_generators))));
}

Morphism VectorSpaces::random_morphism(Rng& rng, const Object& dom, const Object& cod,
                                       const GeneratorBounds& b) const {
  IntMatrix m(cod.generators(), dom.generators());
  const std::int64_t top = std::min<std::int64_t>(characteristic() - 1, b.max_morphism_entry);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(rng.uniform(0, std::max<std::int64_t>(0, top)));
  return Morphism(dom, cod, m);
}

Morphism VectorSpaces::random_automorphism(Rng& rng, const Object& a, const GeneratorBounds&) const {
  const std::size_t n = a.generators();
  return normalize(Morphism(a, a, random_unimodular(rng, n, static_cast<int>(2 * n), 2).forward));
}

ShortExactSequence VectorSpaces::random_ses_from(Rng& rng, const Object& left, const GeneratorBounds& b) const {
  return random_split_ses(rng, left, random_object(rng, b), b);
}

ShortExactSequence VectorSpaces::random_ses_onto(Rng& rng, const Object& right, const GeneratorBounds& b) const {
  return random_split_ses(rng, random_object(rng, b), right, b);
}

}  // namespace exact
