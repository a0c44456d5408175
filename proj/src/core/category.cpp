#include "exact/core/category.hpp"

#include "exact/core/errors.hpp"

namespace exact {

std::string to_string(AdmissibilityPolicy p) {
  switch (p) {
    case AdmissibilityPolicy::AllKernelCokernel: return "all-kernel-cokernel";
    case AdmissibilityPolicy::SplitOnly: return "split-only";
    case AdmissibilityPolicy::ExactInAmbient: return "exact-in-ambient";
    case AdmissibilityPolicy::EvenRankSplit: return "even-rank-split";
  }
  return "unknown";
}

Morphism ExactCategory::identity(const Object& a) const {
  return Morphism(a, a, IntMatrix::identity(a.generators()));
}

Morphism ExactCategory::zero(const Object& dom, const Object& cod) const {
  return Morphism(dom, cod, IntMatrix(cod.generators(), dom.generators()));
}

Morphism ExactCategory::compose(const Morphism& g, const Morphism& f) const {
  if (f.codomain() != g.domain()) throw InvalidInput("compose: codomain/domain mismatch");
  return normalize(Morphism(f.domain(), g.codomain(), g.matrix() * f.matrix()));
}

Morphism ExactCategory::add(const Morphism& f, const Morphism& g) const {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw InvalidInput("add: morphisms are not parallel");
  return normalize(Morphism(f.domain(), f.codomain(), f.matrix() + g.matrix()));
}

Morphism ExactCategory::negate(const Morphism& f) const {
  return normalize(Morphism(f.domain(), f.codomain(), -f.matrix()));
}

Morphism ExactCategory::scale(const Integer& c, const Morphism& f) const {
  return normalize(Morphism(f.domain(), f.codomain(), f.matrix() * c));
}

Biproduct ExactCategory::biproduct(const Object& a, const Object& b) const {
  const std::size_t m = a.generators();
  const std::size_t n = b.generators();
  Object sum(block_diagonal(a.relations(), b.relations()));
  IntMatrix i1(m + n, m), i2(m + n, n), p1(m, m + n), p2(n, m + n);
  for (std::size_t k = 0; k < m; ++k) i1(k, k) = p1(k, k) = 1;
  for (std::size_t k = 0; k < n; ++k) i2(m + k, k) = p2(k, m + k) = 1;
  return Biproduct{sum, Morphism(a, sum, i1), Morphism(b, sum, i2), Morphism(sum, a, p1),
                   Morphism(sum, b, p2)};
}

Object ExactCategory::direct_sum(const std::vector<Object>& parts) const {
  Object sum = zero_object();
  bool first = true;
  for (const auto& p : parts) {
    sum = first ? p : biproduct(sum, p).sum;
    first = false;
  }
  return sum;
}

Morphism ExactCategory::matrix_morphism(const std::vector<Object>& domains,
                                        const std::vector<Object>& codomains,
                                        const std::vector<std::vector<Morphism>>& blocks) const {
  if (blocks.size() != codomains.size()) throw DimensionError("block rows mismatch");
  Object dom = direct_sum(domains);
  Object cod = direct_sum(codomains);
  IntMatrix m(cod.generators(), dom.generators());
  std::size_t row = 0;
  for (std::size_t i = 0; i < codomains.size(); ++i) {
    if (blocks[i].size() != domains.size()) throw DimensionError("block columns mismatch");
    std::size_t col = 0;
    for (std::size_t j = 0; j < domains.size(); ++j) {
      const Morphism& b = blocks[i][j];
      if (b.domain() != domains[j] || b.codomain() != codomains[i])
        throw InvalidInput("matrix_morphism: block has wrong domain or codomain");
      m.set_block(row, col, b.matrix());
      col += domains[j].generators();
    }
    row += codomains[i].generators();
  }
  return normalize(Morphism(dom, cod, m));
}

bool ExactCategory::is_iso(const Morphism& f) const { return inverse(f).has_value(); }

std::optional<Morphism> ExactCategory::inverse(const Morphism& f) const {
  LinearSystem sys;
  sys.unknowns.push_back(Unknown{f.codomain(), f.domain()});
  sys.equations.push_back(LinearEquation{{LinearTerm{0, f, std::nullopt, 1}}, identity(f.codomain())});
  auto sol = solve(sys);
  if (!sol) return std::nullopt;
  Morphism g = sol->values[0];
  if (!equal(compose(g, f), identity(f.domain()))) return std::nullopt;
  return g;
}

ShortExactSequence ExactCategory::random_ses(Rng& rng, const GeneratorBounds& b) const {
  return random_ses_from(rng, random_object(rng, b), b);
}

ShortExactSequence ExactCategory::random_split_ses(Rng& rng, const Object& left,
                                                   const Object& right,
                                                   const GeneratorBounds& b) const {
  Morphism x = random_morphism(rng, right, left, b);
  Morphism y = random_morphism(rng, left, right, b);
  // phi = [[1 + xy, x], [y, 1]] and its inverse [[1, -x], [-y, 1 + yx]].
  Morphism mono = matrix_morphism({left}, {left, right},
                                  {{add(identity(left), compose(x, y))}, {y}});
  Morphism epi = matrix_morphism({left, right}, {right},
                                 {{negate(y), add(identity(right), compose(y, x))}});
  return ShortExactSequence{mono, epi};
}

void ExactCategory::require_contains(const Object& a, const std::string& where) const {
  if (!contains(a)) throw InvalidInput(where + ": object is not in model " + name());
}

void ExactCategory::require_morphism(const Morphism& f, const std::string& where) const {
  require_contains(f.domain(), where);
  require_contains(f.codomain(), where);
  if (!well_defined(f)) throw InvalidInput(where + ": morphism is not well defined in " + name());
}

}  // namespace exact
