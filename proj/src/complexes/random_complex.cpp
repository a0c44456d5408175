#include "exact/complexes/random_complex.hpp"

#include <map>

#include "exact/core/errors.hpp"

namespace exact {

namespace {

std::vector<Integer> random_coefficients(Rng& rng, std::size_t count) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Integer(static_cast<long>(rng.uniform(-2, 2))));
  return out;
}

Morphism combination(const ExactCategory& cat, Morphism base, const std::vector<Integer>& coefficients,
                     const std::vector<std::vector<Morphism>>& generators, std::size_t slot) {
  for (std::size_t g = 0; g < generators.size(); ++g)
    base = cat.add(base, cat.scale(coefficients[g], generators[g][slot]));
  return base;
}

}  // namespace

ChainComplex random_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length, const GeneratorBounds& b) {
  std::vector<Object> objects;
  for (std::size_t i = 0; i < length; ++i) objects.push_back(cat.random_object(rng, b));
  return random_complex(cat, rng, lo, std::move(objects), b);
}

ChainComplex random_complex(const ExactCategory& cat, Rng& rng, int lo, std::vector<Object> objects,
                            const GeneratorBounds& b) {
  const std::size_t length = objects.size();
  std::vector<Morphism> diffs;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    if (i == 0) {
      diffs.push_back(cat.random_morphism(rng, objects[0], objects[1], b));
      continue;
    }
    LinearSystem sys;
    sys.unknowns.push_back({objects[i], objects[i + 1]});
    sys.equations.push_back({{LinearTerm{0, std::nullopt, diffs.back(), 1}}, cat.zero(objects[i - 1], objects[i + 1])});
    sys.want_homogeneous = true;
    const SystemSolution sol = guaranteed(cat.solve(sys), "maps killing the previous differential");
    diffs.push_back(combination(cat, cat.zero(objects[i], objects[i + 1]),
                                random_coefficients(rng, sol.homogeneous.size()), sol.homogeneous, 0));
  }
  return ChainComplex::bounded(cat, lo, std::move(objects), std::move(diffs));
}

ChainComplex random_acyclic_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length,
                                    const GeneratorBounds& b) {
  std::vector<Object> objects;
  std::vector<ShortExactSequence> rows;
  Object cycles = cat.zero_object();
  for (std::size_t i = 0; i < length; ++i) {
    if (i + 1 == length) {
      rows.push_back(ShortExactSequence{cat.identity(cycles), cat.zero(cycles, cat.zero_object())});
    } else {
      rows.push_back(cat.random_ses_from(rng, cycles, b));
    }
    objects.push_back(rows.back().middle());
    cycles = rows.back().right();
  }
  std::vector<Morphism> diffs;
  for (std::size_t i = 0; i + 1 < length; ++i) diffs.push_back(cat.compose(rows[i + 1].mono, rows[i].epi));
  return ChainComplex::bounded(cat, lo, std::move(objects), std::move(diffs));
}

ChainComplex conjugate(const ExactCategory& cat, const ChainComplex& x, const std::vector<Morphism>& automorphisms) {
  if (automorphisms.size() != x.size()) throw InvalidInput("conjugate: one automorphism per degree expected");
  std::vector<Morphism> inverses;
  for (const auto& a : automorphisms) inverses.push_back(guaranteed(cat.inverse(a), "inverse automorphism"));
  auto at = [&](const std::vector<Morphism>& v, int n) { return v[static_cast<std::size_t>(x.canonical_degree(n) - x.lo())]; };
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  for (int n : x.degrees()) objects.push_back(x.object(n));
  const int last = x.is_periodic() ? x.hi() : x.hi() - 1;
  for (int n = x.lo(); n <= last; ++n)
    diffs.push_back(cat.compose(at(automorphisms, n + 1), cat.compose(x.differential(n), at(inverses, n))));
  if (x.is_periodic()) return ChainComplex::periodic(cat, x.lo(), std::move(objects), std::move(diffs));
  return ChainComplex::bounded(cat, x.lo(), std::move(objects), std::move(diffs));
}

ChainComplex random_contractible_complex(const ExactCategory& cat, Rng& rng, int lo, std::size_t length,
                                         const GeneratorBounds& b) {
  if (length == 0) return ChainComplex();
  const ChainComplex base = random_complex(cat, rng, lo + 1, length - 1, b);
  ChainComplex cone = mapping_cone(cat, identity_map(cat, base));
  std::vector<Morphism> twists;
  for (int n : cone.degrees()) twists.push_back(cat.random_automorphism(rng, cone.object(n), b));
  return conjugate(cat, cone, twists);
}

ChainMap random_chain_map(const ExactCategory& cat, Rng& rng, const ChainComplex& x, const ChainComplex& y,
                          const GeneratorBounds& b) {
  const std::vector<int> degrees = common_degrees(x, y);
  LinearSystem sys;
  std::map<int, std::size_t> index;
  for (int n : degrees) {
    if (x.object(n).generators() == 0 || y.object(n).generators() == 0) continue;
    index.emplace(n, sys.unknowns.size());
    sys.unknowns.push_back({x.object(n), y.object(n)});
  }
  auto unknown = [&](int n) -> std::optional<std::size_t> {
    auto it = index.find(x.is_periodic() ? x.canonical_degree(n) : n);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (int n : degrees) {
    LinearEquation eq{{}, cat.zero(x.object(n), y.object(n + 1))};
    if (auto u = unknown(n)) eq.terms.push_back(LinearTerm{*u, y.differential(n), std::nullopt, 1});
    if (auto u = unknown(n + 1)) eq.terms.push_back(LinearTerm{*u, std::nullopt, x.differential(n), -1});
    if (!eq.terms.empty()) sys.equations.push_back(std::move(eq));
  }
  std::map<int, Morphism> components;
  if (sys.equations.empty()) {
    for (const auto& [n, u] : index) components.emplace(n, cat.random_morphism(rng, x.object(n), y.object(n), b));
  } else {
    sys.want_homogeneous = true;
    const SystemSolution sol = guaranteed(cat.solve(sys), "chain map lattice");
    const std::vector<Integer> coefficients = random_coefficients(rng, sol.homogeneous.size());
    for (const auto& [n, u] : index)
      components.emplace(n, combination(cat, cat.zero(x.object(n), y.object(n)), coefficients, sol.homogeneous, u));
  }
  return ChainMap(cat, x, y, std::move(components));
}

ChainMap random_null_homotopic_map(const ExactCategory& cat, Rng& rng, const ChainComplex& x, const ChainComplex& y,
                                   const GeneratorBounds& b) {
  std::vector<int> degrees = common_degrees(x, y);
  if (!x.is_periodic() && !degrees.empty()) degrees.push_back(degrees.back() + 1);
  std::map<int, Morphism> h;
  for (int n : degrees) h.emplace(n, cat.random_morphism(rng, x.object(n), y.object(n - 1), b));
  const ChainHomotopy homotopy(x, y, std::move(h));
  std::map<int, Morphism> f;
  for (int n : common_degrees(x, y))
    f.emplace(n, cat.add(cat.compose(y.differential(n - 1), homotopy.component(n)),
                         cat.compose(homotopy.component(n + 1), x.differential(n))));
  return ChainMap(cat, x, y, std::move(f));
}

}  // namespace exact
