#include "exact/complexes/complex.hpp"

#include <algorithm>

#include "exact/core/errors.hpp"

namespace exact {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

// Integer range [lo, hi] covering the windows of both complexes.
std::vector<int> span(const ChainComplex& a, const ChainComplex& b) {
  if (a.empty()) return b.degrees();
  if (b.empty()) return a.degrees();
  std::vector<int> out;
  for (int n = std::min(a.lo(), b.lo()); n <= std::max(a.hi(), b.hi()); ++n) out.push_back(n);
  return out;
}

Morphism sign(const ExactCategory& cat, int k, const Morphism& f) { return k % 2 == 0 ? f : cat.negate(f); }

// Key under which a component in degree n is stored.
int map_key(const ChainComplex& source, const ChainComplex& target, int n) {
  if (source.is_periodic()) return source.canonical_degree(n);
  if (target.is_periodic()) return target.canonical_degree(n);
  return n;
}

}  // namespace

ChainComplex::ChainComplex(bool periodic, int lo, std::vector<Object> objects, std::vector<Morphism> differentials)
    : periodic_(periodic), lo_(lo), objects_(std::move(objects)), differentials_(std::move(differentials)) {}

ChainComplex ChainComplex::bounded(const ExactCategory& cat, int lo, std::vector<Object> objects,
                                   std::vector<Morphism> differentials) {
  const std::size_t expected = objects.empty() ? 0 : objects.size() - 1;
  if (differentials.size() != expected) throw InvalidInput("bounded complex: expected one differential fewer than objects");
  ChainComplex x(false, lo, std::move(objects), std::move(differentials));
  x.validate(cat);
  return x;
}

ChainComplex ChainComplex::periodic(const ExactCategory& cat, int lo, std::vector<Object> objects,
                                    std::vector<Morphism> differentials) {
  if (objects.empty()) throw InvalidInput("periodic complex: empty window");
  if (differentials.size() != objects.size()) throw InvalidInput("periodic complex: expected one differential per object");
  ChainComplex x(true, lo, std::move(objects), std::move(differentials));
  x.validate(cat);
  return x;
}

ChainComplex ChainComplex::concentrated(const ExactCategory& cat, const Object& a, int degree) {
  return bounded(cat, degree, {a}, {});
}

void ChainComplex::validate(const ExactCategory& cat) const {
  for (const auto& a : objects_) cat.require_contains(a, "complex");
  for (int n : degrees()) {
    const Morphism d = differential(n);
    if (d.domain() != object(n) || d.codomain() != object(n + 1))
      throw InvalidInput("complex: differential d^" + std::to_string(n) + " has the wrong domain or codomain");
    cat.require_morphism(d, "complex");
  }
  for (int n = lo_ - 1; n <= hi(); ++n) {
    if (!is_zero_morphism(cat, cat.compose(differential(n + 1), differential(n))))
      throw InvalidInput("complex: d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) + " is not zero");
  }
}

std::vector<int> ChainComplex::degrees() const {
  std::vector<int> out;
  for (int n = lo_; n <= hi(); ++n) out.push_back(n);
  return out;
}

bool ChainComplex::in_window(int n) const { return periodic_ ? !empty() : (n >= lo_ && n <= hi()); }

int ChainComplex::canonical_degree(int n) const {
  if (!periodic_) return n;
  return lo_ + floor_mod(n - lo_, static_cast<int>(objects_.size()));
}

Object ChainComplex::object(int n) const {
  if (!in_window(n)) return Object();
  return objects_[static_cast<std::size_t>(canonical_degree(n) - lo_)];
}

Morphism ChainComplex::differential(int n) const {
  if (periodic_ || (n >= lo_ && n < hi())) return differentials_[static_cast<std::size_t>(canonical_degree(n) - lo_)];
  return zero_between(object(n), object(n + 1));
}

std::vector<int> common_degrees(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_periodic() && b.is_periodic()) {
    if (a.size() != b.size()) throw InvalidInput("periodic complexes with different periods");
    return a.degrees();
  }
  if (a.is_periodic() || b.is_periodic()) {
    const ChainComplex& other = a.is_periodic() ? b : a;
    if (!other.empty()) throw InvalidInput("maps between a periodic and a bounded complex");
    return a.is_periodic() ? a.degrees() : b.degrees();
  }
  return span(a, b);
}

Morphism zero_between(const Object& dom, const Object& cod) {
  return Morphism(dom, cod, IntMatrix(cod.generators(), dom.generators()));
}

ChainMap::ChainMap(const ExactCategory& cat, ChainComplex source, ChainComplex target,
                   std::map<int, Morphism> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [n, f] : components) components_.insert_or_assign(map_key(source_, target_, n), std::move(f));
  const std::vector<int> degrees = common_degrees(source_, target_);
  for (const auto& [n, f] : components_) {
    if (f.domain() != source_.object(n) || f.codomain() != target_.object(n))
      throw InvalidInput("chain map: component " + std::to_string(n) + " has the wrong domain or codomain");
    cat.require_morphism(f, "chain map");
  }
  for (int n : degrees) {
    for (int m : {n - 1, n}) {
      if (!commutes(cat, cat.compose(target_.differential(m), component(m)),
                    cat.compose(component(m + 1), source_.differential(m))))
        throw InvalidInput("chain map: square in degree " + std::to_string(m) + " does not commute");
    }
  }
}

Morphism ChainMap::component(int n) const {
  auto it = components_.find(map_key(source_, target_, n));
  if (it != components_.end()) return it->second;
  return zero_between(source_.object(n), target_.object(n));
}

ChainHomotopy::ChainHomotopy(ChainComplex source, ChainComplex target, std::map<int, Morphism> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [n, h] : components) {
    const int key = map_key(source_, target_, n);
    if (h.domain() != source_.object(key) || h.codomain() != target_.object(key - 1))
      throw InvalidInput("homotopy: component " + std::to_string(n) + " has the wrong domain or codomain");
    components_.insert_or_assign(key, std::move(h));
  }
}

Morphism ChainHomotopy::component(int n) const {
  auto it = components_.find(map_key(source_, target_, n));
  if (it != components_.end()) return it->second;
  return zero_between(source_.object(n), target_.object(n - 1));
}

ChainMap identity_map(const ExactCategory& cat, const ChainComplex& x) {
  std::map<int, Morphism> c;
  for (int n : x.degrees()) c.emplace(n, cat.identity(x.object(n)));
  return ChainMap(cat, x, x, std::move(c));
}

ChainMap zero_map(const ExactCategory& cat, const ChainComplex& x, const ChainComplex& y) {
  return ChainMap(cat, x, y, {});
}

ChainMap compose(const ExactCategory& cat, const ChainMap& g, const ChainMap& f) {
  std::map<int, Morphism> c;
  for (int n : common_degrees(f.source(), g.target())) c.emplace(n, cat.compose(g.component(n), f.component(n)));
  return ChainMap(cat, f.source(), g.target(), std::move(c));
}

ChainMap add(const ExactCategory& cat, const ChainMap& f, const ChainMap& g) {
  std::map<int, Morphism> c;
  for (int n : common_degrees(f.source(), f.target())) c.emplace(n, cat.add(f.component(n), g.component(n)));
  return ChainMap(cat, f.source(), f.target(), std::move(c));
}

ChainMap negate(const ExactCategory& cat, const ChainMap& f) {
  std::map<int, Morphism> c;
  for (int n : common_degrees(f.source(), f.target())) c.emplace(n, cat.negate(f.component(n)));
  return ChainMap(cat, f.source(), f.target(), std::move(c));
}

bool equal(const ExactCategory& cat, const ChainMap& f, const ChainMap& g) {
  for (int n : common_degrees(f.source(), f.target()))
    if (!commutes(cat, f.component(n), g.component(n))) return false;
  return true;
}

bool is_chain_iso(const ExactCategory& cat, const ChainMap& f) {
  for (int n : common_degrees(f.source(), f.target()))
    if (!cat.is_iso(f.component(n))) return false;
  return true;
}

ChainComplex translate(const ExactCategory& cat, const ChainComplex& x, int k) {
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  for (int n : x.degrees()) objects.push_back(x.object(n));
  const int last = x.is_periodic() ? x.hi() : x.hi() - 1;
  for (int n = x.lo(); n <= last; ++n) diffs.push_back(sign(cat, k, x.differential(n)));
  if (x.is_periodic()) return ChainComplex::periodic(cat, x.lo() - k, std::move(objects), std::move(diffs));
  return ChainComplex::bounded(cat, x.lo() - k, std::move(objects), std::move(diffs));
}

ChainMap translate(const ExactCategory& cat, const ChainMap& f, int k) {
  std::map<int, Morphism> c;
  for (int n : common_degrees(f.source(), f.target())) c.emplace(n - k, f.component(n));
  return ChainMap(cat, translate(cat, f.source(), k), translate(cat, f.target(), k), std::move(c));
}

ChainComplex direct_sum(const ExactCategory& cat, const ChainComplex& x, const ChainComplex& y) {
  const std::vector<int> degrees = common_degrees(x, y);
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  for (int n : degrees) objects.push_back(cat.biproduct(x.object(n), y.object(n)).sum);
  if (degrees.empty()) return ChainComplex();
  const bool periodic = x.is_periodic() || y.is_periodic();
  for (std::size_t i = 0; i + (periodic ? 0 : 1) < degrees.size(); ++i) {
    const int n = degrees[i];
    diffs.push_back(direct_sum_map(cat, x.differential(n), y.differential(n)));
  }
  if (periodic) return ChainComplex::periodic(cat, degrees.front(), std::move(objects), std::move(diffs));
  return ChainComplex::bounded(cat, degrees.front(), std::move(objects), std::move(diffs));
}

ChainComplex mapping_cone(const ExactCategory& cat, const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const bool periodic = a.is_periodic() || b.is_periodic();
  int lo = 0;
  int hi = -1;
  if (periodic) {
    const std::vector<int> d = common_degrees(a, b);
    lo = d.front();
    hi = d.back();
  } else {
    bool first = true;
    auto widen = [&](int l, int h) {
      lo = first ? l : std::min(lo, l);
      hi = first ? h : std::max(hi, h);
      first = false;
    };
    if (!a.empty()) widen(a.lo() - 1, a.hi() - 1);
    if (!b.empty()) widen(b.lo(), b.hi());
    if (first) return ChainComplex();
  }
  std::vector<Object> objects;
  std::vector<Morphism> diffs;
  for (int n = lo; n <= hi; ++n) objects.push_back(cat.biproduct(a.object(n + 1), b.object(n)).sum);
  for (int n = lo; n <= (periodic ? hi : hi - 1); ++n) {
    diffs.push_back(cat.matrix_morphism(
        {a.object(n + 1), b.object(n)}, {a.object(n + 2), b.object(n + 1)},
        {{cat.negate(a.differential(n + 1)), cat.zero(b.object(n), a.object(n + 2))},
         {f.component(n + 1), b.differential(n)}}));
  }
  if (periodic) return ChainComplex::periodic(cat, lo, std::move(objects), std::move(diffs));
  return ChainComplex::bounded(cat, lo, std::move(objects), std::move(diffs));
}

StrictTriangle strict_triangle(const ExactCategory& cat, const ChainMap& f) {
  const ChainComplex cone = mapping_cone(cat, f);
  const ChainComplex shifted = translate(cat, f.source(), 1);
  std::map<int, Morphism> i;
  std::map<int, Morphism> j;
  for (int n : common_degrees(f.target(), cone)) {
    const Biproduct s = cat.biproduct(f.source().object(n + 1), f.target().object(n));
    i.emplace(n, s.inject_second);
    j.emplace(n, s.project_first);
  }
  return StrictTriangle{f, ChainMap(cat, f.target(), cone, std::move(i)), ChainMap(cat, cone, shifted, std::move(j))};
}

bool is_homotopy(const ExactCategory& cat, const ChainMap& f, const ChainHomotopy& h) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  for (int n : common_degrees(a, b)) {
    const Morphism sum = cat.add(cat.compose(b.differential(n - 1), h.component(n)),
                                 cat.compose(h.component(n + 1), a.differential(n)));
    if (!commutes(cat, sum, f.component(n))) return false;
  }
  return true;
}

std::optional<ChainHomotopy> find_null_homotopy(const ExactCategory& cat, const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  std::vector<int> degrees = common_degrees(a, b);
  if (!a.is_periodic() && !degrees.empty()) degrees.push_back(degrees.back() + 1);

  // One unknown per nonzero block h^n : A^n -> B^{n-1}.
  LinearSystem sys;
  std::map<int, std::size_t> index;
  for (int n : degrees) {
    const int key = map_key(a, b, n);
    if (index.count(key) || a.object(n).generators() == 0 || b.object(n - 1).generators() == 0) continue;
    index.emplace(key, sys.unknowns.size());
    sys.unknowns.push_back(Unknown{a.object(n), b.object(n - 1)});
  }
  auto unknown = [&](int n) -> std::optional<std::size_t> {
    auto it = index.find(map_key(a, b, n));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (int n : common_degrees(a, b)) {
    LinearEquation eq{{}, f.component(n)};
    if (auto u = unknown(n)) eq.terms.push_back(LinearTerm{*u, b.differential(n - 1), std::nullopt, 1});
    if (auto u = unknown(n + 1)) eq.terms.push_back(LinearTerm{*u, std::nullopt, a.differential(n), 1});
    if (eq.terms.empty()) {
      if (!is_zero_morphism(cat, eq.rhs)) return std::nullopt;
      continue;
    }
    sys.equations.push_back(std::move(eq));
  }

  std::map<int, Morphism> components;
  if (!sys.equations.empty()) {
    auto sol = cat.solve(sys);
    if (!sol) return std::nullopt;
    for (const auto& [n, u] : index) components.emplace(n, sol->values[u]);
  }
  ChainHomotopy h(a, b, std::move(components));
  if (!is_homotopy(cat, f, h)) throw ConstructionFailure("find_null_homotopy: solver returned a non-homotopy");
  return h;
}

std::optional<ChainHomotopy> find_contraction(const ExactCategory& cat, const ChainComplex& x) {
  return find_null_homotopy(cat, identity_map(cat, x));
}

ChainMap cone_section(const ExactCategory& cat, const ChainMap& f, const ChainHomotopy& h) {
  if (!is_homotopy(cat, f, h)) throw PreconditionError("cone_section", "not a null homotopy of the chain map");
  const ChainComplex cone = mapping_cone(cat, f);
  const ChainComplex shifted = translate(cat, f.source(), 1);
  std::map<int, Morphism> c;
  for (int n : common_degrees(shifted, cone))
    c.emplace(n, pair_into(cat, cat.identity(f.source().object(n + 1)), cat.negate(h.component(n + 1))));
  return ChainMap(cat, shifted, cone, std::move(c));
}

ChainMap factor_through_cone(const ExactCategory& cat, const ChainMap& f, const ChainMap& g, const ChainHomotopy& h) {
  if (!is_homotopy(cat, compose(cat, g, f), h))
    throw PreconditionError("factor_through_cone", "not a null homotopy of the composite");
  const ChainComplex cone = mapping_cone(cat, f);
  std::map<int, Morphism> c;
  for (int n : common_degrees(cone, g.target())) c.emplace(n, copair_from(cat, h.component(n + 1), g.component(n)));
  return ChainMap(cat, cone, g.target(), std::move(c));
}

}  // namespace exact
