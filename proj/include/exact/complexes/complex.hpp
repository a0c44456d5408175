#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exact/core/constructions.hpp"

namespace exact {

// Cochain complex A^n -d^n-> A^{n+1}. A bounded complex carries objects on the
// window [lo, hi] and is zero outside it. A periodic complex repeats its window:
// degree n is identified with lo + ((n - lo) mod size), and the last
// differential feeds back into A^lo. Immutable.
class ChainComplex {
 public:
  ChainComplex() = default;

  // Validates objects, differential shapes and d o d == 0; throws InvalidInput.
  // `differentials` has objects.size() - 1 entries (d^lo .. d^{hi-1}).
  static ChainComplex bounded(const ExactCategory& cat, int lo, std::vector<Object> objects,
                              std::vector<Morphism> differentials);
  // `differentials` has objects.size() entries; the last one is A^hi -> A^lo.
  static ChainComplex periodic(const ExactCategory& cat, int lo, std::vector<Object> objects,
                               std::vector<Morphism> differentials);
  static ChainComplex concentrated(const ExactCategory& cat, const Object& a, int degree);

  bool is_periodic() const { return periodic_; }
  bool empty() const { return objects_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
  std::size_t size() const { return objects_.size(); }
  // The window degrees: every object that can be nonzero appears once.
  std::vector<int> degrees() const;
  bool in_window(int n) const;
  // Representative of n in the window for periodic complexes; n otherwise.
  int canonical_degree(int n) const;

  Object object(int n) const;
  Morphism differential(int n) const;  // A^n -> A^{n+1}

 private:
  ChainComplex(bool periodic, int lo, std::vector<Object> objects, std::vector<Morphism> differentials);
  void validate(const ExactCategory& cat) const;

  bool periodic_ = false;
  int lo_ = 0;
  std::vector<Object> objects_;
  std::vector<Morphism> differentials_;
};

// Degrees on which maps between the two complexes can be nonzero. Throws
// InvalidInput if one is periodic and the other is not (and not empty), or if
// the periods differ.
std::vector<int> common_degrees(const ChainComplex& a, const ChainComplex& b);

// Zero matrix between two objects, valid in every model.
Morphism zero_between(const Object& dom, const Object& cod);

class ChainMap {
 public:
  // Components not listed are zero. Throws InvalidInput unless each component
  // is well typed and d_B^n o f^n == f^{n+1} o d_A^n for all n.
  ChainMap(const ExactCategory& cat, ChainComplex source, ChainComplex target, std::map<int, Morphism> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  Morphism component(int n) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, Morphism> components_;
};

// h^n : A^n -> B^{n-1}.
class ChainHomotopy {
 public:
  ChainHomotopy(ChainComplex source, ChainComplex target, std::map<int, Morphism> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  Morphism component(int n) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, Morphism> components_;
};

ChainMap identity_map(const ExactCategory& cat, const ChainComplex& x);
ChainMap zero_map(const ExactCategory& cat, const ChainComplex& x, const ChainComplex& y);
ChainMap compose(const ExactCategory& cat, const ChainMap& g, const ChainMap& f);
ChainMap add(const ExactCategory& cat, const ChainMap& f, const ChainMap& g);
ChainMap negate(const ExactCategory& cat, const ChainMap& f);
bool equal(const ExactCategory& cat, const ChainMap& f, const ChainMap& g);
bool is_chain_iso(const ExactCategory& cat, const ChainMap& f);

// (Sigma^k X)^n = X^{n+k} with differential (-1)^k d^{n+k}.
ChainComplex translate(const ExactCategory& cat, const ChainComplex& x, int k);
ChainMap translate(const ExactCategory& cat, const ChainMap& f, int k);

ChainComplex direct_sum(const ExactCategory& cat, const ChainComplex& x, const ChainComplex& y);

// cone(f)^n = A^{n+1} + B^n with differential (-d_A^{n+1} 0 ; f^{n+1} d_B^n).
ChainComplex mapping_cone(const ExactCategory& cat, const ChainMap& f);

// A -f-> B -i-> cone(f) -j-> Sigma A with i = (0 1)^T and j = (1 0).
struct StrictTriangle {
  ChainMap f;
  ChainMap i;
  ChainMap j;
};

StrictTriangle strict_triangle(const ExactCategory& cat, const ChainMap& f);

// f^n == d_B^{n-1} h^n + h^{n+1} d_A^n in every degree.
bool is_homotopy(const ExactCategory& cat, const ChainMap& f, const ChainHomotopy& h);

// Solves all components h^n as one linear system over the model; absence means
// no homotopy exists.
std::optional<ChainHomotopy> find_null_homotopy(const ExactCategory& cat, const ChainMap& f);
std::optional<ChainHomotopy> find_contraction(const ExactCategory& cat, const ChainComplex& x);

// Given a null homotopy h of f, the chain map Sigma A -> cone(f) with
// components (1, -h^{n+1})^T, a section of j.
ChainMap cone_section(const ExactCategory& cat, const ChainMap& f, const ChainHomotopy& h);

// Given g : B -> C and a null homotopy h of g o f, the chain map
// u : cone(f) -> C with components (h^{n+1} g^n), so that u o i == g.
ChainMap factor_through_cone(const ExactCategory& cat, const ChainMap& f, const ChainMap& g,
                             const ChainHomotopy& h);

}  // namespace exact
