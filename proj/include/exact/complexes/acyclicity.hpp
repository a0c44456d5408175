#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact/complexes/complex.hpp"

namespace exact {

// Each differential d^{n-1} factors as A^{n-1} ->> Z^n >-> A^n, and each
// Z^n >-> A^n ->> Z^{n+1} is short exact. Degrees without stored data carry
// zero objects.
class AcyclicityCertificate {
 public:
  AcyclicityCertificate(ChainComplex complex, std::map<int, Factorization> factors);

  const ChainComplex& complex() const { return complex_; }
  Object cycles(int n) const;
  Morphism epic(int n) const;   // A^{n-1} ->> Z^n
  Morphism monic(int n) const;  // Z^n >-> A^n
  // Degrees n for which Z^n is stored.
  std::vector<int> degrees() const;

  bool verify(const ExactCategory& cat) const;

 private:
  ChainComplex complex_;
  std::map<int, Factorization> factors_;
};

// Certificate from the analyses of the differentials, or absence when some
// differential is not admissible or some cycle sequence is not short exact.
std::optional<AcyclicityCertificate> is_acyclic(const ExactCategory& cat, const ChainComplex& x);

struct Homology {
  Object object;
  Morphism cycles;      // ker d^n >-> A^n
  Morphism projection;  // ker d^n ->> H^n
};

// Abelian models only; throws UnsupportedOperation otherwise.
Homology homology(const ExactCategory& cat, const ChainComplex& x, int n);
Morphism homology_map(const ExactCategory& cat, const ChainMap& f, int n);

// Cone criterion; requires an idempotent complete model and throws
// PreconditionError otherwise.
bool is_quasi_iso(const ExactCategory& cat, const ChainMap& f);

// Long exact sequence H^n(C') -> H^n(C) -> H^n(C'') -> H^{n+1}(C') -> ... for
// n in [lo, hi], ending at H^hi(C''). Each degree C'^n -i-> C^n -p-> C''^n must
// be short exact; the connecting map lifts cycles through a section of p^n.
// Abelian models only.
struct HomologySequence {
  std::vector<Morphism> arrows;
  std::vector<std::string> labels;  // one per object, e.g. "H^0(C')"
};

HomologySequence homology_sequence(const ExactCategory& cat, const ChainMap& i, const ChainMap& p, int lo, int hi);

struct ConeAcyclicity {
  AcyclicityCertificate certificate;
  // Z^n B >-> Z^n C ->> Z^{n+1} A, indexed by n.
  std::map<int, ShortExactSequence> extensions;
  bool verified = false;
};

// Builds a certificate for the cone of a map between acyclic complexes from
// the factorizations of the induced morphisms of cycle sequences. Throws
// PreconditionError when an endpoint is not acyclic.
ConeAcyclicity check_cone_acyclic(const ExactCategory& cat, const ChainMap& f);

}  // namespace exact
