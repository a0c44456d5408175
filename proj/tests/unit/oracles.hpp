#pragma once

// Brute-force reference computations used as independent oracles.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "exact/core/object.hpp"
#include "exact/linalg/int_matrix.hpp"
#include "exact/util/random.hpp"

namespace oracle {

using exact::Integer;
using exact::IntMatrix;

// Cofactor expansion; only for small square matrices.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Integer minor = determinant(m.select_rows(rows).select_columns(cols));
    det += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// gcd of all k x k minors (the k-th determinantal divisor).
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      Integer d = determinant(m.select_rows(rows).select_columns(cols));
      g = exact::gcd(g, d);
    });
  });
  return g;
}

// Invariant factors from determinantal divisors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer dk = determinantal_divisor(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline IntMatrix random_matrix(exact::Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-bound, bound));
  return m;
}

// A finite group with diagonal relations d_1, ..., d_n, enumerated as the box
// of residue tuples. Only objects of that shape are supported.
struct FiniteGroup {
  std::vector<long> moduli;

  static std::optional<FiniteGroup> of(const exact::Object& a) {
    const IntMatrix& r = a.relations();
    FiniteGroup g;
    for (std::size_t i = 0; i < a.generators(); ++i) {
      long d = 0;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (r(i, j) == 0) continue;
        if (d != 0 || j != i) return std::nullopt;
        d = std::labs(r(i, j).get_si());
      }
      if (d == 0) return std::nullopt;
      g.moduli.push_back(d);
    }
    return g;
  }

  long order() const {
    long n = 1;
    for (long d : moduli) n *= d;
    return n;
  }

  std::vector<long> element(long index) const {
    std::vector<long> v;
    for (long d : moduli) {
      v.push_back(index % d);
      index /= d;
    }
    return v;
  }

  long index(const std::vector<long>& v) const {
    long idx = 0;
    for (std::size_t i = moduli.size(); i-- > 0;) idx = idx * moduli[i] + ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
    return idx;
  }
};

// Images of every element of the domain, as indices into the codomain.
inline std::vector<long> element_map(const exact::Morphism& f) {
  auto dom = FiniteGroup::of(f.domain());
  auto cod = FiniteGroup::of(f.codomain());
  if (!dom || !cod) throw std::invalid_argument("element_map: objects are not finite diagonal");
  std::vector<long> images;
  for (long x = 0; x < dom->order(); ++x) {
    std::vector<long> v = dom->element(x);
    std::vector<long> w(cod->moduli.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) w[i] += f.matrix()(i, j).get_si() * v[j];
    images.push_back(cod->index(w));
  }
  return images;
}

inline std::set<long> image_set(const exact::Morphism& f) {
  auto m = element_map(f);
  return {m.begin(), m.end()};
}

inline std::set<long> kernel_set(const exact::Morphism& f) {
  std::set<long> k;
  auto m = element_map(f);
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] == 0) k.insert(static_cast<long>(x));
  return k;
}

// Exactness of X -u-> Y -v-> Z at Y by enumeration.
inline bool exact_at(const exact::Morphism& u, const exact::Morphism& v) { return image_set(u) == kernel_set(v); }

// Elements x of Z/n with m x = 0.
inline long torsion_count(long m, long n) {
  long count = 0;
  for (long x = 0; x < n; ++x)
    if ((m * x) % n == 0) ++count;
  return count;
}

// Order of (Z/n) / m(Z/n).
inline long cokernel_order(long m, long n) {
  std::set<long> image;
  for (long x = 0; x < n; ++x) image.insert((m * x) % n);
  return n / static_cast<long>(image.size());
}

// |Hom(A, B)| for finite diagonal groups: each generator of A goes to an
// element of B killed by its modulus.
inline long hom_count(const FiniteGroup& a, const FiniteGroup& b) {
  long total = 1;
  for (long d : a.moduli) {
    long count = 0;
    for (long y = 0; y < b.order(); ++y) {
      std::vector<long> v = b.element(y);
      bool killed = true;
      for (std::size_t i = 0; i < v.size(); ++i) killed = killed && (d * v[i]) % b.moduli[i] == 0;
      if (killed) ++count;
    }
    total *= count;
  }
  return total;
}

// |A (x) B| for finite diagonal groups, summand by summand.
inline long tensor_order(const FiniteGroup& a, const FiniteGroup& b) {
  long total = 1;
  for (long d : a.moduli)
    for (long e : b.moduli) total *= cokernel_order(d, e);
  return total;
}

}  // namespace oracle
