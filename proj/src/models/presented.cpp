#include "exact/models/presented.hpp"

#include "exact/core/errors.hpp"
#include "exact/linalg/normal_forms.hpp"

namespace exact {

CanonicalPresentation canonicalize(const Object& a) {
  const std::size_t n = a.generators();
  SmithForm s = smith_normal_form(a.relations());
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s.rank) {
      if (s.invariants[i] == 1) continue;
      torsion.push_back(s.invariants[i]);
    }
    kept.push_back(i);
  }
  const std::size_t k = kept.size();
  IntMatrix rel(k, torsion.size());
  for (std::size_t c = 0; c < torsion.size(); ++c) rel(c, c) = torsion[c];
  Object canon(rel);

  IntMatrix to = s.left.select_rows(kept);
  for (std::size_t c = 0; c < torsion.size(); ++c)
    for (std::size_t j = 0; j < to.cols(); ++j) to(c, j) = mod_floor(to(c, j), torsion[c]);
  IntMatrix from = a.relation_lattice().reduce(s.left_inverse.select_columns(kept));

  CanonicalPresentation out{canon, Morphism(a, canon, std::move(to)), Morphism(canon, a, std::move(from)),
                            std::move(torsion), k - rel.cols()};
  return out;
}

IsoInvariants presented_invariants(const Object& a) {
  IsoInvariants inv;
  std::size_t rank = 0;
  for (const auto& d : invariant_factors(a.relations())) {
    ++rank;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = a.generators() - rank;
  return inv;
}

Morphism reduce_modulo_relations(const Morphism& f) {
  if (!f.codomain().has_relations()) return f;
  return Morphism(f.domain(), f.codomain(), f.codomain().relation_lattice().reduce(f.matrix()));
}

bool presented_well_defined(const Morphism& f) {
  if (!f.domain().has_relations()) return true;
  return f.codomain().relation_lattice().contains_columns(f.matrix() * f.domain().relations());
}

bool presented_equal(const Morphism& f, const Morphism& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
  IntMatrix diff = f.matrix() - g.matrix();
  if (!f.codomain().has_relations()) return diff.is_zero();
  return f.codomain().relation_lattice().contains_columns(diff);
}

Morphism abelian_kernel(const Morphism& f) {
  const Object& a = f.domain();
  const Object& b = f.codomain();
  const std::size_t na = a.generators();
  IntMatrix kernel_basis = integer_kernel(hstack(f.matrix(), b.relations()));
  Lattice preimage(kernel_basis.block(0, 0, na, kernel_basis.cols()));
  auto rel = preimage.coordinates(a.relations());
  if (!rel) throw Error("abelian_kernel: domain relations outside the preimage lattice");
  CanonicalPresentation canon = canonicalize(Object(*rel));
  return reduce_modulo_relations(
      Morphism(canon.object, a, preimage.basis() * canon.from_canonical.matrix()));
}

Morphism abelian_cokernel(const Morphism& f) {
  const Object& b = f.codomain();
  CanonicalPresentation canon = canonicalize(Object(hstack(b.relations(), f.matrix())));
  return Morphism(b, canon.object, canon.to_canonical.matrix());
}

namespace {

IntMatrix scaled_left(const LinearTerm& t, std::size_t codim) {
  IntMatrix l = t.left ? t.left->matrix() : IntMatrix::identity(codim);
  if (t.scale != 1) l *= t.scale;
  return l;
}

std::optional<SystemSolution> try_single_term(const LinearSystem& sys) {
  if (sys.want_homogeneous || sys.unknowns.size() != 1 || sys.equations.size() != 1) return std::nullopt;
  const LinearEquation& eq = sys.equations[0];
  if (eq.terms.size() != 1) return std::nullopt;
  const LinearTerm& t = eq.terms[0];
  const Unknown& u = sys.unknowns[0];
  const Object& target = eq.rhs.codomain();

  if (!t.right) {
    // left o H == rhs, solved one column at a time.
    IntMatrix l = scaled_left(t, u.codomain.generators());
    auto sol = solve_mod_lattice(l, eq.rhs.matrix(), target.relations());
    if (!sol) return SystemSolution{};  // infeasible: empty values signals failure
    Morphism h(u.domain, u.codomain, std::move(sol->x));
    if (!presented_well_defined(h)) return std::nullopt;
    return SystemSolution{{reduce_modulo_relations(h)}, {}};
  }
  if (!t.left && t.scale == 1) {
    // H o right == rhs through a generator-level section of `right`.
    const Morphism& e = *t.right;
    const Object& q = e.codomain();
    auto section = solve_mod_lattice(e.matrix(), IntMatrix::identity(q.generators()), q.relations());
    if (!section) return std::nullopt;
    Morphism h(u.domain, u.codomain, eq.rhs.matrix() * section->x);
    if (!presented_well_defined(h)) return std::nullopt;
    if (!presented_equal(Morphism(e.domain(), target, h.matrix() * e.matrix()), eq.rhs)) return std::nullopt;
    return SystemSolution{{reduce_modulo_relations(h)}, {}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SystemSolution> solve_presented(const LinearSystem& sys) {
  for (const auto& eq : sys.equations)
    for (const auto& t : eq.terms) {
      if (t.unknown >= sys.unknowns.size()) throw InvalidInput("linear term refers to a missing unknown");
      const Unknown& u = sys.unknowns[t.unknown];
      const Object& tl_dom = t.left ? t.left->domain() : u.codomain;
      const Object& tl_cod = t.left ? t.left->codomain() : u.codomain;
      const Object& tr_dom = t.right ? t.right->domain() : u.domain;
      const Object& tr_cod = t.right ? t.right->codomain() : u.domain;
      if (tl_dom != u.codomain || tr_cod != u.domain || tl_cod != eq.rhs.codomain() ||
          tr_dom != eq.rhs.domain())
        throw InvalidInput("linear term does not match its equation");
    }

  if (auto fast = try_single_term(sys)) {
    if (fast->values.empty()) return std::nullopt;
    return fast;
  }

  // Variables: vec(H_u) for each unknown, then well-definedness witnesses, then
  // one relation witness block per equation.
  std::vector<std::size_t> h_offset, z_offset, w_offset;
  std::size_t cols = 0;
  for (const auto& u : sys.unknowns) {
    h_offset.push_back(cols);
    cols += u.codomain.generators() * u.domain.generators();
  }
  for (const auto& u : sys.unknowns) {
    z_offset.push_back(cols);
    if (u.domain.has_relations()) cols += u.codomain.relations().cols() * u.domain.relations().cols();
  }
  std::size_t rows = 0;
  std::vector<std::size_t> eq_row;
  for (const auto& eq : sys.equations) {
    w_offset.push_back(cols);
    cols += eq.rhs.domain().generators() * eq.rhs.codomain().relations().cols();
    eq_row.push_back(rows);
    rows += eq.rhs.domain().generators() * eq.rhs.codomain().generators();
  }
  std::vector<std::size_t> wd_row;
  for (const auto& u : sys.unknowns) {
    wd_row.push_back(rows);
    if (u.domain.has_relations()) rows += u.codomain.generators() * u.domain.relations().cols();
  }

  IntMatrix m(rows, cols);
  IntMatrix rhs(rows, 1);
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    const LinearEquation& eq = sys.equations[e];
    const std::size_t s = eq.rhs.domain().generators();
    const std::size_t tg = eq.rhs.codomain().generators();
    for (const auto& t : eq.terms) {
      const Unknown& u = sys.unknowns[t.unknown];
      IntMatrix l = scaled_left(t, u.codomain.generators());
      IntMatrix r = t.right ? t.right->matrix() : IntMatrix::identity(u.domain.generators());
      IntMatrix block = kronecker(r.transpose(), l);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          if (block(i, j) != 0) m(eq_row[e] + i, h_offset[t.unknown] + j) += block(i, j);
    }
    const IntMatrix& rt = eq.rhs.codomain().relations();
    IntMatrix witness = kronecker(IntMatrix::identity(s), rt);
    m.set_block(eq_row[e], w_offset[e], witness);
    IntMatrix v = eq.rhs.matrix().vec();
    for (std::size_t i = 0; i < s * tg; ++i) rhs(eq_row[e] + i, 0) = v(i, 0);
  }
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
    const Unknown& u = sys.unknowns[k];
    if (!u.domain.has_relations()) continue;
    const std::size_t c = u.codomain.generators();
    IntMatrix wd = kronecker(u.domain.relations().transpose(), IntMatrix::identity(c));
    m.set_block(wd_row[k], h_offset[k], wd);
    if (u.codomain.has_relations()) {
      IntMatrix z = -kronecker(IntMatrix::identity(u.domain.relations().cols()), u.codomain.relations());
      m.set_block(wd_row[k], z_offset[k], z);
    }
  }

  auto sol = solve_integer_full(m, rhs);
  if (!sol) return std::nullopt;
  SystemSolution out;
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
    const Unknown& u = sys.unknowns[k];
    const std::size_t c = u.codomain.generators();
    const std::size_t d = u.domain.generators();
    IntMatrix h = IntMatrix::unvec(sol->particular.block(h_offset[k], 0, c * d, 1), c, d);
    out.values.push_back(reduce_modulo_relations(Morphism(u.domain, u.codomain, std::move(h))));
  }
  if (sys.want_homogeneous) {
    for (std::size_t g = 0; g < sol->homogeneous.cols(); ++g) {
      std::vector<Morphism> gen;
      bool nonzero = false;
      for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
        const Unknown& u = sys.unknowns[k];
        const std::size_t c = u.codomain.generators();
        const std::size_t d = u.domain.generators();
        IntMatrix h = IntMatrix::unvec(sol->homogeneous.block(h_offset[k], g, c * d, 1), c, d);
        Morphism hm = reduce_modulo_relations(Morphism(u.domain, u.codomain, std::move(h)));
        if (!hm.matrix().is_zero()) nonzero = true;
        gen.push_back(std::move(hm));
      }
      if (nonzero) out.homogeneous.push_back(std::move(gen));
    }
  }
  return out;
}

UnimodularPair random_unimodular(Rng& rng, std::size_t n, int operations, long max_multiplier) {
  UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 0) return p;
  for (int op = 0; op < operations; ++op) {
    const std::size_t i = rng.index(n);
    const std::size_t j = rng.index(n);
    const auto kind = rng.uniform(0, 5);
    if (kind == 0) {
      p.forward.swap_rows(i, j);
      p.backward.swap_cols(i, j);
    } else if (kind == 1) {
      p.forward.negate_row(i);
      p.backward.negate_col(i);
    } else if (i != j) {
      Integer c = static_cast<long>(rng.uniform(-max_multiplier, max_multiplier));
      p.forward.add_row_multiple(i, j, c);
      p.backward.add_col_multiple(j, i, -c);
    }
  }
  return p;
}

bool PresentedModel::contains(const Object& a) const {
  return !a.has_idempotent() && accepts_presentation(a);
}

}  // namespace exact
