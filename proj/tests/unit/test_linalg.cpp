#include "doctest.h"
#include "oracles.hpp"

#include "exact/linalg/lattice.hpp"
#include "exact/linalg/normal_forms.hpp"
#include "exact/linalg/prime_field.hpp"

using namespace exact;

namespace {

void check_smith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(s.left * a * s.right == s.diagonal);
  CHECK(s.left * s.left_inverse == IntMatrix::identity(a.rows()));
  CHECK(abs(oracle::determinant(s.right)) == 1);
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
      if (i != j) CHECK(s.diagonal(i, j) == 0);
  for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
  for (const auto& d : s.invariants) CHECK(d > 0);
  CHECK(s.invariants == oracle::invariant_factors(a));
}

}  // namespace

TEST_CASE("smith normal form of small fixed matrices") {
  SmithForm id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.diagonal == IntMatrix::identity(2));

  SmithForm d23 = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(d23.diagonal == IntMatrix{{1, 0}, {0, 6}});

  SmithForm row = smith_normal_form(IntMatrix{{4, 6}});
  CHECK(row.diagonal == IntMatrix{{2, 0}});
  check_smith(IntMatrix{{4, 6}});
}

TEST_CASE("smith normal form of empty matrices") {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {2, 0}}) {
    SmithForm s = smith_normal_form(IntMatrix(r, c));
    CHECK(s.rank == 0);
    CHECK(s.left.rows() == r);
    CHECK(s.right.rows() == c);
  }
}

TEST_CASE("smith normal form matches determinantal divisors on random matrices") {
  Rng rng(20240601);
  for (int iter = 0; iter < 300; ++iter) {
    const auto rows = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(0, 4));
    check_smith(oracle::random_matrix(rng, rows, cols, 9));
  }
}

TEST_CASE("smith normal form is deterministic") {
  Rng rng(7);
  IntMatrix a = oracle::random_matrix(rng, 4, 5, 20);
  SmithForm s1 = smith_normal_form(a);
  SmithForm s2 = smith_normal_form(a);
  CHECK(s1.left == s2.left);
  CHECK(s1.right == s2.right);
}

TEST_CASE("column hermite form") {
  Rng rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = oracle::random_matrix(rng, rng.index(5), rng.index(5), 9);
    ColumnHermite h = column_hermite(a);
    CHECK(a * h.transform == h.form);
    CHECK(abs(oracle::determinant(h.transform)) == 1);
    for (std::size_t j = 0; j < h.rank; ++j) {
      const std::size_t p = h.pivot_rows[j];
      CHECK(h.form(p, j) > 0);
      for (std::size_t i = 0; i < p; ++i) CHECK(h.form(i, j) == 0);
      for (std::size_t c = 0; c < j; ++c) {
        CHECK(h.form(p, c) >= 0);
        CHECK(h.form(p, c) < h.form(p, j));
      }
    }
    for (std::size_t j = h.rank; j < a.cols(); ++j) CHECK(h.form.column(j).is_zero());
  }
}

TEST_CASE("solve_integer examples") {
  auto x = solve_integer(IntMatrix{{2}}, IntMatrix{{4}});
  REQUIRE(x);
  CHECK(*x == IntMatrix{{2}});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, IntMatrix{{3}}));
  auto y = solve_integer(IntMatrix{{2, 3}}, IntMatrix{{1}});
  REQUIRE(y);
  CHECK(IntMatrix{{2, 3}} * *y == IntMatrix{{1}});
  auto e = solve_integer(IntMatrix(0, 2), IntMatrix(0, 1));
  REQUIRE(e);
  CHECK(e->rows() == 2);
}

TEST_CASE("solve_integer agrees with the determinantal solvability criterion") {
  // A x = b is solvable over Z iff A and [A | b] share rank and the gcd of
  // their maximal nonvanishing minors.
  Rng rng(4242);
  int solvable = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t rows = 1 + rng.index(3);
    const std::size_t cols = 1 + rng.index(3);
    IntMatrix a = oracle::random_matrix(rng, rows, cols, 6);
    IntMatrix b = oracle::random_matrix(rng, rows, 1, 6);
    auto fa = oracle::invariant_factors(a);
    auto fab = oracle::invariant_factors(hstack(a, b));
    bool expected = false;
    if (fa.size() == fab.size()) {
      Integer pa = 1, pab = 1;
      for (auto& v : fa) pa *= v;
      for (auto& v : fab) pab *= v;
      expected = (pa == pab);
    }
    auto x = solve_integer(a, b);
    CHECK(x.has_value() == expected);
    if (x) {
      CHECK(a * *x == b);
      ++solvable;
    }
  }
  CHECK(solvable > 20);
}

TEST_CASE("integer kernel is saturated and annihilated") {
  Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = oracle::random_matrix(rng, rng.index(4), 1 + rng.index(4), 5);
    IntMatrix k = integer_kernel(a);
    CHECK((a * k).is_zero());
    // saturated: the kernel basis has trivial invariant factors
    for (const auto& d : invariant_factors(k)) CHECK(d == 1);
  }
}

TEST_CASE("solve_mod_lattice examples") {
  auto s = solve_mod_lattice(IntMatrix{{1}}, IntMatrix{{5}}, IntMatrix{{3}});
  REQUIRE(s);
  CHECK(IntMatrix{{1}} * s->x + IntMatrix{{3}} * s->witness == IntMatrix{{5}});
  CHECK(mod_floor(s->x(0, 0), 3) == 2);
  CHECK_FALSE(solve_mod_lattice(IntMatrix{{2}}, IntMatrix{{1}}, IntMatrix{{4}}));
  auto z = solve_mod_lattice(IntMatrix{{0}}, IntMatrix{{0}}, IntMatrix(1, 0));
  REQUIRE(z);
  CHECK(z->x == IntMatrix{{0}});
}

TEST_CASE("lattice membership and canonical reduction") {
  CHECK(lattice_membership(IntMatrix{{6}, {4}}, IntMatrix{{2, 0}, {0, 4}}));
  CHECK_FALSE(lattice_membership(IntMatrix{{6}, {2}}, IntMatrix{{2, 0}, {0, 4}}));
  Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix g = oracle::random_matrix(rng, 3, rng.index(4), 6);
    Lattice l(g);
    IntMatrix c = oracle::random_matrix(rng, g.cols(), 1, 5);
    IntMatrix v = g * c;
    CHECK(l.contains(v));
    IntMatrix w = oracle::random_matrix(rng, 3, 1, 5);
    CHECK(l.reduce(w + v) == l.reduce(w));
    CHECK(l.contains(w - l.reduce(w)));
  }
}

TEST_CASE("prime field elimination") {
  PrimeField f(5);
  CHECK(f.rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(f.rank(IntMatrix{{1, 2}, {3, 1}}) == 1);
  IntMatrix n = f.nullspace(IntMatrix{{1, 2}, {3, 1}});
  CHECK(n.cols() == 1);
  CHECK(f.reduce(IntMatrix{{1, 2}, {3, 1}} * n).is_zero());
  auto x = f.solve(IntMatrix{{2}}, IntMatrix{{1}});
  REQUIRE(x);
  CHECK(f.reduce(IntMatrix{{2}} * *x) == IntMatrix{{1}});
  CHECK_THROWS(PrimeField(6));
  CHECK(f.inverse(3) == 2);

  Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix a = oracle::random_matrix(rng, 1 + rng.index(4), 1 + rng.index(4), 9);
    IntMatrix ns = f.nullspace(a);
    CHECK(f.reduce(a * ns).is_zero());
    CHECK(ns.cols() + f.rank(a) == a.cols());
  }
}
