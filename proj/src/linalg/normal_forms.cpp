#include "exact/linalg/normal_forms.hpp"

#include <optional>
#include <utility>

namespace exact {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t r0, std::size_t r1,
                                         std::size_t c0, std::size_t c1) {
  std::optional<Position> best;
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) {
      const Integer& v = d(i, j);
      if (v == 0) continue;
      if (!best || mpz_cmpabs(v.get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  return best;
}

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& a, bool track)
      : d_(a), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(a.rows());
      u_inv_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
    }
  }

  void run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    while (t < m && t < n) {
      auto pivot = smallest_nonzero(d_, t, m, t, n);
      if (!pivot) break;
      swap_rows(t, pivot->row);
      swap_cols(t, pivot->col);
      clear_cross(t);
      if (d_(t, t) < 0) negate_row(t);
      ++t;
    }
    rank_ = t;
    enforce_divisibility();
  }

  SmithForm result() && {
    SmithForm out;
    out.rank = rank_;
    for (std::size_t i = 0; i < rank_; ++i) out.invariants.push_back(d_(i, i));
    out.diagonal = std::move(d_);
    out.left = std::move(u_);
    out.left_inverse = std::move(u_inv_);
    out.right = std::move(v_);
    return out;
  }

  std::vector<Integer> invariants() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank_; ++i) out.push_back(d_(i, i));
    return out;
  }

 private:
  void clear_cross(std::size_t t) {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d_(i, t) == 0) continue;
        add_row(i, t, -floor_div(d_(i, t), d_(t, t)));
        if (d_(i, t) != 0) clean = false;
      }
      if (!clean) {
        auto p = smallest_nonzero(d_, t, m, t, t + 1);
        swap_rows(t, p->row);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d_(t, j) == 0) continue;
        add_col(j, t, -floor_div(d_(t, j), d_(t, t)));
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) {
        auto p = smallest_nonzero(d_, t, t + 1, t, n);
        swap_cols(t, p->col);
        continue;
      }
      return;
    }
  }

  void enforce_divisibility() {
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = i + 1; j < rank_; ++j) {
        const Integer a = d_(i, i);
        const Integer b = d_(j, j);
        if (b % a == 0) continue;
        const ExtendedGcd eg = extended_gcd(a, b);
        const Integer& g = eg.gcd;
        const Integer ag = a / g;
        const Integer bg = b / g;
        // Rows: [s t; -b/g a/g], columns: [1 -t*b/g; 1 s*a/g].
        if (track_) {
          for (std::size_t k = 0; k < u_.cols(); ++k) {
            Integer ri = eg.x * u_(i, k) + eg.y * u_(j, k);
            Integer rj = -bg * u_(i, k) + ag * u_(j, k);
            u_(i, k) = std::move(ri);
            u_(j, k) = std::move(rj);
          }
          for (std::size_t k = 0; k < u_inv_.rows(); ++k) {
            Integer ci = ag * u_inv_(k, i) + bg * u_inv_(k, j);
            Integer cj = -eg.y * u_inv_(k, i) + eg.x * u_inv_(k, j);
            u_inv_(k, i) = std::move(ci);
            u_inv_(k, j) = std::move(cj);
          }
          for (std::size_t k = 0; k < v_.rows(); ++k) {
            Integer ci = v_(k, i) + v_(k, j);
            Integer cj = -eg.y * bg * v_(k, i) + eg.x * ag * v_(k, j);
            v_(k, i) = std::move(ci);
            v_(k, j) = std::move(cj);
          }
        }
        d_(i, i) = g;
        d_(j, j) = a * bg;
      }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_rows(a, b);
    if (track_) {
      u_.swap_rows(a, b);
      u_inv_.swap_cols(a, b);
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    d_.add_row_multiple(target, source, f);
    if (track_) {
      u_.add_row_multiple(target, source, f);
      u_inv_.add_col_multiple(source, target, -f);
    }
  }
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    d_.add_col_multiple(target, source, f);
    if (track_) v_.add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t i) {
    d_.negate_row(i);
    if (track_) {
      u_.negate_row(i);
      u_inv_.negate_col(i);
    }
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix u_inv_;
  IntMatrix v_;
  bool track_;
  std::size_t rank_ = 0;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithReducer r(a, true);
  r.run();
  return std::move(r).result();
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  SmithReducer r(a, false);
  r.run();
  return r.invariants();
}

ColumnHermite column_hermite(const IntMatrix& a, bool track_transform) {
  ColumnHermite out;
  out.form = a;
  IntMatrix& h = out.form;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (track_transform) out.transform = IntMatrix::identity(n);
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& f) {
    h.add_col_multiple(target, source, f);
    if (track_transform) out.transform.add_col_multiple(target, source, f);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    h.swap_cols(x, y);
    if (track_transform) out.transform.swap_cols(x, y);
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    bool found = false;
    for (;;) {
      auto p = smallest_nonzero(h, i, i + 1, r, n);
      if (!p) break;
      found = true;
      col_swap(r, p->col);
      bool clean = true;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (h(i, c) == 0) continue;
        col_op(c, r, -floor_div(h(i, c), h(i, r)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(i, r) < 0) {
      h.negate_col(r);
      if (track_transform) out.transform.negate_col(r);
    }
    for (std::size_t c = 0; c < r; ++c) {
      if (h(i, c) == 0) continue;
      col_op(c, r, -floor_div(h(i, c), h(i, r)));
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace exact
