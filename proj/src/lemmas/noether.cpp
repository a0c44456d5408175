#include "exact/lemmas/noether.hpp"

#include "exact/core/errors.hpp"

namespace exact {

NoetherResult noether_third_column(const ExactCategory& cat, const Morphism& inner, const Morphism& outer) {
  if (!is_admissible_monic(cat, inner)) throw PreconditionError("noether_third_column", "first arrow is not an admissible monic");
  if (!is_admissible_monic(cat, outer)) throw PreconditionError("noether_third_column", "second arrow is not an admissible monic");
  if (inner.codomain() != outer.domain()) throw InvalidInput("noether_third_column: arrows are not composable");
  const Morphism q_inner = guaranteed(cat.cokernel(inner), "B ->> B/A");
  const Morphism q_composite = guaranteed(cat.cokernel(cat.compose(outer, inner)), "C ->> C/A");
  const Morphism q_outer = guaranteed(cat.cokernel(outer), "C ->> C/B");
  const Morphism mono = guaranteed(solve_right(cat, q_inner, cat.compose(q_composite, outer)), "B/A -> C/A");
  const Morphism epi = guaranteed(solve_right(cat, q_composite, q_outer), "C/A -> C/B");
  return NoetherResult{ShortExactSequence{mono, epi}, q_inner, q_composite, q_outer};
}

namespace {

void check_row(const GridRow& row, const Object& a, const Object& b, const Object& c,
               const char* which) {
  if (row.first.domain() != a || row.first.codomain() != b || row.second.domain() != b || row.second.codomain() != c)
    throw InvalidInput(std::string("three_by_three: ") + which + " row does not match the columns");
}

void check_upper_squares(const ExactCategory& cat, const ThreeByThree& g, const GridRow& top, const GridRow& center) {
  if (!commutes(cat, cat.compose(center.first, g.left.mono), cat.compose(g.middle.mono, top.first)) ||
      !commutes(cat, cat.compose(center.second, g.middle.mono), cat.compose(g.right.mono, top.second)))
    throw PreconditionError("three_by_three", "upper squares do not commute");
}

void check_lower_squares(const ExactCategory& cat, const ThreeByThree& g, const GridRow& center, const GridRow& bottom) {
  if (!commutes(cat, cat.compose(bottom.first, g.left.epi), cat.compose(g.middle.epi, center.first)) ||
      !commutes(cat, cat.compose(bottom.second, g.middle.epi), cat.compose(g.right.epi, center.second)))
    throw PreconditionError("three_by_three", "lower squares do not commute");
}

void require_exact_row(const ExactCategory& cat, const std::optional<GridRow>& row, const char* which) {
  if (!row) throw InvalidInput(std::string("three_by_three: ") + which + " row is required");
  if (!is_short_exact(cat, row->first, row->second))
    throw PreconditionError("three_by_three", std::string(which) + " row is not short exact");
}

}  // namespace

ThreeByThreeResult three_by_three(const ExactCategory& cat, const ThreeByThree& g, MissingRow missing) {
  for (const ShortExactSequence* column : {&g.left, &g.middle, &g.right})
    if (!is_short_exact(cat, *column)) throw PreconditionError("three_by_three", "a column is not short exact");
  if (g.top) check_row(*g.top, g.left.left(), g.middle.left(), g.right.left(), "top");
  if (g.center) check_row(*g.center, g.left.middle(), g.middle.middle(), g.right.middle(), "middle");
  if (g.bottom) check_row(*g.bottom, g.left.right(), g.middle.right(), g.right.right(), "bottom");

  GridRow row{g.left.mono, g.left.mono};
  switch (missing) {
    case MissingRow::Bottom: {
      require_exact_row(cat, g.top, "top");
      require_exact_row(cat, g.center, "middle");
      check_upper_squares(cat, g, *g.top, *g.center);
      row = GridRow{
          guaranteed(solve_right(cat, g.left.epi, cat.compose(g.middle.epi, g.center->first)), "A'' -> B''"),
          guaranteed(solve_right(cat, g.middle.epi, cat.compose(g.right.epi, g.center->second)), "B'' -> C''")};
      break;
    }
    case MissingRow::Top: {
      require_exact_row(cat, g.center, "middle");
      require_exact_row(cat, g.bottom, "bottom");
      check_lower_squares(cat, g, *g.center, *g.bottom);
      row = GridRow{
          guaranteed(solve_left(cat, g.middle.mono, cat.compose(g.center->first, g.left.mono)), "A' -> B'"),
          guaranteed(solve_left(cat, g.right.mono, cat.compose(g.center->second, g.middle.mono)), "B' -> C'")};
      break;
    }
    case MissingRow::Middle: {
      require_exact_row(cat, g.top, "top");
      require_exact_row(cat, g.bottom, "bottom");
      if (!g.center) throw InvalidInput("three_by_three: the middle arrows must be supplied");
      check_upper_squares(cat, g, *g.top, *g.center);
      check_lower_squares(cat, g, *g.center, *g.bottom);
      if (!is_zero_morphism(cat, cat.compose(g.center->second, g.center->first)))
        throw PreconditionError("three_by_three", "middle row does not compose to zero");
      row = *g.center;
      break;
    }
  }
  return ThreeByThreeResult{row, is_short_exact(cat, row.first, row.second)};
}

}  // namespace exact
