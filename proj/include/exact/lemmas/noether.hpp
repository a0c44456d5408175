#pragma once

#include <optional>

#include "exact/core/constructions.hpp"

namespace exact {

// For A >-> B >-> C: the sequence B/A >-> C/A ->> C/B with the three quotient maps.
struct NoetherResult {
  ShortExactSequence column;
  Morphism quotient_inner;      // B ->> B/A
  Morphism quotient_composite;  // C ->> C/A
  Morphism quotient_outer;      // C ->> C/B
};

NoetherResult noether_third_column(const ExactCategory& cat, const Morphism& inner, const Morphism& outer);

struct GridRow {
  Morphism first;
  Morphism second;
};

// Three short exact columns and up to three rows, indexed top to bottom.
struct ThreeByThree {
  ShortExactSequence left;
  ShortExactSequence middle;
  ShortExactSequence right;
  std::optional<GridRow> top;
  std::optional<GridRow> center;
  std::optional<GridRow> bottom;
};

enum class MissingRow { Top, Middle, Bottom };

struct ThreeByThreeResult {
  GridRow row;
  bool short_exact;
};

// Top and Bottom: the two other rows are short exact and the missing arrows are
// induced. Middle: the outer rows are short exact and the supplied middle
// arrows compose to zero; the result restates them.
ThreeByThreeResult three_by_three(const ExactCategory& cat, const ThreeByThree& grid, MissingRow missing);

}  // namespace exact
