#pragma once

#include <optional>
#include <vector>

#include "exact/core/category.hpp"

namespace exact {

// h with left o h == rhs.
std::optional<Morphism> solve_left(const ExactCategory& cat, const Morphism& left, const Morphism& rhs);
// h with h o right == rhs.
std::optional<Morphism> solve_right(const ExactCategory& cat, const Morphism& right, const Morphism& rhs);

bool is_zero_object(const ExactCategory& cat, const Object& a);
bool is_zero_morphism(const ExactCategory& cat, const Morphism& f);
bool commutes(const ExactCategory& cat, const Morphism& lhs, const Morphism& rhs);

bool is_short_exact(const ExactCategory& cat, const Morphism& mono, const Morphism& epi);
bool is_short_exact(const ExactCategory& cat, const ShortExactSequence& s);
bool is_admissible_monic(const ExactCategory& cat, const Morphism& f);
bool is_admissible_epic(const ExactCategory& cat, const Morphism& f);
bool is_monic(const ExactCategory& cat, const Morphism& f);
bool is_epic(const ExactCategory& cat, const Morphism& f);

// f == image o coimage with (kernel, coimage) and (image, cokernel) admissible.
struct Analysis {
  Morphism kernel;
  Morphism coimage;
  Morphism image;
  Morphism cokernel;
};

std::optional<Analysis> analyze(const ExactCategory& cat, const Morphism& f);
bool is_admissible(const ExactCategory& cat, const Morphism& f);

// Exactness of X -u-> Y -v-> Z at Y: both arrows admissible and the image of u
// followed by the coimage of v is admissible.
bool is_exact_at(const ExactCategory& cat, const Morphism& u, const Morphism& v);

// Square A -mono-> B, A -along-> A', completed by B -> P <- A'.
struct Pushout {
  Object object;
  Morphism from_middle;  // B -> P, parallel to `along`
  Morphism from_target;  // A' -> P, parallel to `mono`, an admissible monic
  Morphism quotient;     // B + A' -> P, the cokernel of (mono, -along)
};

Pushout pushout_along_monic(const ExactCategory& cat, const Morphism& mono, const Morphism& along);
// The unique u : P -> T with u o p.from_middle == from_middle and
// u o p.from_target == from_target; absent if the cocone does not commute.
std::optional<Morphism> pushout_induced(const ExactCategory& cat, const Pushout& p,
                                        const Morphism& from_middle, const Morphism& from_target);

// Square B -epi-> C <-along- C', completed by B <- Q -> C'.
struct Pullback {
  Object object;
  Morphism to_middle;  // Q -> B, parallel to `along`
  Morphism to_source;  // Q -> C', parallel to `epi`, an admissible epic
  Morphism inclusion;  // Q -> B + C', the kernel of (epi, -along)
};

Pullback pullback_along_epic(const ExactCategory& cat, const Morphism& epi, const Morphism& along);
// The unique v : X -> Q with p.to_middle o v == to_middle and p.to_source o v == to_source.
std::optional<Morphism> pullback_induced(const ExactCategory& cat, const Pullback& p,
                                         const Morphism& to_middle, const Morphism& to_source);

// An admissible morphism written as monic o epic.
struct Factorization {
  Morphism epic;
  Morphism monic;
};

// Consecutive arrows compose and the sequence is exact at every interior object.
bool is_exact_sequence(const ExactCategory& cat, const std::vector<Morphism>& arrows);
// Same test against chosen factorizations: each monic followed by the next epic is short exact.
bool is_exact_sequence(const ExactCategory& cat, const std::vector<Factorization>& arrows);

// Pair a morphism into a biproduct: (f, g)^T : X -> A + B.
Morphism pair_into(const ExactCategory& cat, const Morphism& f, const Morphism& g);
// Copair out of a biproduct: (f g) : A + B -> X.
Morphism copair_from(const ExactCategory& cat, const Morphism& f, const Morphism& g);
Morphism direct_sum_map(const ExactCategory& cat, const Morphism& f, const Morphism& g);

}  // namespace exact
