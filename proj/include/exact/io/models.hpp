#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exact/core/category.hpp"

namespace exact {

// Model for a descriptor: fgab, fgab-split, free, free-split, even-rank-split,
// free-all-monics, vect-<p> for a prime p, and <base>-completion for any of
// these. The descriptors agree with ExactCategory::name(). Throws ParseError
// for unknown descriptors.
CategoryPtr make_model(std::string_view descriptor);

// Descriptors without the completion suffix and the vector space family.
std::vector<std::string> base_model_names();

}  // namespace exact
