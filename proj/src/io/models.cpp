#include "exact/io/models.hpp"

#include <memory>

#include "exact/completion/completion.hpp"
#include "exact/io/document.hpp"
#include "exact/models/abelian_groups.hpp"
#include "exact/models/free_groups.hpp"
#include "exact/models/vector_spaces.hpp"

namespace exact {

namespace {

constexpr std::string_view kCompletionSuffix = "-completion";

// Keeps the base alive for as long as the completion is referenced.
struct OwnedCompletion {
  CategoryPtr base;
  IdempotentCompletion completion;
  explicit OwnedCompletion(CategoryPtr b) : base(std::move(b)), completion(*base) {}
};

}  // namespace

std::vector<std::string> base_model_names() {
  return {"fgab", "fgab-split", "free", "free-split", "even-rank-split", "free-all-monics"};
}

CategoryPtr make_model(std::string_view descriptor) {
  if (descriptor.size() > kCompletionSuffix.size() && descriptor.ends_with(kCompletionSuffix)) {
    auto owned = std::make_shared<OwnedCompletion>(
        make_model(descriptor.substr(0, descriptor.size() - kCompletionSuffix.size())));
    return CategoryPtr(owned, &owned->completion);
  }
  if (descriptor == "fgab") return std::make_shared<AbelianGroups>();
  if (descriptor == "fgab-split") return std::make_shared<AbelianGroups>(AdmissibilityPolicy::SplitOnly);
  if (descriptor == "free") return std::make_shared<FreeAbelian>();
  if (descriptor == "free-split") return std::make_shared<FreeAbelian>(AdmissibilityPolicy::SplitOnly);
  if (descriptor == "even-rank-split") return std::make_shared<EvenRankFree>();
  if (descriptor == "free-all-monics") return std::make_shared<AllMonicsFree>();
  if (descriptor.starts_with("vect-")) {
    try {
      const std::string digits(descriptor.substr(5));
      std::size_t used = 0;
      const long p = std::stol(digits, &used);
      if (used == digits.size()) return std::make_shared<VectorSpaces>(p);
    } catch (const std::logic_error&) {
      // Not a number or not a prime; reported below.
    }
  }
  throw ParseError("unknown model '" + std::string(descriptor) + "'");
}

}  // namespace exact
