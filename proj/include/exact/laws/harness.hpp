#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "exact/complexes/complex.hpp"
#include "exact/core/category.hpp"
#include "exact/io/document.hpp"
#include "exact/lemmas/ses_morphism.hpp"

namespace exact {

struct LawConfig {
  std::uint64_t seed = 1;
  std::size_t iterations = 100;
  GeneratorBounds bounds;
  // Evaluations spent shrinking each stored witness.
  std::size_t shrink_budget = 200;
  // Failures beyond this many are counted but not stored.
  std::size_t max_witnesses = 3;
  // Also run every law on the degenerate instances of EdgeSource.
  bool edge_instances = true;
};

enum class Verdict { Pass, Fail, Discard };

// Discard means the instance does not satisfy the law's premises.
struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
  static Outcome pass() { return {Verdict::Pass, {}}; }
  static Outcome fail(std::string why) { return {Verdict::Fail, std::move(why)}; }
  static Outcome discard(std::string why) { return {Verdict::Discard, std::move(why)}; }
};

// Building blocks for instances. Generation strategies ask a source for
// objects, arrows and sequences and assemble the premises of a law from them.
class Source {
 public:
  explicit Source(const ExactCategory& cat) : cat_(cat) {}
  virtual ~Source() = default;

  const ExactCategory& category() const { return cat_; }

  virtual Object object() = 0;
  virtual Morphism morphism(const Object& dom, const Object& cod) = 0;
  virtual Morphism automorphism(const Object& a) = 0;
  virtual ShortExactSequence ses() = 0;
  virtual ShortExactSequence ses_from(const Object& left) = 0;
  virtual ShortExactSequence ses_onto(const Object& right) = 0;
  virtual SesMorphism ses_morphism(const ShortExactSequence& source, const ShortExactSequence& target) = 0;
  virtual ChainComplex acyclic_complex(int lo, std::size_t length) = 0;
  virtual ChainComplex contractible_complex(int lo, std::size_t length) = 0;
  virtual ChainMap chain_map(const ChainComplex& x, const ChainComplex& y) = 0;
  // Uniform in [lo, hi] for random sources; lo for edge sources.
  virtual std::size_t size(std::size_t lo, std::size_t hi) = 0;
  virtual bool coin() = 0;

 private:
  const ExactCategory& cat_;
};

class RandomSource : public Source {
 public:
  RandomSource(const ExactCategory& cat, Rng& rng, GeneratorBounds bounds)
      : Source(cat), rng_(rng), bounds_(bounds) {}

  Object object() override;
  Morphism morphism(const Object& dom, const Object& cod) override;
  Morphism automorphism(const Object& a) override;
  ShortExactSequence ses() override;
  ShortExactSequence ses_from(const Object& left) override;
  ShortExactSequence ses_onto(const Object& right) override;
  SesMorphism ses_morphism(const ShortExactSequence& source, const ShortExactSequence& target) override;
  ChainComplex acyclic_complex(int lo, std::size_t length) override;
  ChainComplex contractible_complex(int lo, std::size_t length) override;
  ChainMap chain_map(const ChainComplex& x, const ChainComplex& y) override;
  std::size_t size(std::size_t lo, std::size_t hi) override;
  bool coin() override;

 private:
  Rng& rng_;
  GeneratorBounds bounds_;
};

// Degenerate instances: zero objects, the smallest nonzero object of the
// model, identities, zero arrows, split sequences and two-term contractible
// complexes. The variant selects the pattern of choices.
class EdgeSource : public Source {
 public:
  static constexpr std::size_t kVariants = 10;

  EdgeSource(const ExactCategory& cat, std::size_t variant);

  Object object() override;
  Morphism morphism(const Object& dom, const Object& cod) override;
  Morphism automorphism(const Object& a) override;
  ShortExactSequence ses() override;
  ShortExactSequence ses_from(const Object& left) override;
  ShortExactSequence ses_onto(const Object& right) override;
  SesMorphism ses_morphism(const ShortExactSequence& source, const ShortExactSequence& target) override;
  ChainComplex acyclic_complex(int lo, std::size_t length) override;
  ChainComplex contractible_complex(int lo, std::size_t length) override;
  ChainMap chain_map(const ChainComplex& x, const ChainComplex& y) override;
  std::size_t size(std::size_t lo, std::size_t hi) override;
  bool coin() override;

 private:
  bool pick();
  ShortExactSequence split(const Object& left, const Object& right) const;

  std::size_t variant_;
  std::size_t calls_ = 0;
  Object small_;
};

// Smallest nonzero object among Z, Z^2 and their embeddings into a completion;
// the zero object if none of them lies in the model.
Object smallest_nonzero_object(const ExactCategory& cat);

struct Law {
  std::string id;
  std::string statement;
  // Builds an instance satisfying the premises by construction.
  std::function<Document(const ExactCategory&, Source&)> generate;
  // Re-checks the premises (Discard when they fail) and then the conclusion.
  std::function<Outcome(const ExactCategory&, const Document&)> check;
  // Hand-constructed instances run in addition to the generated ones.
  std::function<std::vector<Document>(const ExactCategory&)> fixed;
};

struct Failure {
  std::string instance;  // "random <i>", "edge <k>" or "fixed <k>"
  std::uint64_t seed = 0;
  std::string detail;
  Document witness;
  std::size_t shrink_steps = 0;
};

struct LawReport {
  std::string law_id;
  std::string model;
  std::uint64_t seed = 0;
  std::size_t instances_run = 0;
  std::size_t discarded = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  std::vector<LawReport> sub_reports;
  // Wall time; not serialized.
  double elapsed_seconds = 0;

  bool passed() const;
};

// Validates the document against the model (Discard when it is not a valid
// instance) and runs the check. Exceptions raised by the check count as failures.
Outcome evaluate(const Law& law, const ExactCategory& cat, const Document& instance);

struct ShrinkResult {
  Document witness;
  Outcome outcome;
  std::size_t steps = 0;
};

// Repeatedly replaces the witness by the first smaller candidate that still
// fails: drop a generator (or one at each end of an arrow), drop a relation,
// zero, halve or decrement an entry.
// Stops when no candidate fails or the budget of evaluations is spent.
ShrinkResult shrink(const Law& law, const ExactCategory& cat, Document witness, Outcome outcome,
                    std::size_t budget);

// Iteration i draws from the seed derive_seed(cfg.seed, law.id, i).
LawReport run_law(const Law& law, const ExactCategory& cat, const LawConfig& cfg);
// Report whose sub-reports are the individual laws.
LawReport run_suite(const std::string& id, const std::vector<Law>& laws, const ExactCategory& cat,
                    const LawConfig& cfg);

// Deterministic: elapsed time is left out.
nlohmann::json to_json(const LawReport& report);

}  // namespace exact
