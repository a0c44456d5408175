#include "exact/laws/harness.hpp"

#include <chrono>

#include "exact/completion/completion.hpp"
#include "exact/complexes/random_complex.hpp"
#include "exact/core/constructions.hpp"

namespace exact {

namespace {

using nlohmann::json;

IntMatrix drop_row(const IntMatrix& m, std::size_t row) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != row) keep.push_back(i);
  return m.select_rows(keep);
}

IntMatrix drop_column(const IntMatrix& m, std::size_t col) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != col) keep.push_back(j);
  return m.select_columns(keep);
}

Object with_relations(const Object& a, IntMatrix relations) {
  if (a.has_idempotent()) return Object(std::move(relations), a.idempotent());
  return Object(std::move(relations));
}

Document drop_generator(const Document& d, const std::string& name, std::size_t g) {
  Document out = d;
  const Object& a = d.objects.at(name);
  IntMatrix relations = drop_row(a.relations(), g);
  out.objects.insert_or_assign(name, a.has_idempotent()
                                         ? Object(std::move(relations), drop_column(drop_row(a.idempotent(), g), g))
                                         : Object(std::move(relations)));
  for (auto& [arrow, e] : out.morphisms) {
    if (e.to == name) e.matrix = drop_row(e.matrix, g);
    if (e.from == name) e.matrix = drop_column(e.matrix, g);
  }
  return out;
}

std::vector<Document> candidates(const Document& d) {
  std::vector<Document> out;
  for (const auto& [name, a] : d.objects)
    for (std::size_t g = 0; g < a.generators(); ++g) out.push_back(drop_generator(d, name, g));
  // Row i and column j of an arrow together, for arrows whose shape pins the ranks.
  for (const auto& [name, e] : d.morphisms) {
    if (e.from == e.to) continue;
    for (std::size_t i = 0; i < e.matrix.rows(); ++i)
      for (std::size_t j = 0; j < e.matrix.cols(); ++j)
        out.push_back(drop_generator(drop_generator(d, e.to, i), e.from, j));
  }
  for (const auto& [name, a] : d.objects) {
    for (std::size_t c = 0; c < a.relations().cols(); ++c) {
      Document next = d;
      next.objects.insert_or_assign(name, with_relations(a, drop_column(a.relations(), c)));
      out.push_back(std::move(next));
    }
  }
  // Entry edits: to zero, halved towards zero, one step towards zero.
  enum class Edit { Zero, Halve, Step };
  const auto applies = [](Edit e, const Integer& x) { return e == Edit::Zero ? x != 0 : abs(x) > 1; };
  const auto edited = [](Edit e, const Integer& x) -> Integer {
    if (e == Edit::Zero) return 0;
    if (e == Edit::Halve) return x / 2;
    return x > 0 ? Integer(x - 1) : Integer(x + 1);
  };
  for (Edit edit : {Edit::Zero, Edit::Halve, Edit::Step}) {
    for (const auto& [name, e] : d.morphisms) {
      for (std::size_t i = 0; i < e.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < e.matrix.cols(); ++j) {
          const Integer& x = e.matrix(i, j);
          if (!applies(edit, x)) continue;
          Document next = d;
          next.morphisms.at(name).matrix(i, j) = edited(edit, x);
          out.push_back(std::move(next));
        }
      }
    }
    for (const auto& [name, a] : d.objects) {
      for (std::size_t i = 0; i < a.relations().rows(); ++i) {
        for (std::size_t j = 0; j < a.relations().cols(); ++j) {
          const Integer& x = a.relations()(i, j);
          if (!applies(edit, x)) continue;
          Document next = d;
          IntMatrix r = a.relations();
          r(i, j) = edited(edit, x);
          next.objects.insert_or_assign(name, with_relations(a, std::move(r)));
          out.push_back(std::move(next));
        }
      }
    }
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Object RandomSource::object() { return category().random_object(rng_, bounds_); }
Morphism RandomSource::morphism(const Object& dom, const Object& cod) {
  return category().random_morphism(rng_, dom, cod, bounds_);
}
Morphism RandomSource::automorphism(const Object& a) { return category().random_automorphism(rng_, a, bounds_); }
ShortExactSequence RandomSource::ses() { return category().random_ses(rng_, bounds_); }
ShortExactSequence RandomSource::ses_from(const Object& left) {
  return category().random_ses_from(rng_, left, bounds_);
}
ShortExactSequence RandomSource::ses_onto(const Object& right) {
  return category().random_ses_onto(rng_, right, bounds_);
}
SesMorphism RandomSource::ses_morphism(const ShortExactSequence& source, const ShortExactSequence& target) {
  return random_ses_morphism(category(), rng_, source, target, bounds_);
}
ChainComplex RandomSource::acyclic_complex(int lo, std::size_t length) {
  return random_acyclic_complex(category(), rng_, lo, length, bounds_);
}
ChainComplex RandomSource::contractible_complex(int lo, std::size_t length) {
  return random_contractible_complex(category(), rng_, lo, length, bounds_);
}
ChainMap RandomSource::chain_map(const ChainComplex& x, const ChainComplex& y) {
  return random_chain_map(category(), rng_, x, y, bounds_);
}
std::size_t RandomSource::size(std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng_.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}
bool RandomSource::coin() { return rng_.chance(1, 2); }

Object smallest_nonzero_object(const ExactCategory& cat) {
  const auto* completion = dynamic_cast<const IdempotentCompletion*>(&cat);
  for (std::size_t rank : {1, 2}) {
    const Object free = Object::free(rank);
    if (completion) {
      if (completion->base().contains(free)) return completion->embed(free);
    } else if (cat.contains(free)) {
      return free;
    }
  }
  return cat.zero_object();
}

EdgeSource::EdgeSource(const ExactCategory& cat, std::size_t variant)
    : Source(cat), variant_(variant), small_(smallest_nonzero_object(cat)) {}

bool EdgeSource::pick() { return ((variant_ >> (calls_++ % 4)) & 1U) != 0; }

ShortExactSequence EdgeSource::split(const Object& left, const Object& right) const {
  const Biproduct s = category().biproduct(left, right);
  return {s.inject_first, s.project_second};
}

Object EdgeSource::object() { return pick() ? small_ : category().zero_object(); }

Morphism EdgeSource::morphism(const Object& dom, const Object& cod) {
  if (pick() && dom == cod) return category().identity(dom);
  return category().zero(dom, cod);
}

Morphism EdgeSource::automorphism(const Object& a) { return category().identity(a); }

ShortExactSequence EdgeSource::ses() {
  const Object left = object();
  return split(left, object());
}

ShortExactSequence EdgeSource::ses_from(const Object& left) { return split(left, object()); }
ShortExactSequence EdgeSource::ses_onto(const Object& right) { return split(object(), right); }

SesMorphism EdgeSource::ses_morphism(const ShortExactSequence& source, const ShortExactSequence& target) {
  const ExactCategory& cat = category();
  const bool same = source.mono.domain() == target.mono.domain() && source.middle() == target.middle() &&
                    source.right() == target.right() && source.mono.matrix() == target.mono.matrix() &&
                    source.epi.matrix() == target.epi.matrix();
  if (same && pick()) return identity_ses_morphism(cat, source);
  return SesMorphism{source, target, cat.zero(source.left(), target.left()), cat.zero(source.middle(), target.middle()),
                     cat.zero(source.right(), target.right())};
}

ChainComplex EdgeSource::acyclic_complex(int lo, std::size_t) {
  if (pick()) return ChainComplex();
  return ChainComplex::bounded(category(), lo, {small_, small_}, {category().identity(small_)});
}

ChainComplex EdgeSource::contractible_complex(int lo, std::size_t length) { return acyclic_complex(lo, length); }

ChainMap EdgeSource::chain_map(const ChainComplex& x, const ChainComplex& y) { return zero_map(category(), x, y); }

std::size_t EdgeSource::size(std::size_t lo, std::size_t) { return lo; }

bool EdgeSource::coin() { return pick(); }

bool LawReport::passed() const {
  if (failure_count != 0) return false;
  for (const auto& s : sub_reports)
    if (!s.passed()) return false;
  return true;
}

Outcome evaluate(const Law& law, const ExactCategory& cat, const Document& instance) {
  try {
    instance.validate(cat);
  } catch (const std::exception& e) {
    return Outcome::discard(std::string("invalid instance: ") + e.what());
  }
  try {
    return law.check(cat, instance);
  } catch (const std::exception& e) {
    return Outcome::fail(std::string("exception: ") + e.what());
  }
}

ShrinkResult shrink(const Law& law, const ExactCategory& cat, Document witness, Outcome outcome,
                    std::size_t budget) {
  ShrinkResult result{std::move(witness), std::move(outcome), 0};
  bool progress = true;
  while (progress && result.steps < budget) {
    progress = false;
    for (Document& next : candidates(result.witness)) {
      if (result.steps >= budget) break;
      ++result.steps;
      Outcome o = evaluate(law, cat, next);
      if (o.verdict == Verdict::Fail) {
        result.witness = std::move(next);
        result.outcome = std::move(o);
        progress = true;
        break;
      }
    }
  }
  return result;
}

LawReport run_law(const Law& law, const ExactCategory& cat, const LawConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.law_id = law.id;
  report.model = cat.name();
  report.seed = cfg.seed;

  auto record = [&](const std::string& instance, std::uint64_t seed, const Document& doc, const Outcome& outcome,
                    bool shrinkable) {
    ++report.instances_run;
    if (outcome.verdict == Verdict::Discard) ++report.discarded;
    if (outcome.verdict != Verdict::Fail) return;
    ++report.failure_count;
    if (report.failures.size() >= cfg.max_witnesses) return;
    Failure f{instance, seed, outcome.detail, doc, 0};
    if (shrinkable) {
      ShrinkResult s = shrink(law, cat, doc, outcome, cfg.shrink_budget);
      f.witness = std::move(s.witness);
      f.detail = std::move(s.outcome.detail);
      f.shrink_steps = s.steps;
    }
    report.failures.push_back(std::move(f));
  };

  auto run_one = [&](const std::string& instance, std::uint64_t seed, Source& source) {
    Document doc;
    doc.model = cat.name();
    try {
      doc = law.generate(cat, source);
      doc.model = cat.name();
    } catch (const std::exception& e) {
      record(instance, seed, doc, Outcome::fail(std::string("generation failed: ") + e.what()), false);
      return;
    }
    record(instance, seed, doc, evaluate(law, cat, doc), true);
  };

  for (std::size_t i = 0; i < cfg.iterations; ++i) {
    const std::uint64_t seed = derive_seed(cfg.seed, law.id, i);
    Rng rng(seed);
    RandomSource source(cat, rng, cfg.bounds);
    run_one("random " + std::to_string(i), seed, source);
  }
  if (cfg.edge_instances) {
    for (std::size_t k = 0; k < EdgeSource::kVariants; ++k) {
      EdgeSource source(cat, k);
      run_one("edge " + std::to_string(k), 0, source);
    }
  }
  if (law.fixed) {
    std::vector<Document> fixed = law.fixed(cat);
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      fixed[k].model = cat.name();
      record("fixed " + std::to_string(k), 0, fixed[k], evaluate(law, cat, fixed[k]), true);
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

LawReport run_suite(const std::string& id, const std::vector<Law>& laws, const ExactCategory& cat,
                    const LawConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.law_id = id;
  report.model = cat.name();
  report.seed = cfg.seed;
  for (const Law& law : laws) {
    LawReport sub = run_law(law, cat, cfg);
    report.instances_run += sub.instances_run;
    report.discarded += sub.discarded;
    report.failure_count += sub.failure_count;
    report.sub_reports.push_back(std::move(sub));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

json to_json(const LawReport& report) {
  json witnesses = json::array();
  for (const auto& f : report.failures) {
    witnesses.push_back(json{{"instance", f.instance},
                             {"seed", integer_to_json(Integer(std::to_string(f.seed)))},
                             {"detail", f.detail},
                             {"shrink_steps", f.shrink_steps},
                             {"diagram", to_json(f.witness)}});
  }
  json j{{"law", report.law_id},
         {"model", report.model},
         {"seed", integer_to_json(Integer(std::to_string(report.seed)))},
         {"instances", report.instances_run},
         {"discarded", report.discarded},
         {"failures", report.failure_count},
         {"passed", report.passed()},
         {"witnesses", std::move(witnesses)}};
  if (!report.sub_reports.empty()) {
    json subs = json::array();
    for (const auto& s : report.sub_reports) subs.push_back(to_json(s));
    j["laws"] = std::move(subs);
  }
  return j;
}

}  // namespace exact
