#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "exact/completion/completion.hpp"
#include "exact/complexes/acyclicity.hpp"
#include "exact/io/models.hpp"
#include "exact/laws/laws.hpp"
#include "exact/lemmas/snake.hpp"
#include "exact/models/abelian_groups.hpp"
#include "exact/resolutions/derived.hpp"

namespace exactcat {

using exact::Document;
using exact::ExactCategory;
using exact::Integer;
using exact::Morphism;
using exact::Object;
using nlohmann::json;

namespace {

json header(const std::string& command) { return json{{"version", exact::kDocumentVersion}, {"command", command}}; }

json describe(const ExactCategory& cat, const Object& a) {
  json out{{"presentation", exact::object_to_json(a)}};
  if (auto inv = cat.iso_invariants(a)) {
    out["invariants"] = exact::invariants_to_json(*inv);
    out["text"] = inv->to_string();
  } else {
    out["text"] = "object on " + std::to_string(a.generators()) + " generators";
  }
  return out;
}

json arrow(const ExactCategory& cat, const Morphism& f) { return exact::matrix_to_json(cat.normalize(f).matrix()); }

std::string cyclic_name(const Integer& n) {
  return exact::presented_invariants(exact::AbelianGroups::cyclic(n)).to_string();
}

void require_nonnegative(const Integer& x, const char* what) {
  if (x < 0) throw exact::InvalidInput(std::string(what) + " must be non-negative");
}

CommandResult derived_value(const std::string& command, const exact::FunctorSpec& f, const Integer& m,
                            const Integer& n, std::size_t i) {
  require_nonnegative(m, "m");
  require_nonnegative(n, "n");
  const exact::AbelianGroups fgab;
  const exact::DerivedFunctorResult r = exact::derived(fgab, f, exact::AbelianGroups::cyclic(m), i);
  const exact::IsoInvariants inv = exact::presented_invariants(r.values.at(i));
  json report = header(command);
  report["m"] = exact::integer_to_json(m);
  report["n"] = exact::integer_to_json(n);
  report["degree"] = i;
  report["group"] = (command == "ext" ? "Ext^" : "Tor_") + std::to_string(i) + "(" + cyclic_name(m) + ", " +
                    cyclic_name(n) + ")";
  report["invariants"] = exact::invariants_to_json(inv);
  report["text"] = inv.to_string();
  report["truncated"] = r.resolution.truncated;
  return {report, kOk};
}

const exact::IdempotentCompletion* as_completion(const ExactCategory& cat) {
  return dynamic_cast<const exact::IdempotentCompletion*>(&cat);
}

}  // namespace

exact::FunctorSpec parse_functor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw exact::ParseError("functor '" + text + "' is not of the form kind:N");
  const std::string kind = text.substr(0, colon);
  Integer n;
  if (n.set_str(text.substr(colon + 1), 10) != 0 || n < 0)
    throw exact::ParseError("functor parameter in '" + text + "' is not a non-negative integer");
  const Object parameter = exact::AbelianGroups::cyclic(n);
  if (kind == "tensor") return {exact::FunctorKind::TensorWith, parameter};
  if (kind == "hom-from") return {exact::FunctorKind::HomFrom, parameter};
  if (kind == "hom-into") return {exact::FunctorKind::HomInto, parameter};
  throw exact::ParseError("unknown functor kind '" + kind + "'");
}

CommandResult cmd_check(const CheckOptions& options) {
  const exact::CategoryPtr cat = exact::make_model(options.model);
  exact::LawConfig cfg;
  cfg.seed = options.seed;
  cfg.iterations = options.iterations;
  cfg.bounds.max_generators = options.max_generators;
  cfg.bounds.max_relation_entry = static_cast<long>(options.max_entry);
  cfg.bounds.max_morphism_entry = static_cast<long>(options.max_entry);

  const bool wic = cat->flags().weakly_idempotent_complete;
  std::vector<std::string> suites = options.suites;
  json skipped = json::array();
  if (suites.empty()) {
    for (const std::string& s : exact::suite_names()) {
      if (!wic && (s == "cancellation" || s == "heller")) {
        skipped.push_back(json{{"suite", s}, {"reason", "model is not weakly idempotent complete"}});
        continue;
      }
      suites.push_back(s);
    }
  }

  json reports = json::array();
  bool passed = true;
  for (const std::string& s : suites) {
    const exact::LawReport r = exact::run_named_suite(s, *cat, cfg);
    passed = passed && r.passed();
    reports.push_back(exact::to_json(r));
  }
  if (options.functor) {
    const exact::LawReport r = exact::check_functor_exact(*options.functor, *cat, cfg);
    passed = passed && r.passed();
    reports.push_back(exact::to_json(r));
  }

  json report = header("check");
  report["model"] = cat->name();
  report["seed"] = exact::integer_to_json(Integer(std::to_string(options.seed)));
  report["iterations"] = options.iterations;
  report["max_generators"] = options.max_generators;
  report["max_entry"] = options.max_entry;
  report["suites"] = reports;
  report["skipped"] = skipped;
  report["passed"] = passed;
  return {report, passed ? kOk : kLawFailure};
}

CommandResult cmd_resolve(const Document& doc, const std::string& object, std::size_t max_length) {
  const exact::CategoryPtr cat = exact::make_model(doc.model);
  const Object a = doc.object(object);
  const exact::Resolution r = exact::projective_resolution(*cat, a, max_length);
  json components = json::array();
  for (std::size_t n = 0; n <= r.length(); ++n) {
    json c{{"degree", n}, {"object", describe(*cat, r.component(n))}};
    c["map"] = n == 0 ? arrow(*cat, r.augmentation) : arrow(*cat, r.differential(n));
    components.push_back(std::move(c));
  }
  json report = header("resolve");
  report["model"] = cat->name();
  report["object"] = object;
  report["resolved"] = describe(*cat, a);
  report["max_length"] = max_length;
  report["components"] = components;
  report["truncated"] = r.truncated;
  report["verified"] = exact::is_resolution(*cat, r);
  return {report, kOk};
}

CommandResult cmd_ext(const Integer& m, const Integer& n, std::size_t i) {
  return derived_value("ext", {exact::FunctorKind::HomInto, exact::AbelianGroups::cyclic(n)}, m, n, i);
}

CommandResult cmd_tor(const Integer& m, const Integer& n, std::size_t i) {
  return derived_value("tor", {exact::FunctorKind::TensorWith, exact::AbelianGroups::cyclic(n)}, m, n, i);
}

CommandResult cmd_homology(const Document& doc, const std::string& complex) {
  const exact::CategoryPtr cat = exact::make_model(doc.model);
  const exact::ChainComplex x = doc.complex(*cat, complex);
  json degrees = json::array();
  bool zero = true;
  for (int n : x.degrees()) {
    const exact::Homology h = exact::homology(*cat, x, n);
    zero = zero && exact::is_zero_object(*cat, h.object);
    degrees.push_back(json{{"degree", n}, {"homology", describe(*cat, h.object)}});
  }
  json report = header("homology");
  report["model"] = cat->name();
  report["complex"] = complex;
  report["periodic"] = x.is_periodic();
  report["degrees"] = degrees;
  report["all_zero"] = zero;
  return {report, kOk};
}

CommandResult cmd_snake(const Document& doc, const std::string& ses_morphism) {
  const exact::CategoryPtr cat = exact::make_model(doc.model);
  const exact::SnakeResult r = exact::snake(*cat, doc.ses_morphism(ses_morphism));
  const std::vector<std::pair<std::string, Object>> objects{
      {"ker left", r.kernel_left.domain()},         {"ker middle", r.kernel_middle.domain()},
      {"ker right", r.kernel_right.domain()},       {"coker left", r.cokernel_left.codomain()},
      {"coker middle", r.cokernel_middle.codomain()}, {"coker right", r.cokernel_right.codomain()}};
  json terms = json::array();
  for (const auto& [label, a] : objects) terms.push_back(json{{"label", label}, {"object", describe(*cat, a)}});
  json arrows = json::array();
  for (const Morphism& f : r.six_term()) arrows.push_back(arrow(*cat, f));
  json report = header("snake");
  report["model"] = cat->name();
  report["ses_morphism"] = ses_morphism;
  report["terms"] = terms;
  report["arrows"] = arrows;
  report["delta"] = json{{"from", describe(*cat, r.delta.domain())},
                         {"to", describe(*cat, r.delta.codomain())},
                         {"matrix", arrow(*cat, r.delta)}};
  report["exact"] = r.exact(*cat);
  return {report, kOk};
}

CommandResult cmd_complete(const Document& doc, const std::string& object, const std::string& idempotent) {
  const exact::CategoryPtr model = exact::make_model(doc.model);
  std::optional<exact::IdempotentCompletion> built;
  const exact::IdempotentCompletion* completion = as_completion(*model);
  if (!completion) completion = &built.emplace(*model);
  const bool embedded = completion == &*built;

  const Morphism q0 = doc.morphism(idempotent);
  if (q0.domain() != doc.object(object) || q0.codomain() != doc.object(object))
    throw exact::InvalidInput("'" + idempotent + "' is not an endomorphism of '" + object + "'");
  const Morphism q = embedded ? completion->embed(q0) : q0;
  if (!completion->equal(completion->compose(q, q), q))
    throw exact::PreconditionError("split_idempotent", "'" + idempotent + "' is not idempotent");

  const exact::IdempotentSplitting s = exact::split_idempotent(*completion, q);
  const Object& x = q.domain();
  const bool verified =
      completion->equal(completion->compose(s.l, s.k), completion->identity(s.kernel)) &&
      completion->equal(completion->compose(s.j, s.i), completion->identity(s.image)) &&
      completion->equal(completion->add(completion->compose(s.k, s.l), completion->compose(s.i, s.j)),
                        completion->identity(x));
  const ExactCategory& base = completion->base();
  const auto in_base = [&](const Object& a) { return base.contains(completion->ambient_image(a).image); };

  json report = header("complete");
  report["model"] = completion->name();
  report["object"] = object;
  report["idempotent"] = idempotent;
  report["source"] = describe(*completion, x);
  report["kernel"] = describe(*completion, s.kernel);
  report["image"] = describe(*completion, s.image);
  report["arrows"] = json{{"k", arrow(*completion, s.k)},
                          {"i", arrow(*completion, s.i)},
                          {"l", arrow(*completion, s.l)},
                          {"j", arrow(*completion, s.j)}};
  report["verified"] = verified;
  report["splits_in_base"] = in_base(s.kernel) && in_base(s.image);
  return {report, kOk};
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw exact::ParseError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  Document doc = exact::parse_document(text.str());
  doc.validate(*exact::make_model(doc.model));
  return doc;
}

CommandResult error_result(const std::string& command, const std::exception& e) {
  json error{{"message", e.what()}};
  int code = kInternalError;
  if (const auto* p = dynamic_cast<const exact::PreconditionError*>(&e)) {
    error["kind"] = "precondition";
    error["lemma"] = p->lemma();
    code = kPreconditionFailure;
  } else if (dynamic_cast<const exact::UnsupportedOperation*>(&e)) {
    error["kind"] = "unsupported";
    code = kPreconditionFailure;
  } else if (dynamic_cast<const exact::ParseError*>(&e) || dynamic_cast<const exact::InvalidInput*>(&e)) {
    error["kind"] = "input";
    code = kParseError;
  } else {
    error["kind"] = "internal";
  }
  json report = header(command);
  report["error"] = error;
  return {report, code};
}

}  // namespace exactcat
