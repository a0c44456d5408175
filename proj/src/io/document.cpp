#include "exact/io/document.hpp"

#include "exact/core/constructions.hpp"

namespace exact {

namespace {

using nlohmann::json;

const Integer& safe_limit() {
  static const Integer limit = Integer(1) << 53;
  return limit;
}

std::string degree_name(const std::string& base, int n) { return base + "^" + std::to_string(n); }

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) {
  auto it = map.find(name);
  if (it == map.end()) throw ParseError(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  const json& v = j.at(key);
  if (!v.is_object()) throw ParseError(std::string("section '") + key + "' must be an object");
  return v;
}

int parse_degree(const std::string& key) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(key, &used);
    if (used != key.size()) throw ParseError("bad degree '" + key + "'");
    return n;
  } catch (const std::logic_error&) {
    throw ParseError("bad degree '" + key + "'");
  }
}

}  // namespace

void Document::put_object(const std::string& name, const Object& a) {
  auto [it, inserted] = objects.emplace(name, a);
  if (!inserted && it->second != a) throw InvalidInput("document: object '" + name + "' already holds another value");
}

void Document::put_morphism(const std::string& name, const std::string& from, const std::string& to,
                            const Morphism& f) {
  put_object(from, f.domain());
  put_object(to, f.codomain());
  morphisms.insert_or_assign(name, ArrowEntry{from, to, f.matrix()});
}

void Document::put_ses(const std::string& name, const ShortExactSequence& s, const std::string& left,
                       const std::string& middle, const std::string& right) {
  put_morphism(name + ".mono", left, middle, s.mono);
  put_morphism(name + ".epi", middle, right, s.epi);
  sequences.insert_or_assign(name, SesEntry{name + ".mono", name + ".epi"});
}

void Document::put_complex(const std::string& name, const ChainComplex& x) {
  ComplexEntry entry;
  entry.lo = x.empty() ? 0 : x.lo();
  entry.periodic = x.is_periodic();
  for (int n : x.degrees()) {
    entry.objects.push_back(degree_name(name, n));
    put_object(entry.objects.back(), x.object(n));
  }
  if (!x.empty()) {
    const int last = x.is_periodic() ? x.hi() : x.hi() - 1;
    for (int n = x.lo(); n <= last; ++n) {
      const int next = x.canonical_degree(n + 1);
      entry.differentials.push_back(degree_name("d." + name, n));
      put_morphism(entry.differentials.back(), degree_name(name, n), degree_name(name, next), x.differential(n));
    }
  }
  complexes.insert_or_assign(name, std::move(entry));
}

void Document::put_chain_map(const std::string& name, const ChainMap& f, const std::string& source,
                             const std::string& target) {
  const ComplexEntry& s = lookup(complexes, source, "complex");
  const ComplexEntry& t = lookup(complexes, target, "complex");
  ChainMapEntry entry{source, target, {}};
  for (int n : common_degrees(f.source(), f.target())) {
    if (!f.source().in_window(n) || !f.target().in_window(n)) continue;
    const auto& from = s.objects.at(static_cast<std::size_t>(f.source().canonical_degree(n) - s.lo));
    const auto& to = t.objects.at(static_cast<std::size_t>(f.target().canonical_degree(n) - t.lo));
    entry.components.emplace(n, degree_name(name, n));
    put_morphism(degree_name(name, n), from, to, f.component(n));
  }
  chain_maps.insert_or_assign(name, std::move(entry));
}

void Document::put_ses_morphism(const std::string& name, const SesMorphism& m, const std::string& source,
                                const std::string& target) {
  const SesEntry& s = lookup(sequences, source, "sequence");
  const SesEntry& t = lookup(sequences, target, "sequence");
  const ArrowEntry& sm = lookup(morphisms, s.mono, "morphism");
  const ArrowEntry& se = lookup(morphisms, s.epi, "morphism");
  const ArrowEntry& tm = lookup(morphisms, t.mono, "morphism");
  const ArrowEntry& te = lookup(morphisms, t.epi, "morphism");
  put_morphism(name + ".left", sm.from, tm.from, m.left);
  put_morphism(name + ".middle", sm.to, tm.to, m.middle);
  put_morphism(name + ".right", se.to, te.to, m.right);
  ses_morphisms.insert_or_assign(name,
                                 SesMorphismEntry{source, target, name + ".left", name + ".middle", name + ".right"});
}

Object Document::object(const std::string& name) const { return lookup(objects, name, "object"); }

Morphism Document::morphism(const std::string& name) const {
  const ArrowEntry& e = lookup(morphisms, name, "morphism");
  return Morphism(object(e.from), object(e.to), e.matrix);
}

ShortExactSequence Document::ses(const std::string& name) const {
  const SesEntry& e = lookup(sequences, name, "sequence");
  return ShortExactSequence{morphism(e.mono), morphism(e.epi)};
}

SesMorphism Document::ses_morphism(const std::string& name) const {
  const SesMorphismEntry& e = lookup(ses_morphisms, name, "ses morphism");
  return SesMorphism{ses(e.source), ses(e.target), morphism(e.left), morphism(e.middle), morphism(e.right)};
}

ChainComplex Document::complex(const ExactCategory& cat, const std::string& name) const {
  const ComplexEntry& e = lookup(complexes, name, "complex");
  if (e.objects.empty()) return ChainComplex();
  std::vector<Object> objs;
  for (const auto& o : e.objects) objs.push_back(object(o));
  std::vector<Morphism> diffs;
  for (const auto& d : e.differentials) diffs.push_back(morphism(d));
  return e.periodic ? ChainComplex::periodic(cat, e.lo, std::move(objs), std::move(diffs))
                    : ChainComplex::bounded(cat, e.lo, std::move(objs), std::move(diffs));
}

ChainMap Document::chain_map(const ExactCategory& cat, const std::string& name) const {
  const ChainMapEntry& e = lookup(chain_maps, name, "chain map");
  std::map<int, Morphism> components;
  for (const auto& [n, arrow] : e.components) components.emplace(n, morphism(arrow));
  return ChainMap(cat, complex(cat, e.source), complex(cat, e.target), std::move(components));
}

void Document::validate(const ExactCategory& cat) const {
  for (const auto& [name, a] : objects)
    if (!cat.contains(a)) throw ParseError("object '" + name + "' is not an object of " + cat.name());
  for (const auto& [name, e] : morphisms) {
    const Object& from = lookup(objects, e.from, "object");
    const Object& to = lookup(objects, e.to, "object");
    if (e.matrix.rows() != to.generators() || e.matrix.cols() != from.generators())
      throw ParseError("morphism '" + name + "' has the wrong shape");
    if (!cat.well_defined(morphism(name))) throw ParseError("morphism '" + name + "' is not well defined");
  }
  for (const auto& [name, e] : sequences) {
    if (lookup(morphisms, e.mono, "morphism").to != lookup(morphisms, e.epi, "morphism").from)
      throw ParseError("sequence '" + name + "' is not composable");
  }
  for (const auto& [name, e] : ses_morphisms) {
    const SesMorphism m = ses_morphism(name);
    if (m.left.domain() != m.source.left() || m.left.codomain() != m.target.left() ||
        m.middle.domain() != m.source.middle() || m.middle.codomain() != m.target.middle() ||
        m.right.domain() != m.source.right() || m.right.codomain() != m.target.right())
      throw ParseError("ses morphism '" + name + "' has mistyped components");
  }
  try {
    for (const auto& [name, e] : complexes) complex(cat, name);
    for (const auto& [name, e] : chain_maps) chain_map(cat, name);
  } catch (const InvalidInput& err) {
    throw ParseError(err.what());
  }
}

json integer_to_json(const Integer& a) {
  if (abs(a) < safe_limit()) return json(static_cast<std::int64_t>(a.get_si()));
  return json(to_string(a));
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  IntMatrix m(rows, cols);
  if (j.empty() && (rows == 0 || cols == 0)) return m;
  if (j.size() != rows) throw ParseError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(i) + " does not have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[k]);
  }
  return m;
}

json object_to_json(const Object& a) {
  json j{{"generators", a.generators()}, {"relations", matrix_to_json(a.relations())}};
  if (a.has_idempotent()) j["idempotent"] = matrix_to_json(a.idempotent());
  return j;
}

Object object_from_json(const json& j) {
  const json& g = field(j, "generators");
  if (!g.is_number_unsigned()) throw ParseError("'generators' must be a non-negative integer");
  const std::size_t n = g.get<std::size_t>();
  std::size_t relation_count = 0;
  if (j.contains("relations")) {
    const json& r = j.at("relations");
    if (!r.is_array()) throw ParseError("'relations' must be an array of rows");
    if (!r.empty()) {
      if (!r[0].is_array()) throw ParseError("'relations' must be an array of rows");
      relation_count = r[0].size();
    }
  }
  IntMatrix relations = j.contains("relations") ? matrix_from_json(j.at("relations"), n, relation_count)
                                                : IntMatrix(n, 0);
  if (j.contains("idempotent")) return Object(std::move(relations), matrix_from_json(j.at("idempotent"), n, n));
  return Object(std::move(relations));
}

json invariants_to_json(const IsoInvariants& inv) {
  json torsion = json::array();
  for (const auto& t : inv.torsion) torsion.push_back(integer_to_json(t));
  return json{{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

json to_json(const Document& doc) {
  json j{{"version", doc.version}, {"model", doc.model}};
  json objects = json::object();
  for (const auto& [name, a] : doc.objects) objects[name] = object_to_json(a);
  json morphisms = json::object();
  for (const auto& [name, e] : doc.morphisms)
    morphisms[name] = json{{"from", e.from}, {"to", e.to}, {"matrix", matrix_to_json(e.matrix)}};
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  if (!doc.complexes.empty()) {
    json complexes = json::object();
    for (const auto& [name, e] : doc.complexes)
      complexes[name] = json{{"lo", e.lo}, {"periodic", e.periodic}, {"objects", e.objects},
                             {"differentials", e.differentials}};
    j["complexes"] = std::move(complexes);
  }
  if (!doc.chain_maps.empty()) {
    json maps = json::object();
    for (const auto& [name, e] : doc.chain_maps) {
      json components = json::object();
      for (const auto& [n, arrow] : e.components) components[std::to_string(n)] = arrow;
      maps[name] = json{{"source", e.source}, {"target", e.target}, {"components", components}};
    }
    j["chain_maps"] = std::move(maps);
  }
  if (!doc.sequences.empty()) {
    json seqs = json::object();
    for (const auto& [name, e] : doc.sequences) seqs[name] = json{{"mono", e.mono}, {"epi", e.epi}};
    j["sequences"] = std::move(seqs);
  }
  if (!doc.ses_morphisms.empty()) {
    json ms = json::object();
    for (const auto& [name, e] : doc.ses_morphisms)
      ms[name] = json{{"source", e.source}, {"target", e.target}, {"left", e.left}, {"middle", e.middle},
                      {"right", e.right}};
    j["ses_morphisms"] = std::move(ms);
  }
  return j;
}

Document document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  Document doc;
  doc.version = string_field(j, "version");
  if (doc.version != kDocumentVersion) throw ParseError("unsupported document version '" + doc.version + "'");
  doc.model = string_field(j, "model");
  for (const auto& [name, o] : section(j, "objects").items()) {
    try {
      doc.objects.emplace(name, object_from_json(o));
    } catch (const InvalidInput& e) {
      throw ParseError("object '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, m] : section(j, "morphisms").items()) {
    ArrowEntry e{string_field(m, "from"), string_field(m, "to"), {}};
    const Object& from = lookup(doc.objects, e.from, "object");
    const Object& to = lookup(doc.objects, e.to, "object");
    e.matrix = matrix_from_json(field(m, "matrix"), to.generators(), from.generators());
    doc.morphisms.emplace(name, std::move(e));
  }
  for (const auto& [name, c] : section(j, "complexes").items()) {
    ComplexEntry e;
    const json& lo = field(c, "lo");
    if (!lo.is_number_integer()) throw ParseError("complex '" + name + "': 'lo' must be an integer");
    e.lo = lo.get<int>();
    e.periodic = c.contains("periodic") && c.at("periodic").is_boolean() && c.at("periodic").get<bool>();
    e.objects = string_list(c, "objects");
    e.differentials = string_list(c, "differentials");
    for (const auto& o : e.objects) lookup(doc.objects, o, "object");
    for (const auto& d : e.differentials) lookup(doc.morphisms, d, "morphism");
    doc.complexes.emplace(name, std::move(e));
  }
  for (const auto& [name, c] : section(j, "chain_maps").items()) {
    ChainMapEntry e{string_field(c, "source"), string_field(c, "target"), {}};
    lookup(doc.complexes, e.source, "complex");
    lookup(doc.complexes, e.target, "complex");
    for (const auto& [degree, arrow] : section(c, "components").items()) {
      if (!arrow.is_string()) throw ParseError("chain map '" + name + "': components must name morphisms");
      lookup(doc.morphisms, arrow.get<std::string>(), "morphism");
      e.components.emplace(parse_degree(degree), arrow.get<std::string>());
    }
    doc.chain_maps.emplace(name, std::move(e));
  }
  for (const auto& [name, s] : section(j, "sequences").items()) {
    SesEntry e{string_field(s, "mono"), string_field(s, "epi")};
    lookup(doc.morphisms, e.mono, "morphism");
    lookup(doc.morphisms, e.epi, "morphism");
    doc.sequences.emplace(name, std::move(e));
  }
  for (const auto& [name, s] : section(j, "ses_morphisms").items()) {
    SesMorphismEntry e{string_field(s, "source"), string_field(s, "target"), string_field(s, "left"),
                       string_field(s, "middle"), string_field(s, "right")};
    lookup(doc.sequences, e.source, "sequence");
    lookup(doc.sequences, e.target, "sequence");
    for (const auto* arrow : {&e.left, &e.middle, &e.right}) lookup(doc.morphisms, *arrow, "morphism");
    doc.ses_morphisms.emplace(name, std::move(e));
  }
  return doc;
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace exact
