#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "exact/complexes/complex.hpp"
#include "exact/core/category.hpp"
#include "exact/core/errors.hpp"
#include "exact/lemmas/ses_morphism.hpp"

namespace exact {

inline constexpr const char* kDocumentVersion = "exactcat/1";

// Malformed JSON, unknown references, or values the model rejects.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct ArrowEntry {
  std::string from;
  std::string to;
  IntMatrix matrix;
  friend bool operator==(const ArrowEntry&, const ArrowEntry&) = default;
};

struct ComplexEntry {
  int lo = 0;
  bool periodic = false;
  std::vector<std::string> objects;        // one per window degree
  std::vector<std::string> differentials;  // d^lo, d^{lo+1}, ...
  friend bool operator==(const ComplexEntry&, const ComplexEntry&) = default;
};

struct ChainMapEntry {
  std::string source;
  std::string target;
  std::map<int, std::string> components;
  friend bool operator==(const ChainMapEntry&, const ChainMapEntry&) = default;
};

struct SesEntry {
  std::string mono;
  std::string epi;
  friend bool operator==(const SesEntry&, const SesEntry&) = default;
};

struct SesMorphismEntry {
  std::string source;
  std::string target;
  std::string left;
  std::string middle;
  std::string right;
  friend bool operator==(const SesMorphismEntry&, const SesMorphismEntry&) = default;
};

// Named objects, morphisms and diagrams over one model. Morphisms refer to
// objects by name, so shared objects are stored once. Entries are kept in name
// order, which makes serialization deterministic.
struct Document {
  std::string version = kDocumentVersion;
  std::string model;
  std::map<std::string, Object> objects;
  std::map<std::string, ArrowEntry> morphisms;
  std::map<std::string, ComplexEntry> complexes;
  std::map<std::string, ChainMapEntry> chain_maps;
  std::map<std::string, SesEntry> sequences;
  std::map<std::string, SesMorphismEntry> ses_morphisms;

  // Adds the object, or checks that an object of that name is equal to it.
  void put_object(const std::string& name, const Object& a);
  void put_morphism(const std::string& name, const std::string& from, const std::string& to, const Morphism& f);
  // Arrows are stored as name.mono and name.epi.
  void put_ses(const std::string& name, const ShortExactSequence& s, const std::string& left,
               const std::string& middle, const std::string& right);
  // Objects name^n and differentials d.name^n.
  void put_complex(const std::string& name, const ChainComplex& x);
  // Components name^n for the degrees where both complexes have stored objects.
  void put_chain_map(const std::string& name, const ChainMap& f, const std::string& source,
                     const std::string& target);
  // Components name.left, name.middle, name.right between the stored sequences.
  void put_ses_morphism(const std::string& name, const SesMorphism& m, const std::string& source,
                        const std::string& target);

  Object object(const std::string& name) const;
  Morphism morphism(const std::string& name) const;
  ShortExactSequence ses(const std::string& name) const;
  SesMorphism ses_morphism(const std::string& name) const;
  ChainComplex complex(const ExactCategory& cat, const std::string& name) const;
  ChainMap chain_map(const ExactCategory& cat, const std::string& name) const;

  // Every reference resolves, every object lies in the model, every morphism
  // is well defined and every complex and chain map is valid. Throws ParseError.
  void validate(const ExactCategory& cat) const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Entries within 2^53 in absolute value are JSON numbers; larger ones are
// decimal strings. Both forms are accepted on input.
nlohmann::json integer_to_json(const Integer& a);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMatrix& m);
// Rows and columns are taken from the expected shape, so empty shapes survive.
IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);
nlohmann::json object_to_json(const Object& a);
Object object_from_json(const nlohmann::json& j);
nlohmann::json invariants_to_json(const IsoInvariants& inv);

nlohmann::json to_json(const Document& doc);
Document document_from_json(const nlohmann::json& j);
// Throws ParseError on malformed text or structure; does not validate against a model.
Document parse_document(std::string_view text);
std::string serialize(const Document& doc);

}  // namespace exact
