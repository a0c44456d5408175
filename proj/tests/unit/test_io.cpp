#include "doctest.h"

#include "exact/complexes/random_complex.hpp"
#include "exact/io/document.hpp"
#include "exact/io/models.hpp"
#include "exact/models/abelian_groups.hpp"

using namespace exact;
using nlohmann::json;

namespace {

const AbelianGroups fgab;
const GeneratorBounds small{3, 6, 4};

Document round_trip(const Document& d) { return parse_document(serialize(d)); }

}  // namespace

TEST_CASE("integers switch to decimal strings beyond 2^53") {
  const Integer limit = Integer(1) << 53;
  CHECK(integer_to_json(limit - 1).is_number_integer());
  CHECK(integer_to_json(-(limit - 1)).is_number_integer());
  CHECK(integer_to_json(limit).is_string());
  CHECK(integer_to_json(-limit).get<std::string>() == "-9007199254740992");
  const Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(json("-17")) == -17);
  CHECK(integer_from_json(json(42)) == 42);
  CHECK_THROWS_AS(integer_from_json(json("12x")), ParseError);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), ParseError);
}

TEST_CASE("matrices keep empty shapes") {
  const IntMatrix m(2, 0);
  const IntMatrix back = matrix_from_json(matrix_to_json(m), 2, 0);
  CHECK(back.rows() == 2);
  CHECK(back.cols() == 0);
  CHECK(matrix_from_json(json::array(), 0, 3).cols() == 3);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2]]"), 1, 3), ParseError);
}

TEST_CASE("objects round-trip with and without idempotents") {
  const Object a = AbelianGroups::cyclic(6);
  CHECK(object_from_json(object_to_json(a)) == a);
  const Object p(IntMatrix(2, 0), IntMatrix{{1, 0}, {0, 0}});
  CHECK(object_from_json(object_to_json(p)) == p);
  CHECK(object_from_json(object_to_json(Object())) == Object());
  // Relations may be omitted for free objects.
  CHECK(object_from_json(json::parse(R"({"generators": 2})")) == Object::free(2));
  CHECK_THROWS_AS(object_from_json(json::parse(R"({"relations": []})")), ParseError);
  CHECK_THROWS_AS(object_from_json(json::parse(R"({"generators": -1})")), ParseError);
}

TEST_CASE("documents round-trip every section") {
  Rng rng(7);
  Document d;
  d.model = fgab.name();
  const ShortExactSequence s = fgab.random_ses(rng, small);
  d.put_ses("s", s, "A", "B", "C");
  d.put_ses_morphism("id", identity_ses_morphism(fgab, s), "s", "s");
  const ChainComplex x = random_acyclic_complex(fgab, rng, 0, 3, small);
  const ChainComplex y = random_acyclic_complex(fgab, rng, 0, 3, small);
  d.put_complex("X", x);
  d.put_complex("Y", y);
  d.put_chain_map("f", random_chain_map(fgab, rng, x, y, small), "X", "Y");
  IntMatrix big(1, 1);
  big(0, 0) = Integer("99999999999999999999");
  d.put_object("big", Object(big));
  d.validate(fgab);

  const Document back = round_trip(d);
  CHECK(back == d);
  CHECK(serialize(back) == serialize(d));
  back.validate(fgab);
  CHECK(fgab.equal(back.ses("s").mono, s.mono));
  CHECK(back.complex(fgab, "X").degrees() == x.degrees());
  CHECK(is_valid(fgab, back.ses_morphism("id")));
}

TEST_CASE("put_object refuses to rebind a name") {
  Document d;
  d.put_object("A", Object::free(1));
  d.put_object("A", Object::free(1));
  CHECK_THROWS_AS(d.put_object("A", Object::free(2)), InvalidInput);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": "other/1", "model": "fgab", "objects": {}, "morphisms": {}})"),
                  ParseError);
  // Unknown object referenced by a morphism.
  const std::string dangling = R"({"version": "exactcat/1", "model": "fgab",
    "objects": {"A": {"generators": 1, "relations": [[]]}},
    "morphisms": {"f": {"from": "A", "to": "B", "matrix": [[1]]}}})";
  CHECK_THROWS_AS(parse_document(dangling), ParseError);
}

TEST_CASE("validation rejects arrows that are not well defined") {
  // Z/2 -> Z sending the generator to 1 does not respect the relation.
  const std::string text = R"({"version": "exactcat/1", "model": "fgab",
    "objects": {"A": {"generators": 1, "relations": [[2]]}, "B": {"generators": 1, "relations": [[]]}},
    "morphisms": {"f": {"from": "A", "to": "B", "matrix": [[1]]}}})";
  const Document d = parse_document(text);
  CHECK_THROWS_AS(d.validate(fgab), ParseError);
  CHECK_THROWS_AS(d.validate(*make_model("free")), ParseError);
}

TEST_CASE("model descriptors") {
  for (const std::string& name : base_model_names()) {
    const CategoryPtr cat = make_model(name);
    CHECK(cat->name() == name);
    CHECK(make_model(name + "-completion")->name() == name + "-completion");
  }
  CHECK(make_model("vect-5")->name() == "vect-5");
  CHECK_THROWS_AS(make_model("vect-4"), ParseError);
  CHECK_THROWS_AS(make_model("groups"), ParseError);
}
