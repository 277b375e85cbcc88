#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "grgrad/document.hpp"
#include "grgrad/errors.hpp"
#include "grgrad/report.hpp"
#include "support.hpp"

using namespace grgrad;
using grgrad::testing::share;

namespace {

const char* kTiny = R"({
  "prime": 3,
  "groupoid": {"builder": "trivial"},
  "basis": [{"name": "1", "degree": "e"}, {"name": "x", "degree": "e"}],
  "products": [["1","1","1",1], ["1","x","x",1], ["x","1","x",1]],
  "units": {"e": [["1",1]]}
})";

}  // namespace

TEST_CASE("parse a small algebra") {
  const RingDocument doc = parse_document(kTiny);
  CHECK(doc.prime() == 3);
  CHECK(doc.ring->dim() == 2);
  CHECK(validate_document(doc).ok());
  CHECK(same_structure(*doc.ring, truncated_polynomial_algebra(3, 2)));
}

TEST_CASE("emit then parse is the identity, and emission is canonical") {
  for (const auto& [name, r] : grgrad::testing::base_rings()) {
    INFO(name);
    const RingDocument doc = make_document(r);
    const std::string text = emit_document(doc);
    const RingDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(emit_document(back) == text);
  }
}

TEST_CASE("builders through build_document") {
  BuildRequest req;
  req.kind = "ut";
  req.prime = 2;
  req.poset = PosetSpec::parse("finite:1<2<3");
  const RingDocument doc = build_document(req);
  CHECK(doc.ring->dim() == 6);
  CHECK(doc.builder == "pair:3");
  for (const char* kind : {"field", "poly:3", "matrix:2", "block:1,1,2", "group:Z/3", "category:2,1"}) {
    INFO(std::string(kind));
    BuildRequest b;
    b.kind = kind;
    b.prime = 3;
    if (b.kind.starts_with("category")) b.coefficients = "poly:2";
    CHECK(validate_document(build_document(b)).ok());
  }
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"prime": 4})"), DocumentError);
  std::string unknown = kTiny;
  unknown.replace(unknown.find("\"prime\""), 7, "\"primes\"");
  CHECK_THROWS_AS(parse_document(unknown), DocumentError);
  std::string bad_name = kTiny;
  bad_name.replace(bad_name.find("[\"x\",\"1\",\"x\",1]"), 15, "[\"y\",\"1\",\"x\",1]");
  CHECK_THROWS_AS(parse_document(bad_name), DocumentError);
}

TEST_CASE("explicit groupoid tables") {
  const char* text = R"({
    "prime": 2,
    "groupoid": {
      "morphisms": [{"name":"a","source":"a","target":"a"}, {"name":"b","source":"b","target":"b"},
                    {"name":"f","source":"a","target":"b"}, {"name":"g","source":"b","target":"a"}],
      "composition": [["f","g","b"], ["g","f","a"]]
    },
    "basis": [{"name":"ea","degree":"a"}],
    "products": [["ea","ea","ea",1]],
    "units": {"a": [["ea",1]]}
  })";
  const RingDocument doc = parse_document(text);
  CHECK(doc.ring->groupoid().size() == 4);
  CHECK(validate_document(doc).ok());

  std::string broken = text;
  broken.replace(broken.find("[\"g\",\"f\",\"a\"]"), 13, "[\"g\",\"f\",\"b\"]");
  CHECK_THROWS_AS(parse_document(broken), ValidationFailure);
}

TEST_CASE("ring axiom violations are reported, not thrown") {
  std::string bad = kTiny;
  bad.replace(bad.find("[\"x\",\"1\",\"x\",1]"), 15, "[\"x\",\"1\",\"1\",1]");
  const RingDocument doc = parse_document(bad);
  CHECK_FALSE(validate_document(doc).ok());
}

TEST_CASE("modules inside documents") {
  const RingPtr r = share(build_ut(field_algebra(2), Poset::chain(2)));
  const RingDocument doc = make_document(r, "pair:2", {{"reg", regular_module(r)}});
  const RingDocument back = parse_document(emit_document(doc));
  CHECK(back.module("reg") == regular_module(back.ring));
  CHECK_THROWS_AS(back.module("other"), InputError);
}

TEST_CASE("reports are deterministic") {
  BuildRequest req;
  req.kind = "ut";
  req.poset = PosetSpec::parse("finite:1<2<3");
  const RingDocument doc = build_document(req);
  for (const char* cmd : {"validate", "radical", "socle", "loewy", "compseries", "semisimple", "semilocal", "fitting",
                          "injective"}) {
    INFO(std::string(cmd));
    const Report a = run_document_command(cmd, doc, {});
    CHECK(render(a, Format::Json) == render(run_document_command(cmd, doc, {}), Format::Json));
    CHECK_FALSE(render(a, Format::Text).empty());
  }
  const Report rad = run_document_command("radical", doc, {});
  CHECK(rad.at("radical").at("total_dim").get<int>() == 3);
  CHECK_THROWS_AS(run_document_command("frobnicate", doc, {}), InputError);
}

TEST_CASE("chain reports") {
  ChainQuery q{PosetSpec::parse("ordinal:w+1"), ChainSide::Left, ChainCondition::Noetherian, {}};
  const Report r = classify_chains_report(q);
  CHECK(r.dump().find("fails") != std::string::npos);
  const Report w = witness_report(PosetSpec::parse("ordinal:w"), 1, 4, std::string("1"));
  CHECK(w.dump().find("E(1,5)R") != std::string::npos);
}
