#include "doctest.h"

#include <fstream>
#include <sstream>

#include "dp6/surface_io.hpp"

using namespace dp6::surface_io;
using dp6::QZ;

namespace {

std::string fixture(const std::string& name) { return std::string(DP6_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kMinimal = R"({
  "places": ["v"],
  "K": {"components": [{"degree": 1, "splitting": {"v": [1]}}, {"degree": 1, "splitting": {"v": [1]}}]},
  "L": {"components": [{"degree": 3, "splitting": {"v": [3]}}]}
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("parse the worked model") {
  SurfaceInput in = load_surface_file(fixture("worked_model.json"));
  CHECK(in.algebras->k->degree() == 2);
  CHECK(in.algebras->l->degree() == 3);
  CHECK(in.b.at(*in.algebras->k->find_place("0:v1:0")) == QZ(1, 3));
  CHECK(in.q.at(*in.algebras->l->find_place("0:v2:1")) == QZ(1, 2));
  CHECK(in.standard_automorphisms);
  CHECK(in.l_automorphisms.size() == 1);
  REQUIRE(in.algebras_d.size() == 1);
  CHECK(in.algebras_d[0].first == "D");
  CHECK(in.algebras_d[0].second.index() == 2);
  CHECK_NOTHROW(in.surface());
}

TEST_CASE("named algebras keep their input order") {
  SurfaceInput in = load_surface_file(fixture("named_algebras.json"));
  REQUIRE(in.algebras_d.size() == 3);
  CHECK(in.algebras_d[0].first == "quaternion");
  CHECK(in.algebras_d[1].first == "cubic");
  CHECK(in.algebras_d[2].first == "matrix");
  CHECK(in.algebras_d[1].second.index() == 3);
  CHECK(in.algebras_d[2].second.index() == 1);
  CHECK(in.l_automorphisms.empty());
}

TEST_CASE("omitted classes are zero") {
  SurfaceInput in = parse_surface(kMinimal);
  CHECK(in.b.is_zero());
  CHECK(in.q.is_zero());
  CHECK(in.algebras_d.empty());
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_surface("{"), InputError);
  CHECK_THROWS_AS(parse_surface("[]"), InputError);
  CHECK_THROWS_AS(parse_surface(R"({"places": ["v"]})"), InputError);
  CHECK_THROWS_AS(load_surface_file(fixture("malformed_fraction.json")), InputError);
  CHECK_THROWS_AS(load_surface_file(fixture("does_not_exist.json")), InputError);

  std::string text = kMinimal;
  CHECK_THROWS_AS(parse_surface(replace(text, R"("places": ["v"])", R"("places": ["v", "v"])")), InputError);
  CHECK_THROWS_AS(parse_surface(replace(text, R"("v": [3])", R"("v": [2])")), InputError);
  CHECK_THROWS_AS(parse_surface(replace(text, R"("degree": 3)", R"("degree": 4)")), InputError);
  std::string with_b = replace(text, "\n}", R"(, "B": {"invariants": {"0:w:0": "1/2"}}})");
  CHECK_THROWS_AS(parse_surface(with_b), InputError);
  std::string bad_fraction = replace(text, "\n}", R"(, "B": {"invariants": {"0:v:0": "1/0"}}})");
  CHECK_THROWS_AS(parse_surface(bad_fraction), InputError);
  std::string reciprocity = replace(text, "\n}", R"(, "B": {"invariants": {"0:v:0": "1/2"}}})");
  CHECK_THROWS_AS(parse_surface(reciprocity), InputError);
  std::string d_index = replace(text, "\n}", R"(, "D": {"degree": 1, "invariants": {"v": "1/2"}}})");
  CHECK_THROWS_AS(parse_surface(d_index), InputError);
}

TEST_CASE("malformed fraction message") {
  try {
    load_surface_file(fixture("malformed_fraction.json"));
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("lowest terms") != std::string::npos);
  }
}

TEST_CASE("invalid pair parses but has no surface") {
  SurfaceInput in = load_surface_file(fixture("invalid_pair.json"));
  CHECK_THROWS_AS(in.surface(), std::invalid_argument);
}

TEST_CASE("normalized JSON round trip") {
  for (const char* name : {"worked_model.json", "named_algebras.json", "all_zero.json"}) {
    CAPTURE(name);
    SurfaceInput in = load_surface_file(fixture(name));
    std::string once = normalized_json(in);
    std::string twice = normalized_json(parse_surface(once));
    CHECK(once == twice);
  }
  std::string text = normalized_json(load_surface_file(fixture("worked_model.json")));
  CHECK(text.find("\"L_automorphisms\": \"standard\"") != std::string::npos);
  CHECK(text.find("\"0:v1:1\": \"2/3\"") != std::string::npos);
  CHECK(read_file(fixture("worked_model.json")).find("standard") != std::string::npos);
}
