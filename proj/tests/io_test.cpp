#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace torelli;
using nlohmann::json;

TEST_CASE("endo json roundtrip keeps images and inverse") {
  FreeEndo t = meridian_twist(2, 1, Boundary::admissible);
  json j = endo_to_json(t);
  CHECK(j["genus"] == 2);
  CHECK(j["boundary"] == "admissible");
  CHECK(j["images"].contains("x1"));
  CHECK(j["images"].contains("y2"));
  CHECK(j.contains("inverse_images"));

  FreeEndo back = endo_from_json(j);
  CHECK(back.g == t.g);
  CHECK(back.conv == t.conv);
  CHECK(back.im == t.im);
  REQUIRE(back.inv.has_value());
  CHECK(*back.inv == *t.inv);
}

TEST_CASE("endo json accepts a literal without inverse images") {
  json j = json::parse(R"({"genus": 1, "boundary": "admissible",
                           "images": {"x1": "x1", "y1": "y1 x1"}})");
  FreeEndo f = endo_from_json(j);
  CHECK(f.g == 1);
  CHECK_FALSE(f.inv.has_value());
  CHECK(f.im == meridian_twist(1, 1, Boundary::admissible).im);
}

TEST_CASE("endo json rejects malformed input") {
  CHECK_THROWS_AS(endo_from_json(json::parse("[]")), error);
  CHECK_THROWS_AS(endo_from_json(json::parse(R"({"images": {}})")), error);
  CHECK_THROWS_AS(
      endo_from_json(json::parse(R"({"genus": 1, "images": {"x1": "x1"}})")),
      error);
  // wrong inverse for the meridian twist
  CHECK_THROWS_AS(endo_from_json(json::parse(
                      R"({"genus": 1, "boundary": "admissible",
                          "images": {"x1": "x1", "y1": "y1 x1"},
                          "inverse_images": {"x1": "x1", "y1": "y1 x1"}})")),
                  error);
  // image table that moves the boundary word
  CHECK_THROWS_AS(endo_from_json(json::parse(
                      R"({"genus": 1, "boundary": "admissible",
                          "images": {"x1": "x1", "y1": "x1"}})")),
                  error);
}

TEST_CASE("braid json accepts a word form") {
  json j = json::parse(R"({"strands": 2, "word": "A12"})");
  PureBraid a = braid_from_json(j);
  PureBraid b = artin_generator(2, 1, 2);
  CHECK(a.g == 2);
  CHECK(a.lam == b.lam);
  CHECK(a.framing == b.framing);

  json with_framing = json::parse(R"({"strands": 2, "word": "A12", "framings": [1, -2]})");
  PureBraid c = braid_from_json(with_framing);
  CHECK(c.framing == std::vector<Int>{Int(1), Int(-2)});
}

TEST_CASE("braid json roundtrip through longitudes") {
  PureBraid a = braid_compose(artin_generator(3, 1, 3), framing_twist(3, 2, -1));
  json j = braid_to_json(a);
  CHECK(j["strands"] == 3);
  CHECK(j["longitudes"].size() == 3);
  CHECK(j["framings"] == json::parse("[0, -1, 0]"));

  PureBraid back = braid_from_json(j);
  CHECK(back.lam == a.lam);
  CHECK(back.framing == a.framing);
  if (a.lam_inv) {
    REQUIRE(back.lam_inv.has_value());
    CHECK(*back.lam_inv == *a.lam_inv);
  }
}

TEST_CASE("braid json rejects malformed input") {
  CHECK_THROWS_AS(braid_from_json(json::parse(R"({"word": "A12"})")), error);
  CHECK_THROWS_AS(
      braid_from_json(json::parse(R"({"strands": 2, "word": "A12", "longitudes": []})")),
      error);
  CHECK_THROWS_AS(braid_from_json(json::parse(R"({"strands": 2})")), error);
  CHECK_THROWS_AS(
      braid_from_json(json::parse(R"({"strands": 2, "word": "A12", "framings": [1]})")),
      error);
  CHECK_THROWS_AS(
      braid_from_json(json::parse(R"({"strands": 2, "longitudes": ["x1"]})")),
      error);
  // longitude data that is not a pure braid
  CHECK_THROWS_AS(
      braid_from_json(json::parse(R"({"strands": 2, "longitudes": ["x2", ""]})")),
      error);
}

TEST_CASE("load_json_argument reads literals and files") {
  json lit = load_json_argument(R"({"a": 1})");
  CHECK(lit["a"] == 1);

  const std::string path = "io_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"strands": 2, "word": "A12"})";
  }
  json from_file = load_json_argument(path);
  CHECK(from_file["word"] == "A12");
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_argument("definitely_missing_file.json"), error);
}
