#include <doctest.h>

#include "burge/json_io.hpp"

using namespace burge;

TEST_CASE("rational arrays round-trip") {
  const ShapedArray<Rational> w(Shape({2, 1}), {{Rational(6, 5), Rational(2)}, {Rational(8)}});
  const json j = to_json(w);
  CHECK(j.dump() == R"({"domain":"geom-rational","rows":[["6/5","2/1"],["8/1"]],"shape":[2,1]})");
  const auto back = std::get<ShapedArray<Rational>>(array_from_json(j));
  CHECK(back == w);
}

TEST_CASE("float and tropical arrays round-trip") {
  const ShapedArray<double> f(std::vector<std::vector<double>>{{0.5, 1.25}});
  CHECK(std::get<ShapedArray<double>>(array_from_json(to_json(f))) == f);
  const ShapedArray<Tropical> t(std::vector<std::vector<Tropical>>{{Tropical(1.0), boundary_zero<Tropical>()}});
  const json jt = to_json(t);
  CHECK(jt["rows"][0][1] == "-inf");
  CHECK(std::get<ShapedArray<Tropical>>(array_from_json(jt)) == t);
}

TEST_CASE("bare rows infer shape and domain") {
  const auto a = array_from_json(json::parse("[[2,1],[4,3]]"));
  REQUIRE(std::holds_alternative<ShapedArray<Rational>>(a));
  CHECK(std::get<ShapedArray<Rational>>(a).at(2, 1) == 4);
  const auto b = array_from_json(json::parse(R"([["1/2", 3], [4]])"));
  CHECK(std::get<ShapedArray<Rational>>(b).shape() == Shape({2, 1}));
  CHECK(std::holds_alternative<ShapedArray<double>>(array_from_json(json::parse("[[0.5]]"))));
}

TEST_CASE("growth sequences") {
  const GrowthSequence g{{Box{1, 1}, Box{2, 1}, Box{1, 2}}};
  CHECK(growth_to_json(g).dump() == "[[1,1],[2,1],[1,2]]");
  CHECK(growth_from_json(growth_to_json(g)).boxes == g.boxes);
}

TEST_CASE("parse errors") {
  auto code_of = [](const json& j) {
    try {
      array_from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_shape;
  };
  CHECK(code_of(json::parse(R"({"shape":[1]})")) == Errc::parse_error);
  CHECK(code_of(json::parse(R"([[1.5, "x"]])")) == Errc::parse_error);
  CHECK(code_of(json::parse(R"({"rows":[[1]],"domain":"complex"})")) == Errc::parse_error);
  CHECK_THROWS_AS(array_from_json(json::parse(R"({"rows":[[1, 2]],"shape":[3]})")), Error);
  CHECK_THROWS_AS(array_from_json(json::parse("[[1],[2,3]]")), Error);
}
