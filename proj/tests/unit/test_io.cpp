#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "jblocks/io.hpp"
#include "oracle.hpp"

using namespace jblocks;
using io::Json;

TEST_CASE("partition json") {
  const Partition lambda{8, 8, 5};
  CHECK(io::to_json(lambda).dump() == "[8,8,5]");
  CHECK(io::partition_from_json(io::to_json(lambda)) == lambda);
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("[1, 3]")), MathError);
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("[2, 0]")), MathError);
  CHECK_THROWS_AS(io::partition_from_json(Json::parse("{}")), MathError);
}

TEST_CASE("ring element json") {
  auto x = RingElement::from_partition(Partition{8, 8, 4, 1});
  auto j = io::to_json(x);
  CHECK(j["terms"][0]["n"] == 8);
  CHECK(j["terms"][0]["a"] == 2);
  CHECK(io::ring_element_from_json(j) == x);
  CHECK_THROWS_AS(io::ring_element_from_json(Json::parse(R"({"terms": [{"n": 1}]})")), MathError);
}

TEST_CASE("series json") {
  PrimeField k(7);
  auto f = TruncatedPoly<PrimeField>::variable(k, {3, 2}, 0) * TruncatedPoly<PrimeField>::variable(k, {3, 2}, 1);
  f.add_term({2, 0}, 5);
  CHECK(io::series_from_json(k, io::to_json(f)) == f);
  auto g = io::series_from_json(RationalField{}, Json::parse(R"({"trunc": [4], "terms": [{"exp": [1], "c": "3/2"}]})"));
  CHECK(g.coefficient({1}) == Rational(3, 2));
  CHECK_THROWS_AS(io::series_from_json(k, Json::parse(R"({"trunc": [4], "terms": [{"exp": [1, 1], "c": 1}]})")),
                  MathError);
  CHECK_THROWS_AS(io::series_from_json(k, Json::parse(R"({"vars": 2, "trunc": [4]})")), MathError);
}

TEST_CASE("law files") {
  const auto law = FormalGroupLaw::from_logarithm({Integer(1), Integer(-2)}, 5).law();
  auto j = io::to_json(law, 3u);
  auto back = io::law_from_json(j);
  CHECK(back.p == 3u);
  CHECK(back.law == law);

  const auto path = std::filesystem::temp_directory_path() / "jblocks_test_law.json";
  {
    std::ofstream out(path);
    out << R"({"coeffs": [{"a": 1, "b": 1, "c": "1"}]})";
  }
  auto file = io::load_law_file(path);
  CHECK_FALSE(file.p.has_value());
  CHECK(file.law == FormalGroupLaw::multiplicative().law());
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::load_law_file(path), MathError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::law_from_json(Json::parse(R"({"p": 4})")), MathError);
  CHECK_THROWS_AS(io::load_law_file("/nonexistent/law.json"), MathError);
}

TEST_CASE("report json") {
  auto j = io::to_json(good_char_report(ClassicalKind::SO, Partition{7}, 2));
  CHECK(j["ad"] == Json::parse("[7,7,7]"));
  CHECK(j["Ad"] == Json::parse("[8,8,5]"));
  CHECK(j["bad_characteristic"] == true);
  auto c = io::to_json(check_theorem(ClassicalKind::Sp, Partition{4}));
  CHECK(c["weyl_type"] == "C2");
  CHECK(io::partition_from_json(c["predicted"]) == Partition{7, 3});
}
