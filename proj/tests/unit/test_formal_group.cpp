#include <doctest.h>

#include "jblocks/formal_group.hpp"
#include "oracle.hpp"

using namespace jblocks;

TEST_CASE("built-in laws") {
  CHECK(FormalGroupLaw::additive().law().to_string() == "u + v");
  CHECK(FormalGroupLaw::multiplicative().law().to_string() == "u + v + uv");
  const auto scaled = FormalGroupLaw::scaled_multiplicative(Rational(7)).law();
  CHECK(scaled.coefficient(1, 1) == 7);
  CHECK(scaled.coefficient(2, 1) == 0);
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    CHECK(validate_fgl(FormalGroupLaw::additive(), FieldSpec(p), 6).ok());
    CHECK(validate_fgl(FormalGroupLaw::multiplicative(), FieldSpec(p), 6).ok());
    CHECK(validate_fgl(scaled, FieldSpec(p), 6).ok());
  }
}

TEST_CASE("logarithm laws satisfy the axioms over every field") {
  // g(t) = t + t^2 gives F = g^{-1}(g(u) + g(v)); check by recomputing g(F).
  auto law = FormalGroupLaw::from_logarithm({Integer(1)}, 6).law();
  CHECK(law.coefficient(1, 1) == -2);
  for (unsigned p : {0u, 2u, 3u, 7u}) CHECK(validate_fgl(law, FieldSpec(p), 6).ok());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto random = random_formal_group_law(seed, 7).law();
    CHECK(validate_fgl(random, FieldSpec(2), 7).ok());
    CHECK(validate_fgl(random, FieldSpec(0), 7).ok());
  }
}

TEST_CASE("a broken law is rejected") {
  GeneralizedLaw::Coefficients c{{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}};
  GeneralizedLaw law(c, std::nullopt, "broken");
  auto report = validate_fgl(law, FieldSpec(5), 4);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.commutative);
  CHECK_THROWS_AS(FormalGroupLaw::certify(law, FieldSpec(5), 4), MathError);
}

TEST_CASE("generalized law contracts") {
  GeneralizedLaw::Coefficients c{{{1, 0}, 3}, {{0, 1}, 1}, {{1, 1}, 2}};
  GeneralizedLaw law(c, 3);
  CHECK(law.xi1() == 3);
  CHECK(law.known_to_degree(3));
  CHECK_FALSE(law.known_to_degree(4));
  CHECK_THROWS_AS(law.series(PrimeField(3), {2, 2}), MathError);  // xi_1 = 0 mod 3
  CHECK_THROWS_AS(law.series(RationalField{}, {3, 4}), MathError);  // needs degree 5
  auto f = law.series(PrimeField(5), {2, 2});
  CHECK(f.coefficient({1, 1}) == 2);
  GeneralizedLaw::Coefficients zero{{{1, 0}, 0}, {{0, 1}, 1}};
  CHECK_THROWS_AS(GeneralizedLaw(zero, std::nullopt), MathError);
}

TEST_CASE("iterated tensor series of the additive law is the sum") {
  RationalField q;
  auto f = iterated_tensor_series(FormalGroupLaw::additive().law(), q, {3, 3, 3});
  TruncatedPoly<RationalField> s(q, {3, 3, 3});
  for (std::size_t i = 0; i < 3; ++i) s += TruncatedPoly<RationalField>::variable(q, {3, 3, 3}, i);
  CHECK(f == s);
}
