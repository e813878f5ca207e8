#include <doctest.h>

#include <random>

#include "jblocks/jordan.hpp"
#include "oracle.hpp"

using namespace jblocks;

TEST_CASE("prime field arithmetic agrees with brute force") {
  for (unsigned p : {2u, 3u, 5u, 13u}) {
    PrimeField k(p);
    for (unsigned a = 1; a < p; ++a) CHECK(k.inv(a) == oracle::inv_mod(a, p));
    CHECK(k.from_int(-1) == p - 1);
    if (p != 2) CHECK(k.from_rational(Rational(1, 2)) == oracle::inv_mod(2, p));
    else CHECK_THROWS_AS(k.from_rational(Rational(1, 2)), MathError);
  }
  CHECK_THROWS_AS(PrimeField(4), MathError);
  CHECK(PrimeField(7).from_rational(Rational(3, 4)) == 6);
}

TEST_CASE("rationals parse canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
  CHECK_THROWS_AS(parse_rational("x"), MathError);
}

TEST_CASE("partition notation") {
  CHECK(Partition::parse("(8^2,5)") == Partition{8, 8, 5});
  CHECK(Partition::parse("3 2 2") == Partition{3, 2, 2});
  CHECK(Partition::parse("[1, 3]") == Partition{3, 1});
  CHECK(Partition{8, 8, 5}.to_string() == "(8^2,5)");
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  CHECK(Partition{5}.conjugate() == Partition::ones(5));
  CHECK(partition_difference(Partition{7, 7, 3, 1}, Partition{7, 1}) == Partition{7, 3});
  CHECK_THROWS_AS(partition_difference(Partition{3}, Partition{2}), MathError);
  CHECK(partition_union(Partition{3}, Partition{4, 1}) == Partition{4, 3, 1});
}

TEST_CASE("conjugation is an involution") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto lambda = oracle::random_partition(rng, 20, 9);
    CHECK(lambda.conjugate().conjugate() == lambda);
    CHECK(lambda.conjugate().size() == lambda.size());
  }
}

TEST_CASE("matrix inverse and rank") {
  PrimeField k(7);
  auto a = Matrix<PrimeField>::from_rows(k, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix<PrimeField>::identity(k, 3));
  auto singular = Matrix<PrimeField>::from_rows(k, {{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(singular).has_value());
  CHECK(rank(singular) == 1);
}

TEST_CASE("jordan partition survives random conjugation") {
  std::mt19937_64 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField k(p);
    std::uniform_int_distribution<unsigned> entry(0, p - 1);
    for (int trial = 0; trial < 30; ++trial) {
      auto lambda = oracle::random_partition(rng, 12, 6);
      const std::size_t d = lambda.size();
      Matrix<PrimeField> g(k, d, d);
      std::optional<Matrix<PrimeField>> gi;
      do {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) g(i, j) = entry(rng);
        gi = inverse(g);
      } while (!gi);
      auto n = g * nilpotent_from_partition(k, lambda) * *gi;
      CHECK(jordan_partition(n) == lambda);
      CHECK(oracle::jordan(oracle::to_dense(n), p) == lambda);
    }
  }
}

TEST_CASE("rational jordan partition and errors") {
  RationalField q;
  auto n = Matrix<RationalField>::from_rows(q, {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(jordan_partition(n) == Partition{3});
  CHECK(nilpotency_degree(n) == 3);
  CHECK_THROWS_AS(jordan_partition(Matrix<RationalField>::identity(q, 2)), MathError);
  CHECK_THROWS_AS(jordan_partition(Matrix<RationalField>(q, 2, 3)), MathError);
  CHECK(unipotent_partition(Matrix<RationalField>::identity(q, 3) + n) == Partition{3});
}

TEST_CASE("truncated exponential needs small nilpotency degree") {
  PrimeField k(3);
  CHECK_THROWS_AS(exp_nilpotent(jordan_block(k, 4)), MathError);
  auto u = exp_nilpotent(jordan_block(k, 3));
  CHECK(unipotent_partition(u) == Partition{3});
}
