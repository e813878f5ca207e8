#include <doctest.h>

#include <random>

#include "jblocks/formal_group.hpp"
#include "jblocks/jordan.hpp"
#include "jblocks/rep_ring.hpp"
#include "oracle.hpp"

using namespace jblocks;

namespace {

using Poly = TruncatedPoly<RationalField>;

Poly univariate(std::vector<long> coeffs, unsigned r) {
  std::vector<Rational> cs;
  for (long c : coeffs) cs.emplace_back(c);
  cs.resize(r, Rational(0));
  return Poly::univariate(RationalField{}, r, cs);
}

}  // namespace

TEST_CASE("product truncates each variable separately") {
  RationalField q;
  auto y = Poly::variable(q, {3, 2}, 0), z = Poly::variable(q, {3, 2}, 1);
  auto s = y + z;
  auto s2 = s * s;
  CHECK(s2.coefficient({2, 0}) == 1);
  CHECK(s2.coefficient({1, 1}) == 2);
  CHECK(s2.coefficient({0, 2}) == 0);
  CHECK((s * s * s * s).is_zero());
  CHECK(s.pow(3).coefficient({2, 1}) == 3);
}

TEST_CASE("univariate product matches a hand convolution") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> a(7), b(7);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    auto prod = univariate(a, 7) * univariate(b, 7);
    for (unsigned k = 0; k < 7; ++k) {
      long want = 0;
      for (unsigned i = 0; i <= k; ++i) want += a[i] * b[k - i];
      CHECK(prod.coefficient({k}) == want);
    }
  }
}

TEST_CASE("compositional inverse") {
  // t/(1-t) = t + t^2 + ... has inverse t/(1+t) = t - t^2 + t^3 - ...
  auto f = univariate({0, 1, 1, 1, 1, 1, 1}, 7);
  auto g = compose_inverse(f);
  for (unsigned k = 1; k < 7; ++k) CHECK(g.coefficient({k}) == (k % 2 ? 1 : -1));
  CHECK(substitute(f, {g}) == Poly::variable(RationalField{}, {7}, 0));

  PrimeField k2(2);
  auto h = TruncatedPoly<PrimeField>::univariate(k2, 6, {0, 1, 1, 0, 1, 1});
  auto hi = compose_inverse(h);
  CHECK(substitute(hi, {h}) == TruncatedPoly<PrimeField>::variable(k2, {6}, 0));

  CHECK_THROWS_AS(compose_inverse(univariate({1, 1}, 3)), MathError);
  CHECK_THROWS_AS(compose_inverse(univariate({0, 0, 1}, 3)), MathError);
}

TEST_CASE("symmetric split of the multiplicative tensor series") {
  RationalField q;
  const std::vector<unsigned> trunc(3, 3);
  auto f = iterated_tensor_series(FormalGroupLaw::multiplicative().law(), q, trunc);
  CHECK(f.is_symmetric());
  // (1+y1)(1+y2)(1+y3) - 1
  CHECK(f.coefficient({1, 1, 1}) == 1);
  CHECK(f.coefficient({2, 0, 0}) == 0);
  auto parts = symmetric_split(f);
  REQUIRE(parts.size() == 3);
  Poly sum(q, trunc);
  for (const auto& part : parts) sum += part;
  CHECK(sum == f);
  for (unsigned i = 0; i < 3; ++i) CHECK(parts[i].coefficient(Exponent{i == 0, i == 1, i == 2}) == 1);
}

TEST_CASE("multiplication operator is a ring map") {
  RationalField q;
  auto y = Poly::variable(q, {3, 4}, 0), z = Poly::variable(q, {3, 4}, 1);
  auto a = y + z * z, b = y * z - z;
  CHECK(multiplication_operator(a * b) == multiplication_operator(a) * multiplication_operator(b));
  CHECK(jordan_partition(multiplication_operator(y + z)) == Partition{6, 4, 2});
}

TEST_CASE("series applied to a nilpotent") {
  RationalField q;
  auto n = jordan_block(q, 4);
  auto f = univariate({0, 2, 5, 1}, 4);
  Matrix<RationalField> want(q, 4, 4);
  want.add_scaled(n, Rational(2));
  want.add_scaled(n * n, Rational(5));
  want.add_scaled(n * n * n, Rational(1));
  CHECK(apply_series(f, n) == want);
  CHECK_THROWS_AS(apply_series(univariate({0, 1}, 2), n), MathError);
}
