#include <doctest.h>

#include "jblocks/classical.hpp"
#include "oracle.hpp"

using namespace jblocks;

TEST_CASE("classical partition validity") {
  CHECK(validate_classical_partition(ClassicalKind::GL, Partition{3, 1}));
  CHECK(validate_classical_partition(ClassicalKind::Sp, Partition{4, 3, 3}));
  CHECK_FALSE(validate_classical_partition(ClassicalKind::Sp, Partition{3, 1}));
  CHECK(validate_classical_partition(ClassicalKind::SO, Partition{5, 2, 2}));
  CHECK_FALSE(validate_classical_partition(ClassicalKind::SO, Partition{4, 1}));
  CHECK(parse_classical_kind("sp") == ClassicalKind::Sp);
  CHECK_THROWS_AS(parse_classical_kind("E8"), MathError);
  CHECK(is_good_prime(ClassicalKind::GL, 2));
  CHECK_FALSE(is_good_prime(ClassicalKind::SO, 2));
}

TEST_CASE("Cayley series times (1 + t) is 1 - t") {
  PrimeField k(7);
  auto eps = cayley_series(k, 6);
  auto one = TruncatedPoly<PrimeField>::constant(k, {6}, 1);
  auto t = TruncatedPoly<PrimeField>::variable(k, {6}, 0);
  CHECK((one + eps) * (one + t) == one - t);
  CHECK_THROWS_AS(cayley_series(PrimeField(2), 4), MathError);
  CHECK(default_springer_series(PrimeField(2), 4) == TruncatedPoly<PrimeField>::variable(PrimeField(2), {4}, 0));
}

TEST_CASE("Cayley image of a symplectic nilpotent preserves the form") {
  PrimeField k(5);
  // J = [[0, I], [-I, 0]]; X = [[A, B], [0, -A^T]] with B symmetric lies in sp_6.
  auto x = Matrix<PrimeField>::from_rows(
      k, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0},
          {0, 0, 0, 0, -1, 0}});
  auto j = Matrix<PrimeField>::from_rows(
      k, {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0},
          {0, 0, -1, 0, 0, 0}});
  REQUIRE((x.transpose() * j + j * x).is_zero());
  auto u = springer_image(cayley_series(k, 7), x);
  CHECK(u.transpose() * j * u == j);
  CHECK(unipotent_partition(u) == jordan_partition(x));
  CHECK_THROWS_AS(springer_image(TruncatedPoly<PrimeField>::univariate(k, 7, {1, 1}), x), MathError);
  CHECK_THROWS_AS(springer_image(TruncatedPoly<PrimeField>::univariate(k, 7, {0, 0, 1}), x), MathError);
}

TEST_CASE("regular adjoint partitions in characteristic zero") {
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(nilpotent_adjoint_partition(ClassicalKind::GL, Partition{n}, FieldSpec(0)) ==
          Partition(oracle::clebsch_gordan(n, n)));
  // Sym^2 J_{2r} and /\^2 J_{2r+1}: blocks 4r-1, 4r-5, ... and 4r-1, 4r-5, ...
  CHECK(nilpotent_adjoint_partition(ClassicalKind::Sp, Partition{4}, FieldSpec(0)) == Partition{7, 3});
  CHECK(nilpotent_adjoint_partition(ClassicalKind::SO, Partition{5}, FieldSpec(0)) == Partition{7, 3});
  CHECK(nilpotent_adjoint_partition(ClassicalKind::SO, Partition{7}, FieldSpec(0)) == Partition{11, 7, 3});
}

TEST_CASE("adjoint partitions agree at good primes") {
  for (unsigned p : {3u, 5u, 7u}) {
    CHECK(good_char_report(ClassicalKind::Sp, Partition{4, 2}, p).equal);
    CHECK(good_char_report(ClassicalKind::SO, Partition{5, 3, 1}, p).equal);
    CHECK(good_char_report(ClassicalKind::GL, Partition{4, 2, 1}, p).equal);
  }
  CHECK(good_char_report(ClassicalKind::GL, Partition{3, 3}, 2).equal);
}

TEST_CASE("bad characteristic") {
  auto sp = good_char_report(ClassicalKind::Sp, Partition{4}, 2);
  CHECK(sp.bad_characteristic);
  CHECK(sp.nilpotent == Partition{4, 4, 1, 1});
  CHECK(sp.unipotent == Partition{4, 4, 2});
  auto so = good_char_report(ClassicalKind::SO, Partition{7}, 2);
  CHECK(so.nilpotent == Partition{7, 7, 7});
  CHECK(so.unipotent == Partition{8, 8, 5});
  CHECK_FALSE(so.equal);
}

TEST_CASE("custom Springer series") {
  const std::vector<Rational> coeffs{Rational(3), Rational(1, 2), Rational(-1)};
  CHECK(unipotent_adjoint_partition(ClassicalKind::Sp, Partition{4, 2}, FieldSpec(5), coeffs) ==
        nilpotent_adjoint_partition(ClassicalKind::Sp, Partition{4, 2}, FieldSpec(5)));
  const std::vector<Rational> degenerate{Rational(5)};
  CHECK_THROWS_AS(unipotent_adjoint_partition(ClassicalKind::Sp, Partition{4}, FieldSpec(5), degenerate), MathError);
}
