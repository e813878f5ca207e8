#include <doctest.h>

#include "jblocks/char0.hpp"
#include "oracle.hpp"

using namespace jblocks;

TEST_CASE("exponents and the classical identities") {
  CHECK(parse_weyl_type("A3").exponents == std::vector<unsigned>{1, 2, 3});
  CHECK(parse_weyl_type("G2").exponents == std::vector<unsigned>{1, 5});
  CHECK(parse_weyl_type("D4").exponents == std::vector<unsigned>{1, 3, 3, 5});
  CHECK(parse_weyl_type("E8").exponents == std::vector<unsigned>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(parse_weyl_type("E8").lie_dimension() == 248);
  CHECK(parse_weyl_type("E8").weyl_order() == Integer("696729600"));
  CHECK(parse_weyl_type("E6").weyl_order() == 51840);
  CHECK(parse_weyl_type("F4").weyl_order() == 1152);
  CHECK(parse_weyl_type("B3").positive_roots() == 9);
  CHECK_THROWS_AS(parse_weyl_type("D1"), MathError);
  CHECK_THROWS_AS(parse_weyl_type("Q2"), MathError);
  CHECK(classical_weyl_type(ClassicalKind::SO, 8).name() == "D4");
  CHECK(classical_weyl_type(ClassicalKind::SO, 7).name() == "B3");
  CHECK(classical_weyl_type(ClassicalKind::Sp, 6).name() == "C3");
  CHECK(classical_weyl_type(ClassicalKind::GL, 4).name() == "A3");
}

TEST_CASE("grading profile") {
  auto g = GradingProfile::from_ad_partition(Partition{11, 3});
  CHECK(g.n == 5);
  CHECK(g.dims.at(0) == 2);
  CHECK(g.dims.at(1) == 2);
  CHECK(g.dims.at(2) == 1);
  CHECK(g.dims.at(5) == 1);
  CHECK(springer_condition(Partition{11, 3}));
  CHECK_FALSE(springer_condition(Partition{7, 7}));
  CHECK_THROWS_AS(GradingProfile::from_ad_partition(Partition{4, 2}), MathError);
}

TEST_CASE("predicted blocks") {
  CHECK(predict_blocks({1, 5}, 5) == Partition{11, 3});
  CHECK(predict_blocks({1, 2, 3}, 3) == Partition{7, 5, 3});
  CHECK_THROWS_AS(predict_blocks({1, 3}, 2), MathError);
}

TEST_CASE("adjoint partitions from Clebsch-Gordan") {
  CHECK(ad_partition_char0(ClassicalKind::GL, Partition{4}) == Partition(oracle::clebsch_gordan(4, 4)));
  // the report drops the centre of gl(V)
  CHECK(check_theorem(ClassicalKind::GL, Partition{4}).ad == Partition{7, 5, 3});
  CHECK(ad_partition_char0(ClassicalKind::Sp, Partition{6}) == Partition{11, 7, 3});
  CHECK(ad_partition_char0(ClassicalKind::SO, Partition{8}) == Partition{13, 9, 5, 1});
}

TEST_CASE("theorem checks") {
  CHECK(is_distinguished(ClassicalKind::Sp, Partition{4, 2}));
  CHECK_FALSE(is_distinguished(ClassicalKind::Sp, Partition{2, 2}));
  CHECK_THROWS_AS(check_theorem(ClassicalKind::Sp, Partition{2, 2}), MathError);
  auto regular = check_theorem(ClassicalKind::SO, Partition{9});
  CHECK(regular.gate);
  CHECK(regular.contained);
  CHECK(regular.predicted == Partition{15, 11, 7, 3});
  for (const auto& lambda : {Partition{6, 4, 2}, Partition{8, 4}, Partition{6, 2}}) {
    auto r = check_theorem(ClassicalKind::Sp, lambda);
    CHECK(r.ok());
  }
}
