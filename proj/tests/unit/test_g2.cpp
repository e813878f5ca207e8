#include <doctest.h>

#include "jblocks/g2.hpp"
#include "oracle.hpp"

using namespace jblocks;

TEST_CASE("so7 model") {
  SO7Model model(7);
  for (unsigned i = 1; i <= 3; ++i) {
    CHECK(model.in_lie_algebra(model.y(i)));
    CHECK(model.in_lie_algebra(model.y_negative(i)));
  }
  CHECK(commutator(model.y(1), model.y(3)).is_zero());
  CHECK_FALSE(commutator(model.y(1), model.y(2)).is_zero());
  for (const auto& g : model.g2_generators()) CHECK(model.in_lie_algebra(g));
  CHECK(SO7Model::basis_weight(0) == Weight3{1, 0, 0});
  CHECK(SO7Model::basis_weight(3) == Weight3{0, 0, 0});
  CHECK(SO7Model::basis_weight(6) == Weight3{-1, 0, 0});
  CHECK_THROWS_AS(SO7Model(3), MathError);
  CHECK_THROWS_AS(SO7Model(9), MathError);
}

TEST_CASE("lie closures") {
  SO7Model model(11);
  CHECK(lie_closure(std::vector{model.x_alpha1()}).size() == 1);
  CHECK(lie_closure(std::vector{model.x_alpha1(), model.x_minus_alpha1()}).size() == 3);
  CHECK(lie_closure(model.g2_generators()).size() == 14);
  std::vector<SO7Model::Mat> all;
  for (unsigned i = 1; i <= 3; ++i) {
    all.push_back(model.y(i));
    all.push_back(model.y_negative(i));
  }
  CHECK(lie_closure(all).size() == 21);
}

TEST_CASE("the G2(a1) representative") {
  SO7Model model(5);
  const auto basis = lie_closure(model.g2_generators());
  const auto rep = g2_nilpotent_rep(G2Orbit::G2a1, model);
  CHECK(weight_components(rep).size() == 4);
  CHECK(jordan_partition(rep) == Partition{3, 3, 1});
  const auto formula = g2a1_weight_formula(model);
  CHECK(weight_components(formula).size() == 3);
  CHECK(jordan_partition(formula) == Partition{3, 3, 1});
  CHECK_THROWS_AS(adjoint_partition_direct(formula, basis, AdjointMode::Nilpotent), MathError);
}

TEST_CASE("unipotent representatives preserve the form") {
  SO7Model model(13);
  for (auto orbit : all_g2_orbits) {
    const auto u = g2_unipotent_rep(orbit, model);
    CHECK(model.preserves_form(u));
    CHECK(unipotent_partition(u) == expected_v_partition(orbit));
  }
}

TEST_CASE("table at p = 7 and p = 5") {
  auto t7 = g2_table(7);
  CHECK(t7.ok());
  CHECK(t7.g2_dimension == 14);
  CHECK(t7.rows.back().adjoint_nilpotent == Partition{7, 7});
  auto t5 = g2_table(5);
  CHECK(t5.ok());
  CHECK(t5.rows.back().adjoint_unipotent == Partition{11, 3});
  CHECK(expected_adjoint_partition(G2Orbit::A1, 11) == Partition{3, 2, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("orbit names") {
  CHECK(parse_g2_orbit("G2(a1)") == G2Orbit::G2a1);
  CHECK(parse_g2_orbit("A1~") == G2Orbit::A1tilde);
  CHECK(to_string(G2Orbit::G2reg) == "G2reg");
  CHECK_THROWS_AS(parse_g2_orbit("B3"), MathError);
}
