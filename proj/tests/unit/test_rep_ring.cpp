#include <doctest.h>

#include <map>
#include <random>

#include "jblocks/rep_ring.hpp"
#include "oracle.hpp"

using namespace jblocks;

namespace {

// Additive /\^2 or Sym^2 of a nilpotent, written out on pairs i < j (or i <= j).
oracle::Dense square_by_hand(const oracle::Dense& n, std::int64_t p, bool alternating) {
  const std::size_t d = n.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = alternating ? i + 1 : i; j < d; ++j) index.emplace(std::pair{i, j}, index.size());
  oracle::Dense out(index.size(), std::vector<std::int64_t>(index.size(), 0));
  auto add = [&](std::size_t a, std::size_t b, std::int64_t c, std::size_t col) {
    if (a == b && alternating) return;
    if (a > b) {
      std::swap(a, b);
      if (alternating) c = -c;
    }
    auto& cell = out[index.at({a, b})][col];
    cell = oracle::mod(cell + c, p);
  };
  for (const auto& [ij, col] : index) {
    const auto [i, j] = ij;
    for (std::size_t r = 0; r < d; ++r) {
      if (n[r][i]) add(r, j, n[r][i], col);
      if (n[r][j]) add(i, r, n[r][j], col);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("J4 (x) J4 in characteristic 2") {
  const auto fm = FormalGroupLaw::multiplicative(), fa = FormalGroupLaw::additive();
  CHECK(structure_constants(4, 4, fm, FieldSpec(2)).to_string() == "4·J4");
  CHECK(structure_constants(4, 4, fa, FieldSpec(2)).to_string() == "4·J4");
}

TEST_CASE("additive tensor agrees with a hand-built Kronecker sum") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 7; ++n)
      for (unsigned m = 1; m <= 7; ++m) {
        auto a = oracle::shift_block_sum(Partition{n}), b = oracle::shift_block_sum(Partition{m});
        CHECK(tensor_partition(Partition{n}, Partition{m}, FormalGroupLaw::additive(), FieldSpec(p)) ==
              oracle::jordan(oracle::kron_sum(a, b, p), p));
      }
}

TEST_CASE("characteristic zero follows Clebsch-Gordan") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 1; m <= 6; ++m) {
      const Partition cg(oracle::clebsch_gordan(n, m));
      CHECK(tensor_partition(Partition{n}, Partition{m}, FormalGroupLaw::multiplicative(), FieldSpec(0)) == cg);
      CHECK(cg_tensor(n, m).to_partition() == cg);
    }
}

TEST_CASE("squares in characteristic zero") {
  for (unsigned n = 2; n <= 8; ++n) {
    std::vector<unsigned> wedge, sym;
    for (int k = 2 * static_cast<int>(n) - 3; k > 0; k -= 4) wedge.push_back(k);
    for (int k = 2 * static_cast<int>(n) - 1; k > 0; k -= 4) sym.push_back(k);
    CHECK(wedge_partition(Partition{n}, 2, FormalGroupLaw::additive(), FieldSpec(0)) == Partition(wedge));
    CHECK(sym_partition(Partition{n}, 2, FormalGroupLaw::multiplicative(), FieldSpec(0)) == Partition(sym));
  }
}

TEST_CASE("additive squares agree with the hand-written action on pairs") {
  std::mt19937_64 rng(17);
  for (unsigned p : {2u, 3u, 5u})
    for (int trial = 0; trial < 15; ++trial) {
      auto lambda = oracle::random_partition(rng, 7, 5);
      auto n = oracle::shift_block_sum(lambda);
      CHECK(wedge_partition(lambda, 2, FormalGroupLaw::additive(), FieldSpec(p)) ==
            oracle::jordan(square_by_hand(n, p, true), p));
      CHECK(sym_partition(lambda, 2, FormalGroupLaw::additive(), FieldSpec(p)) ==
            oracle::jordan(square_by_hand(n, p, false), p));
    }
}

TEST_CASE("tensor with J_p is free") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned a = 1; a <= p; ++a)
      CHECK(structure_constants(a, p, FormalGroupLaw::multiplicative(), FieldSpec(p)) == RingElement::block(p, a));
}

TEST_CASE("ring elements") {
  auto x = RingElement::from_partition(Partition{8, 8, 4, 4, 1});
  CHECK(x.to_string() == "2·J8 + 2·J4 + J1");
  CHECK(x.dim() == 25);
  CHECK((x - x).is_zero());
  CHECK((x - x).to_string() == "0");
  auto y = RingElement::block(3) - RingElement::block(1, 2);
  CHECK_FALSE(y.is_effective());
  CHECK_THROWS_AS(y.to_partition(), MathError);
  const auto fm = FormalGroupLaw::multiplicative();
  auto sq = ring_multiply(RingElement::block(2) + RingElement::block(1), RingElement::block(2), fm, FieldSpec(3));
  CHECK(sq == RingElement::block(3) + RingElement::block(1) + RingElement::block(2));
}

TEST_CASE("tensor powers commute with the symmetric group") {
  PrimeField k(3);
  auto phi = nilpotent_from_partition(k, Partition{3, 1});
  auto t = power_operator(phi, 3, FormalGroupLaw::multiplicative().law());
  for (const auto& s : sigma_matrices(k, 3, 4)) CHECK(s * t == t * s);
  CHECK_THROWS_AS(power_operator(phi, 0, FormalGroupLaw::additive().law()), MathError);
}

TEST_CASE("pair intertwiner") {
  PrimeField k(5);
  const auto law = FormalGroupLaw::scaled_multiplicative(Rational(3)).law();
  auto lambda = build_intertwiner_pair(3, 4, law, k);
  auto y = TruncatedPoly<PrimeField>::variable(k, {3, 4}, 0), z = TruncatedPoly<PrimeField>::variable(k, {3, 4}, 1);
  CHECK(lambda * multiplication_operator(y + z) == multiplication_operator(law.series(k, {3, 4})) * lambda);
  CHECK(is_invertible(lambda));
}
