#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jblocks/rep_ring.hpp"

namespace jblocks {

using Weight3 = std::array<int, 3>;

/// The 7-dimensional orthogonal module with basis e_1, e_2, e_3, e_0, e_-3,
/// e_-2, e_-1 (in that order) and the form pairing e_i with e_-i, e_0 with
/// itself. y(i) is a weight vector for the simple root gamma_i of so_7, where
/// gamma_1 = eps_1 - eps_2, gamma_2 = eps_2 - eps_3, gamma_3 = eps_3.
class SO7Model {
 public:
  using Mat = Matrix<PrimeField>;

  /// Throws BadPrime unless p is a prime > 3.
  explicit SO7Model(unsigned p);

  unsigned p() const noexcept { return field_.characteristic(); }
  const PrimeField& field() const noexcept { return field_; }
  const Mat& gram() const noexcept { return gram_; }
  /// y_{gamma_i} for i = 1, 2, 3.
  const Mat& y(unsigned i) const { return y_.at(i - 1); }
  /// y_{-gamma_i}, the form adjoint of y_{gamma_i}.
  const Mat& y_negative(unsigned i) const { return y_neg_.at(i - 1); }

  /// Images of the Chevalley generators x_{+-alpha_1}, x_{+-alpha_2} of g_2.
  Mat x_alpha1() const;
  Mat x_alpha2() const;
  Mat x_minus_alpha1() const;
  Mat x_minus_alpha2() const;
  std::vector<Mat> g2_generators() const;

  static constexpr std::array<int, 7> labels{1, 2, 3, 0, -3, -2, -1};
  static Weight3 basis_weight(std::size_t index);

  /// a^T G + G a = 0.
  bool in_lie_algebra(const Mat& a) const;
  /// u^T G u = G.
  bool preserves_form(const Mat& u) const;

 private:
  PrimeField field_;
  Mat gram_;
  std::vector<Mat> y_, y_neg_;
};

/// Splits a 7x7 matrix into torus weight components: the entry at (a, b)
/// has weight wt(e_a) - wt(e_b).
std::map<Weight3, SO7Model::Mat> weight_components(const SO7Model::Mat& a);

enum class G2Orbit { A1, A1tilde, G2a1, G2reg };

inline constexpr std::array<G2Orbit, 4> all_g2_orbits{G2Orbit::A1, G2Orbit::A1tilde, G2Orbit::G2a1, G2Orbit::G2reg};

std::string_view to_string(G2Orbit orbit) noexcept;
/// Accepts A1, A1tilde (or A1~), G2a1 (or G2(a1)), G2reg (or G2); throws UnknownType.
G2Orbit parse_g2_orbit(std::string_view text);

/// Partition on V(varpi_1): (2^2,1^3), (3,2^2), (3^2,1), (7).
Partition expected_v_partition(G2Orbit orbit);
/// Partition on the adjoint module, which for the regular class depends on p.
Partition expected_adjoint_partition(G2Orbit orbit, unsigned p);

/// A1: y_{gamma_2}. A1tilde: y_{gamma_1} + y_{gamma_3}. G2reg: the sum of all
/// three. G2a1: x_{alpha_1+alpha_2} + x_{2alpha_1+alpha_2} built as brackets of the
/// Chevalley generators, which has four weight components on V.
SO7Model::Mat g2_nilpotent_rep(G2Orbit orbit, const SO7Model& model);

/// [y_1, y_2] + [y_2, y_3] + [y_3, [y_2, y_3]]: three weight components and
/// partition (3^2,1) on V, but it does not lie in g_2 (adjoint_partition_direct
/// reports DoesNotStabilize).
SO7Model::Mat g2a1_weight_formula(const SO7Model& model);

/// exp of the root vectors: exp(y_2), exp(y_1)exp(y_3), exp(y_1)exp(y_3)exp(y_2),
/// and exp of the nilpotent representative for G2a1.
SO7Model::Mat g2_unipotent_rep(G2Orbit orbit, const SO7Model& model);

/// Basis (as matrices) of the Lie algebra generated by `generators`.
template <ExactField K>
std::vector<Matrix<K>> lie_closure(const std::vector<Matrix<K>>& generators) {
  if (generators.empty()) return {};
  const K& field = generators.front().field();
  const std::size_t rows = generators.front().rows(), cols = generators.front().cols();
  auto flatten = [&](const Matrix<K>& m) {
    std::vector<typename K::value_type> v;
    v.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) v.push_back(m(i, j));
    return v;
  };
  EchelonBasis<K> span(field, rows * cols);
  std::vector<Matrix<K>> basis;
  for (const auto& g : generators)
    if (span.insert(flatten(g))) basis.push_back(g);
  for (std::size_t i = 1; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Matrix<K> c = commutator(basis[i], basis[j]);
      if (span.insert(flatten(c))) basis.push_back(std::move(c));
    }
  return basis;
}

enum class AdjointMode { Nilpotent, Unipotent };

/// Partition of ad a (nilpotent mode) or Ad a - 1 (unipotent mode) on the
/// span of `basis`. Throws DoesNotStabilize if a does not normalize the span.
Partition adjoint_partition_direct(const SO7Model::Mat& a, const std::vector<SO7Model::Mat>& basis, AdjointMode mode);

/// Partition on /\^2 V minus the partition on V, using /\^2 V = V + g_2.
Partition wedge_route_adjoint(const SO7Model::Mat& a, AdjointMode mode);

struct G2Row {
  G2Orbit orbit;
  unsigned p = 0;
  Partition v_nilpotent, v_unipotent;
  Partition adjoint_nilpotent, adjoint_unipotent;        // direct route
  Partition wedge_nilpotent, wedge_unipotent;            // /\^2 route
  Partition expected_v, expected_adjoint;
  bool routes_agree = false;  // direct equals /\^2 route in both modes
  bool modes_agree = false;   // nilpotent equals unipotent
  bool matches_table = false;
  bool ok() const noexcept { return routes_agree && modes_agree && matches_table; }
};

struct G2Table {
  unsigned p = 0;
  std::size_t g2_dimension = 0;
  std::vector<G2Row> rows;
  bool ok() const noexcept;
};

G2Table g2_table(unsigned p);

}  // namespace jblocks
