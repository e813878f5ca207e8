#include "jblocks/g2.hpp"

#include <cctype>

namespace jblocks {

using Mat = SO7Model::Mat;

namespace {

Mat unit(const PrimeField& field, std::size_t a, std::size_t b) {
  Mat m(field, 7, 7);
  m(a, b) = field.one();
  return m;
}

}  // namespace

SO7Model::SO7Model(unsigned p)
    : field_((p <= 3 || !is_prime(p)) ? throw MathError(ErrorKind::BadPrime, "the so_7 model of G_2 needs a prime p > 3, got " +
                                                                                std::to_string(p))
                                      : PrimeField(p)),
      gram_(field_, 7, 7) {
  for (std::size_t i = 0; i < 7; ++i) gram_(i, 6 - i) = field_.one();
  // y_{gamma_i} = E_{i-1,i} - E_{5-i,6-i}: sends e_{i+1} to e_i and e_{-i} to -e_{-(i+1)}.
  for (std::size_t i = 0; i < 3; ++i) {
    Mat y = unit(field_, i, i + 1) - unit(field_, 5 - i, 6 - i);
    y_neg_.push_back(y.transpose());
    y_.push_back(std::move(y));
  }
  for (unsigned i = 1; i <= 3; ++i)
    if (!in_lie_algebra(y(i)) || !in_lie_algebra(y_negative(i)))
      throw MathError(ErrorKind::InvalidArgument, "root vector outside so_7");
}

Mat SO7Model::x_alpha1() const { return y(1) + y(3); }
Mat SO7Model::x_alpha2() const { return y(2); }
Mat SO7Model::x_minus_alpha1() const {
  Mat m = y_negative(1);
  return m.add_scaled(y_negative(3), field_.from_int(2));
}
Mat SO7Model::x_minus_alpha2() const { return y_negative(2); }

std::vector<Mat> SO7Model::g2_generators() const {
  return {x_alpha1(), x_alpha2(), x_minus_alpha1(), x_minus_alpha2()};
}

Weight3 SO7Model::basis_weight(std::size_t index) {
  Weight3 w{0, 0, 0};
  int label = labels.at(index);
  if (label > 0) w[label - 1] = 1;
  if (label < 0) w[-label - 1] = -1;
  return w;
}

bool SO7Model::in_lie_algebra(const Mat& a) const { return (a.transpose() * gram_ + gram_ * a).is_zero(); }

bool SO7Model::preserves_form(const Mat& u) const { return u.transpose() * gram_ * u == gram_; }

std::map<Weight3, Mat> weight_components(const Mat& a) {
  std::map<Weight3, Mat> out;
  const PrimeField& field = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (field.is_zero(a(i, j))) continue;
      Weight3 wi = SO7Model::basis_weight(i), wj = SO7Model::basis_weight(j), w;
      for (int k = 0; k < 3; ++k) w[k] = wi[k] - wj[k];
      auto it = out.try_emplace(w, field, a.rows(), a.cols()).first;
      it->second(i, j) = a(i, j);
    }
  return out;
}

std::string_view to_string(G2Orbit orbit) noexcept {
  switch (orbit) {
    case G2Orbit::A1: return "A1";
    case G2Orbit::A1tilde: return "A1tilde";
    case G2Orbit::G2a1: return "G2a1";
    case G2Orbit::G2reg: return "G2reg";
  }
  return "?";
}

G2Orbit parse_g2_orbit(std::string_view text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "a1") return G2Orbit::A1;
  if (t == "a1tilde" || t == "a1~") return G2Orbit::A1tilde;
  if (t == "g2a1" || t == "g2(a1)") return G2Orbit::G2a1;
  if (t == "g2reg" || t == "g2") return G2Orbit::G2reg;
  throw MathError(ErrorKind::UnknownType, "G_2 orbit '" + std::string(text) + "'");
}

Partition expected_v_partition(G2Orbit orbit) {
  switch (orbit) {
    case G2Orbit::A1: return Partition{2, 2, 1, 1, 1};
    case G2Orbit::A1tilde: return Partition{3, 2, 2};
    case G2Orbit::G2a1: return Partition{3, 3, 1};
    case G2Orbit::G2reg: return Partition{7};
  }
  throw MathError(ErrorKind::UnknownType, "G_2 orbit");
}

Partition expected_adjoint_partition(G2Orbit orbit, unsigned p) {
  switch (orbit) {
    case G2Orbit::A1: return Partition{3, 2, 2, 2, 2, 1, 1, 1};
    case G2Orbit::A1tilde: return Partition{4, 4, 3, 1, 1, 1};
    case G2Orbit::G2a1: return Partition{5, 3, 3, 3};
    case G2Orbit::G2reg: return p == 7 ? Partition{7, 7} : Partition{11, 3};
  }
  throw MathError(ErrorKind::UnknownType, "G_2 orbit");
}

Mat g2_nilpotent_rep(G2Orbit orbit, const SO7Model& model) {
  switch (orbit) {
    case G2Orbit::A1: return model.y(2);
    case G2Orbit::A1tilde: return model.y(1) + model.y(3);
    case G2Orbit::G2a1: {
      Mat short_root = commutator(model.x_alpha1(), model.x_alpha2());
      return short_root + commutator(model.x_alpha1(), short_root);
    }
    case G2Orbit::G2reg: return model.y(1) + model.y(3) + model.y(2);
  }
  throw MathError(ErrorKind::UnknownType, "G_2 orbit");
}

Mat g2a1_weight_formula(const SO7Model& model) {
  Mat y23 = commutator(model.y(2), model.y(3));
  return commutator(model.y(1), model.y(2)) + y23 + commutator(model.y(3), y23);
}

Mat g2_unipotent_rep(G2Orbit orbit, const SO7Model& model) {
  switch (orbit) {
    case G2Orbit::A1: return exp_nilpotent(model.y(2));
    case G2Orbit::A1tilde: return exp_nilpotent(model.y(1)) * exp_nilpotent(model.y(3));
    case G2Orbit::G2a1: return exp_nilpotent(g2_nilpotent_rep(G2Orbit::G2a1, model));
    case G2Orbit::G2reg:
      return exp_nilpotent(model.y(1)) * exp_nilpotent(model.y(3)) * exp_nilpotent(model.y(2));
  }
  throw MathError(ErrorKind::UnknownType, "G_2 orbit");
}

Partition adjoint_partition_direct(const Mat& a, const std::vector<Mat>& basis, AdjointMode mode) {
  const std::size_t d = basis.size();
  if (d == 0) return Partition{};
  const PrimeField& field = a.field();
  const std::size_t n = a.rows();
  // Choose d matrix positions on which the basis is independent.
  EchelonBasis<PrimeField> chooser(field, d);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t i = 0; i < n && pivots.size() < d; ++i)
    for (std::size_t j = 0; j < n && pivots.size() < d; ++j) {
      std::vector<std::uint32_t> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = basis[k](i, j);
      if (chooser.insert(std::move(row))) pivots.emplace_back(i, j);
    }
  if (pivots.size() != d) throw MathError(ErrorKind::InvalidArgument, "basis matrices are linearly dependent");
  Matrix<PrimeField> restricted(field, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) restricted(r, k) = basis[k](pivots[r].first, pivots[r].second);
  const auto solve = *inverse(restricted);

  std::optional<Mat> a_inverse;
  if (mode == AdjointMode::Unipotent) {
    a_inverse = inverse(a);
    if (!a_inverse) throw MathError(ErrorKind::NotUnipotent, "operator is not invertible");
  }
  Matrix<PrimeField> op(field, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Mat image = mode == AdjointMode::Nilpotent ? commutator(a, basis[k]) : a * basis[k] * *a_inverse - basis[k];
    std::vector<std::uint32_t> coords(d, field.zero());
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r)
        coords[c] = field.add(coords[c], field.mul(solve(c, r), image(pivots[r].first, pivots[r].second)));
    Mat rebuilt(field, n, n);
    for (std::size_t c = 0; c < d; ++c) rebuilt.add_scaled(basis[c], coords[c]);
    if (!(rebuilt == image))
      throw MathError(ErrorKind::DoesNotStabilize, "the operator does not normalize the given subalgebra");
    for (std::size_t c = 0; c < d; ++c) op(c, k) = coords[c];
  }
  return jordan_partition(op);
}

Partition wedge_route_adjoint(const Mat& a, AdjointMode mode) {
  if (mode == AdjointMode::Nilpotent) {
    auto additive = FormalGroupLaw::additive();
    return partition_difference(jordan_partition(wedge_operator(a, 2, additive.law())), jordan_partition(a));
  }
  auto mult = FormalGroupLaw::multiplicative();
  Mat shifted = a - Mat::identity(a.field(), a.rows());
  return partition_difference(jordan_partition(wedge_operator(shifted, 2, mult.law())), unipotent_partition(a));
}

bool G2Table::ok() const noexcept {
  if (g2_dimension != 14 || rows.size() != all_g2_orbits.size()) return false;
  for (const auto& row : rows)
    if (!row.ok()) return false;
  return true;
}

G2Table g2_table(unsigned p) {
  SO7Model model(p);
  G2Table table;
  table.p = p;
  const auto basis = lie_closure(model.g2_generators());
  table.g2_dimension = basis.size();
  for (G2Orbit orbit : all_g2_orbits) {
    G2Row row;
    row.orbit = orbit;
    row.p = p;
    Mat x = g2_nilpotent_rep(orbit, model);
    Mat u = g2_unipotent_rep(orbit, model);
    row.v_nilpotent = jordan_partition(x);
    row.v_unipotent = unipotent_partition(u);
    row.adjoint_nilpotent = adjoint_partition_direct(x, basis, AdjointMode::Nilpotent);
    row.adjoint_unipotent = adjoint_partition_direct(u, basis, AdjointMode::Unipotent);
    row.wedge_nilpotent = wedge_route_adjoint(x, AdjointMode::Nilpotent);
    row.wedge_unipotent = wedge_route_adjoint(u, AdjointMode::Unipotent);
    row.expected_v = expected_v_partition(orbit);
    row.expected_adjoint = expected_adjoint_partition(orbit, p);
    row.routes_agree = row.adjoint_nilpotent == row.wedge_nilpotent && row.adjoint_unipotent == row.wedge_unipotent;
    row.modes_agree = row.adjoint_nilpotent == row.adjoint_unipotent && row.v_nilpotent == row.v_unipotent;
    row.matches_table = row.v_nilpotent == row.expected_v && row.adjoint_nilpotent == row.expected_adjoint;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace jblocks
