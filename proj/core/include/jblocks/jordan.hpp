#pragma once

#include <string>
#include <vector>

#include "jblocks/matrix.hpp"
#include "jblocks/partition.hpp"
#include "jblocks/series.hpp"

namespace jblocks {

namespace detail {

/// Sparse column view used to apply N to many vectors.
template <ExactField K>
class SparseColumns {
 public:
  using value_type = typename K::value_type;
  explicit SparseColumns(const Matrix<K>& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<std::pair<std::size_t, value_type>> col;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!field_.is_zero(m(i, j))) col.emplace_back(i, m(i, j));
      columns_.push_back(std::move(col));
    }
  }

  std::vector<value_type> apply(const std::vector<value_type>& v) const {
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(v[j])) continue;
      for (const auto& [i, a] : columns_[j]) out[i] = field_.add(out[i], field_.mul(a, v[j]));
    }
    return out;
  }

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<std::vector<std::pair<std::size_t, value_type>>> columns_;
};

}  // namespace detail

/// Ranks of N^0, N^1, N^2, ... down to the first zero, computed by pushing an
/// echelon basis of im N^{k-1} through N. Throws NotNilpotent if the ranks stall
/// above zero.
template <ExactField K>
std::vector<std::size_t> power_ranks(const Matrix<K>& n) {
  if (!n.is_square()) throw MathError(ErrorKind::NotSquare, "operator is " + n.shape_string());
  const K& field = n.field();
  const std::size_t dim = n.rows();
  detail::SparseColumns<K> op(n);
  std::vector<std::size_t> ranks{dim};
  std::vector<std::vector<typename K::value_type>> image;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<typename K::value_type> e(dim, field.zero());
    e[j] = field.one();
    image.push_back(std::move(e));
  }
  while (ranks.back() > 0) {
    EchelonBasis<K> next(field, dim);
    for (const auto& v : image) next.insert(op.apply(v));
    if (next.dim() == ranks.back())
      throw MathError(ErrorKind::NotNilpotent,
                      "rank of powers stalls at " + std::to_string(next.dim()) + " on a " + n.shape_string() + " operator");
    ranks.push_back(next.dim());
    image = next.vectors();
  }
  return ranks;
}

/// Smallest d with N^d = 0.
template <ExactField K>
unsigned nilpotency_degree(const Matrix<K>& n) {
  return static_cast<unsigned>(power_ranks(n).size() - 1);
}

/// Jordan partition of a nilpotent operator, read off the ranks of its powers:
/// the number of blocks of size >= k is rank N^{k-1} - rank N^k.
template <ExactField K>
Partition jordan_partition(const Matrix<K>& n) {
  auto ranks = power_ranks(n);
  std::vector<unsigned> at_least;  // conjugate partition
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<unsigned>(ranks[k - 1] - ranks[k]));
  return Partition(std::move(at_least)).conjugate();
}

/// Partition of u - 1 for a unipotent u.
template <ExactField K>
Partition unipotent_partition(const Matrix<K>& u) {
  if (!u.is_square()) throw MathError(ErrorKind::NotSquare, "operator is " + u.shape_string());
  try {
    return jordan_partition(u - Matrix<K>::identity(u.field(), u.rows()));
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::NotNilpotent) throw MathError(ErrorKind::NotUnipotent, "u - 1 is not nilpotent");
    throw;
  }
}

/// n x n upper shift: e_{i+1} -> e_i, e_1 -> 0.
template <ExactField K>
Matrix<K> jordan_block(K field, unsigned n) {
  if (n == 0) throw MathError(ErrorKind::InvalidArgument, "Jordan block of size 0");
  Matrix<K> m(field, n, n);
  for (unsigned i = 0; i + 1 < n; ++i) m(i, i + 1) = field.one();
  return m;
}

/// Block-diagonal sum of upper-shift blocks, largest first.
template <ExactField K>
Matrix<K> nilpotent_from_partition(K field, const Partition& lambda) {
  Matrix<K> m(field, lambda.size(), lambda.size());
  std::size_t offset = 0;
  for (unsigned part : lambda) {
    for (unsigned i = 0; i + 1 < part; ++i) m(offset + i, offset + i + 1) = field.one();
    offset += part;
  }
  return m;
}

/// sum_i f_i N^i for a univariate truncated series f. The truncation must reach
/// the nilpotency degree of N so no needed term is missing.
template <ExactField K>
Matrix<K> apply_series(const TruncatedPoly<K>& f, const Matrix<K>& n) {
  if (f.num_vars() != 1) throw MathError(ErrorKind::InvalidArgument, "apply_series needs a univariate series");
  unsigned degree = nilpotency_degree(n);
  if (f.truncation()[0] < degree)
    throw MathError(ErrorKind::TruncationTooShort, "series known modulo t^" + std::to_string(f.truncation()[0]) +
                                                       " but the operator has nilpotency degree " + std::to_string(degree));
  const K& field = n.field();
  Matrix<K> result(field, n.rows(), n.cols());
  Matrix<K> p = Matrix<K>::identity(field, n.rows());
  for (unsigned i = 0; i < degree; ++i) {
    result.add_scaled(p, f.coefficient({i}));
    p = p * n;
  }
  return result;
}

/// Truncated exponential sum_{k<d} N^k / k!; needs d <= p in characteristic p.
template <ExactField K>
Matrix<K> exp_nilpotent(const Matrix<K>& n) {
  unsigned degree = nilpotency_degree(n);
  const K& field = n.field();
  if (field.characteristic() != 0 && degree > field.characteristic())
    throw MathError(ErrorKind::FactorialNotInvertible, "nilpotency degree " + std::to_string(degree) +
                                                           " exceeds p = " + std::to_string(field.characteristic()));
  Matrix<K> result(field, n.rows(), n.cols());
  Matrix<K> p = Matrix<K>::identity(field, n.rows());
  auto factorial = field.one();
  for (unsigned k = 0; k < degree; ++k) {
    if (k > 0) factorial = field.mul(factorial, field.from_int(k));
    result.add_scaled(p, field.inv(factorial));
    p = p * n;
  }
  return result;
}

}  // namespace jblocks
