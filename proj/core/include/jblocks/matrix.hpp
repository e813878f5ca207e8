#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jblocks/field.hpp"

namespace jblocks {

template <class K>
concept ExactField = requires(const K& k, typename K::value_type a, std::int64_t n) {
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.from_int(n) } -> std::convertible_to<typename K::value_type>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.spec() } -> std::same_as<FieldSpec>;
};

/// Dense row-major matrix over an exact field.
template <ExactField K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from integer entries given row by row.
  static Matrix from_rows(K field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw MathError(ErrorKind::ShapeMismatch, "ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  const K& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
  }
  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [&](const value_type& v) { return !field_.is_zero(v); }));
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], other.data_[k]);
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], other.data_[k]);
    return *this;
  }
  Matrix& scale(const value_type& c) {
    for (auto& v : data_) v = field_.mul(v, c);
    return *this;
  }
  /// this += c * other
  Matrix& add_scaled(const Matrix& other, const value_type& c) {
    require_same_shape(other);
    if (field_.is_zero(c)) return *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!field_.is_zero(other.data_[k])) data_[k] = field_.add(data_[k], field_.mul(c, other.data_[k]));
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw MathError(ErrorKind::ShapeMismatch, "product of " + a.shape_string() + " and " + b.shape_string());
    const K& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const value_type& bkj = b(k, j);
          if (!f.is_zero(bkj)) c(i, j) = f.add(c(i, j), f.mul(aik, bkj));
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + field_.to_string((*this)(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw MathError(ErrorKind::ShapeMismatch, shape_string() + " vs " + other.shape_string());
  }

  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField K>
Matrix<K> power(const Matrix<K>& m, unsigned k) {
  if (!m.is_square()) throw MathError(ErrorKind::NotSquare, "power of " + m.shape_string());
  Matrix<K> result = Matrix<K>::identity(m.field(), m.rows());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

template <ExactField K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

/// Kronecker product; basis e_i (x) f_j sits at index i * b.rows() + j.
template <ExactField K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  const K& f = a.field();
  Matrix<K> c(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!f.is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return c;
}

/// Adds coeff * (a (x) b) into target without forming the product.
template <ExactField K>
void add_kron(Matrix<K>& target, const typename K::value_type& coeff, const Matrix<K>& a, const Matrix<K>& b) {
  const K& f = a.field();
  if (f.is_zero(coeff)) return;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      auto ca = f.mul(coeff, a(i, j));
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!f.is_zero(b(k, l))) {
            auto& t = target(i * b.rows() + k, j * b.cols() + l);
            t = f.add(t, f.mul(ca, b(k, l)));
          }
    }
}

/// Incrementally maintained row-echelon basis of a subspace of K^n.
/// Each stored vector has a pivot (first nonzero entry) equal to one, and no
/// two stored vectors share a pivot.
template <ExactField K>
class EchelonBasis {
 public:
  using value_type = typename K::value_type;
  using Vector = std::vector<value_type>;

  EchelonBasis(K field, std::size_t ambient) : field_(field), ambient_(ambient), pivot_of_(ambient, npos) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

  /// Reduces v against the basis in place; returns true if v reduced to zero.
  bool reduce(Vector& v) const {
    bool zero = true;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (field_.is_zero(v[i])) continue;
      std::size_t b = pivot_of_[i];
      if (b == npos) {
        zero = false;
        continue;
      }
      auto c = v[i];
      const Vector& w = vectors_[b];
      for (std::size_t j = i; j < ambient_; ++j)
        if (!field_.is_zero(w[j])) v[j] = field_.sub(v[j], field_.mul(c, w[j]));
    }
    return zero;
  }

  /// Inserts v if independent; returns whether the dimension grew.
  bool insert(Vector v) {
    if (v.size() != ambient_) throw MathError(ErrorKind::ShapeMismatch, "vector length mismatch");
    if (reduce(v)) return false;
    std::size_t pivot = 0;
    while (field_.is_zero(v[pivot])) ++pivot;
    auto inv = field_.inv(v[pivot]);
    for (std::size_t j = pivot; j < ambient_; ++j)
      if (!field_.is_zero(v[j])) v[j] = field_.mul(v[j], inv);
    pivot_of_[pivot] = vectors_.size();
    vectors_.push_back(std::move(v));
    return true;
  }

  bool contains(Vector v) const { return reduce(v); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  K field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivot_of_;
  std::vector<Vector> vectors_;
};

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  EchelonBasis<K> basis(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    typename EchelonBasis<K>::Vector row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    basis.insert(std::move(row));
    if (basis.dim() == m.cols()) break;
  }
  return basis.dim();
}

/// Gauss-Jordan inverse; nullopt when singular.
template <ExactField K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw MathError(ErrorKind::NotSquare, "inverse of " + m.shape_string());
  const K& f = m.field();
  const std::size_t n = m.rows();
  Matrix<K> a = m;
  Matrix<K> inv = Matrix<K>::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(a(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    auto s = f.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = f.mul(a(col, j), s);
      inv(col, j) = f.mul(inv(col, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || f.is_zero(a(i, col))) continue;
      auto c = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!f.is_zero(a(col, j))) a(i, j) = f.sub(a(i, j), f.mul(c, a(col, j)));
        if (!f.is_zero(inv(col, j))) inv(i, j) = f.sub(inv(i, j), f.mul(c, inv(col, j)));
      }
    }
  }
  return inv;
}

template <ExactField K>
bool is_invertible(const Matrix<K>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// Reduces every entry of an integer-valued rational matrix into K.
template <ExactField K>
Matrix<K> convert(K field, const Matrix<RationalField>& m) {
  Matrix<K> out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
  return out;
}

}  // namespace jblocks
