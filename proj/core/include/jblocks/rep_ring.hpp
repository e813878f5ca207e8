#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "jblocks/formal_group.hpp"
#include "jblocks/jordan.hpp"
#include "jblocks/partition.hpp"
#include "jblocks/series.hpp"

namespace jblocks {

/// Integer combination sum_n a_n [J_n] of Jordan-block classes.
class RingElement {
 public:
  using Terms = std::map<unsigned, std::int64_t>;

  RingElement() = default;
  static RingElement block(unsigned n, std::int64_t multiplicity = 1);
  static RingElement from_partition(const Partition& lambda);

  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coefficient(unsigned n) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// sum_n a_n * n
  std::int64_t dim() const;
  /// True when every multiplicity is non-negative, i.e. the class of an object.
  bool is_effective() const;
  /// Throws InvalidArgument for non-effective elements.
  Partition to_partition() const;

  RingElement& add(unsigned n, std::int64_t a);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(std::int64_t k, const RingElement& x);

  /// "2·J8 + 2·J4 + J1"; the zero element prints "0".
  std::string to_string() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

/// F(phi (x) 1, 1 (x) psi) for nilpotent phi, psi. Only the coefficients
/// c_ab with a below the nilpotency degree of phi and b below that of psi
/// contribute, so a truncated law is exact here.
template <ExactField K>
Matrix<K> tensor_operator(const Matrix<K>& phi, const Matrix<K>& psi, const GeneralizedLaw& law) {
  const K& field = phi.field();
  unsigned dphi = nilpotency_degree(phi);
  unsigned dpsi = nilpotency_degree(psi);
  Matrix<K> out(field, phi.rows() * psi.rows(), phi.cols() * psi.cols());
  if (dphi == 0 || dpsi == 0) return out;
  auto f = law.series(field, {dphi, dpsi});
  std::vector<Matrix<K>> phi_pow{Matrix<K>::identity(field, phi.rows())};
  std::vector<Matrix<K>> psi_pow{Matrix<K>::identity(field, psi.rows())};
  for (unsigned a = 1; a < dphi; ++a) phi_pow.push_back(phi_pow.back() * phi);
  for (unsigned b = 1; b < dpsi; ++b) psi_pow.push_back(psi_pow.back() * psi);
  for (const auto& [e, c] : f.terms()) add_kron(out, c, phi_pow[e[0]], psi_pow[e[1]]);
  return out;
}

/// Jordan partition of J_lambda (x)_F J_mu.
Partition tensor_partition(const Partition& lambda, const Partition& mu, const GeneralizedLaw& law, FieldSpec field);

/// Class of J_n (x)_F J_m in R_F. Memoized per (n, m, law, p); safe to call
/// from several threads.
RingElement structure_constants(unsigned n, unsigned m, const FormalGroupLaw& law, FieldSpec field);

/// Bilinear extension of structure_constants.
RingElement ring_multiply(const RingElement& x, const RingElement& y, const FormalGroupLaw& law, FieldSpec field);

/// Characteristic-0 Clebsch-Gordan product sum_{i < min(n,m)} [J_{n+m-1-2i}].
RingElement cg_tensor(unsigned n, unsigned m);

/// The m-fold F-tensor power of phi on V^{(x)m}: the iterated tensor series
/// with Y_i specialised to 1 (x) .. (x) phi (x) .. (x) 1 (phi in slot i).
template <ExactField K>
Matrix<K> power_operator(const Matrix<K>& phi, unsigned m, const GeneralizedLaw& law) {
  if (m == 0) throw MathError(ErrorKind::InvalidArgument, "tensor power m must be positive");
  const K& field = phi.field();
  const unsigned degree = nilpotency_degree(phi);
  std::size_t dim = 1;
  for (unsigned i = 0; i < m; ++i) dim *= phi.rows();
  Matrix<K> out(field, dim, dim);
  if (degree == 0) return out;
  auto series = iterated_tensor_series(law, field, std::vector<unsigned>(m, degree));
  std::vector<Matrix<K>> pw{Matrix<K>::identity(field, phi.rows())};
  for (unsigned a = 1; a < degree; ++a) pw.push_back(pw.back() * phi);
  for (const auto& [e, c] : series.terms()) {
    if (m == 1) {
      out.add_scaled(pw[e[0]], c);
      continue;
    }
    Matrix<K> left = pw[e[0]];
    for (unsigned i = 1; i + 1 < m; ++i) left = kron(left, pw[e[i]]);
    add_kron(out, c, left, pw[e[m - 1]]);
  }
  return out;
}

/// Permutation matrix of sigma acting on (k^d)^{(x)m} by
/// v_1 (x) .. (x) v_m -> v_{sigma^{-1}(1)} (x) .. (x) v_{sigma^{-1}(m)}.
template <ExactField K>
Matrix<K> tensor_permutation(K field, const std::vector<unsigned>& sigma, unsigned d) {
  const std::size_t m = sigma.size();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < m; ++i) dim *= d;
  Matrix<K> out(field, dim, dim);
  std::vector<unsigned> word(m), image(m);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = m; i-- > 0;) {
      word[i] = static_cast<unsigned>(rest % d);
      rest /= d;
    }
    // Factor in slot i moves to slot sigma(i).
    for (std::size_t i = 0; i < m; ++i) image[sigma[i]] = word[i];
    std::size_t target = 0;
    for (std::size_t i = 0; i < m; ++i) target = target * d + image[i];
    out(target, idx) = field.one();
  }
  return out;
}

/// Adjacent transpositions s_1..s_{m-1} generating the Sigma_m action.
template <ExactField K>
std::vector<Matrix<K>> sigma_matrices(K field, unsigned m, unsigned d) {
  std::vector<Matrix<K>> gens;
  for (unsigned i = 0; i + 1 < m; ++i) {
    std::vector<unsigned> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::swap(sigma[i], sigma[i + 1]);
    gens.push_back(tensor_permutation(field, sigma, d));
  }
  return gens;
}

namespace detail {

/// Strictly (alternating) or weakly increasing words of length m over 0..d-1.
std::vector<std::vector<unsigned>> sorted_words(unsigned d, unsigned m, bool strict);

}  // namespace detail

/// Endomorphism induced by T (an operator on V^{(x)m} commuting with Sigma_m)
/// on the quotient /\^m V (alternating) or Sym^m V. Each basis word is lifted
/// to a pure tensor, pushed through T, and every resulting tensor word is
/// straightened: sorted, with a sign and vanishing on repeats for /\^m.
template <ExactField K>
Matrix<K> induced_on_quotient(const Matrix<K>& t, unsigned d, unsigned m, bool alternating) {
  const K& field = t.field();
  auto words = detail::sorted_words(d, m, alternating);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  Matrix<K> out(field, words.size(), words.size());
  std::vector<unsigned> w(m);
  for (std::size_t col = 0; col < words.size(); ++col) {
    std::size_t source = 0;
    for (unsigned letter : words[col]) source = source * d + letter;
    for (std::size_t row = 0; row < t.rows(); ++row) {
      const auto& a = t(row, source);
      if (field.is_zero(a)) continue;
      std::size_t rest = row;
      for (std::size_t i = m; i-- > 0;) {
        w[i] = static_cast<unsigned>(rest % d);
        rest /= d;
      }
      bool negative = false;
      // insertion sort, tracking the parity of swaps
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
          std::swap(w[j - 1], w[j]);
          negative = !negative;
        }
      bool repeated = false;
      for (std::size_t i = 1; i < m; ++i) repeated = repeated || w[i] == w[i - 1];
      if (alternating && repeated) continue;
      auto& target = out(index.at(w), col);
      auto value = (alternating && negative) ? field.neg(a) : a;
      target = field.add(target, value);
    }
  }
  return out;
}

/// /\^m_F(phi) acting on /\^m V.
template <ExactField K>
Matrix<K> wedge_operator(const Matrix<K>& phi, unsigned m, const GeneralizedLaw& law) {
  return induced_on_quotient(power_operator(phi, m, law), static_cast<unsigned>(phi.rows()), m, true);
}

/// Sym^m_F(phi) acting on Sym^m V.
template <ExactField K>
Matrix<K> sym_operator(const Matrix<K>& phi, unsigned m, const GeneralizedLaw& law) {
  return induced_on_quotient(power_operator(phi, m, law), static_cast<unsigned>(phi.rows()), m, false);
}

Partition wedge_partition(const Partition& lambda, unsigned m, const GeneralizedLaw& law, FieldSpec field);
Partition sym_partition(const Partition& lambda, unsigned m, const GeneralizedLaw& law, FieldSpec field);

/// Invertible Lambda on B = k[Y,Z]/(Y^n, Z^m) with
/// Lambda o mu_{y+z} = mu_{F(y,z)} o Lambda, where mu_s is multiplication by s.
///
/// F - xi_1 u - xi_2 v is split as u H_1 + v H_2 by sending each term with a
/// positive power of u to H_1 and the rest to H_2; Lambda is then the algebra
/// automorphism y -> y (xi_1 + H_1), z -> z (xi_2 + H_2).
template <ExactField K>
Matrix<K> build_intertwiner_pair(unsigned n, unsigned m, const GeneralizedLaw& law, K field) {
  const std::vector<unsigned> trunc{n, m};
  auto f = law.series(field, trunc);
  TruncatedPoly<K> h1(field, trunc), h2(field, trunc);
  std::vector<typename K::value_type> xi{field.from_rational(law.xi1()), field.from_rational(law.xi2())};
  for (const auto& [e, c] : f.terms()) {
    if (e[0] + e[1] < 2) continue;
    if (e[0] >= 1)
      h1.add_term({e[0] - 1, e[1]}, c);
    else
      h2.add_term({e[0], e[1] - 1}, c);
  }
  return build_automorphism<K>(xi, {h1, h2}, trunc);
}

/// Invertible algebra automorphism Lambda of B = k[Y_1..Y_m]/(Y_i^n) with
/// Lambda(y_i) = f_i, where f_1 + .. + f_m is the symmetric split of the
/// m-fold F-tensor series. Lambda commutes with permutations of the y_i and
/// carries y_1 + .. + y_m to the F-tensor series.
template <ExactField K>
Matrix<K> build_symmetric_intertwiner(unsigned n, unsigned m, const GeneralizedLaw& law, K field) {
  const std::vector<unsigned> trunc(m, n);
  auto parts = symmetric_split(iterated_tensor_series(law, field, trunc));
  std::vector<typename K::value_type> xi(m, field.one());
  std::vector<TruncatedPoly<K>> fs;
  for (std::size_t i = 0; i < m; ++i) {
    // f_i = Y_i * quotient; Lambda(Y_i) = Y_i (1 + (quotient - 1)).
    TruncatedPoly<K> quotient(field, trunc);
    for (const auto& [e, c] : parts[i].terms()) {
      Exponent lowered = e;
      --lowered[i];
      quotient.add_term(lowered, c);
    }
    fs.push_back(quotient - TruncatedPoly<K>::constant(field, trunc, field.one()));
  }
  return build_automorphism(xi, fs, trunc);
}

/// Matrix of Y^a -> sigma.Y^a on the monomial basis of k[Y_1..Y_m]/(Y_i^n).
template <ExactField K>
Matrix<K> variable_permutation(K field, const std::vector<unsigned>& sigma, const std::vector<unsigned>& trunc) {
  MonomialBasis basis(trunc);
  Matrix<K> out(field, basis.dim(), basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    TruncatedPoly<K> mono(field, trunc);
    mono.add_term(basis.exponent(col), field.one());
    const auto image = mono.permuted(sigma);
    for (const auto& [e, c] : image.terms()) out(basis.index(e), col) = c;
  }
  return out;
}

}  // namespace jblocks
