#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "jblocks/matrix.hpp"

namespace jblocks {

using Exponent = std::vector<unsigned>;

/// Element of k[[Y_1..Y_m]] / (Y_1^{r_1}, ..., Y_m^{r_m}).
///
/// Coefficients are kept sparse and ordered lexicographically by exponent, so
/// the last stored term is the lex-leading monomial. Binary operations require
/// identical truncation vectors; nothing is ever re-truncated implicitly.
template <ExactField K>
class TruncatedPoly {
 public:
  using value_type = typename K::value_type;
  using Terms = std::map<Exponent, value_type>;

  TruncatedPoly(K field, std::vector<unsigned> truncation) : field_(field), trunc_(std::move(truncation)) {
    if (trunc_.empty()) throw MathError(ErrorKind::InvalidArgument, "series needs at least one variable");
    for (unsigned r : trunc_)
      if (r == 0) throw MathError(ErrorKind::InvalidArgument, "truncation exponents must be positive");
  }

  static TruncatedPoly variable(K field, std::vector<unsigned> truncation, std::size_t i) {
    TruncatedPoly p(field, std::move(truncation));
    Exponent e(p.num_vars(), 0);
    e.at(i) = 1;
    p.add_term(e, field.one());
    return p;
  }

  static TruncatedPoly constant(K field, std::vector<unsigned> truncation, const value_type& c) {
    TruncatedPoly p(field, std::move(truncation));
    p.add_term(Exponent(p.num_vars(), 0), c);
    return p;
  }

  /// Univariate series sum_i coeffs[i] t^i modulo t^truncation.
  static TruncatedPoly univariate(K field, unsigned truncation, const std::vector<value_type>& coeffs) {
    TruncatedPoly p(field, {truncation});
    for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term({i}, coeffs[i]);
    return p;
  }

  const K& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return trunc_.size(); }
  const std::vector<unsigned>& truncation() const noexcept { return trunc_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool in_range(const Exponent& e) const {
    if (e.size() != trunc_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] >= trunc_[i]) return false;
    return true;
  }

  value_type coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  value_type constant_term() const { return coefficient(Exponent(num_vars(), 0)); }

  /// Adds c * Y^e; monomials outside the truncation vanish.
  void add_term(const Exponent& e, const value_type& c) {
    if (e.size() != trunc_.size()) throw MathError(ErrorKind::ShapeMismatch, "exponent arity mismatch");
    if (!in_range(e) || field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Lowest total degree carrying a nonzero coefficient; 0 for the zero series.
  unsigned order() const {
    unsigned best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      unsigned d = std::accumulate(e.begin(), e.end(), 0u);
      if (first || d < best) best = d;
      first = false;
    }
    return best;
  }

  unsigned max_degree() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0u));
    return best;
  }

  TruncatedPoly homogeneous_part(unsigned degree) const {
    TruncatedPoly out(field_, trunc_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0u) == degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Action of a permutation sigma of {0..m-1} on variables: Y_k -> Y_{sigma^{-1}(k)},
  /// so that elementary-symmetric splits satisfy sigma.H_i = H_{sigma^{-1}(i)}.
  TruncatedPoly permuted(const std::vector<unsigned>& sigma) const {
    if (sigma.size() != num_vars()) throw MathError(ErrorKind::ShapeMismatch, "permutation arity mismatch");
    TruncatedPoly out(field_, trunc_);
    for (const auto& [e, c] : terms_) {
      Exponent f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[sigma[i]];
      out.add_term(f, c);
    }
    return out;
  }

  /// Invariance under every transposition of adjacent variables.
  bool is_symmetric() const {
    std::vector<unsigned> sigma(num_vars());
    for (std::size_t i = 0; i + 1 < num_vars(); ++i) {
      std::iota(sigma.begin(), sigma.end(), 0u);
      std::swap(sigma[i], sigma[i + 1]);
      if (permuted(sigma) != *this) return false;
    }
    return true;
  }

  TruncatedPoly& operator+=(const TruncatedPoly& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TruncatedPoly& operator-=(const TruncatedPoly& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
    return *this;
  }
  TruncatedPoly scaled(const value_type& s) const {
    TruncatedPoly out(field_, trunc_);
    for (const auto& [e, c] : terms_) out.add_term(e, field_.mul(s, c));
    return out;
  }

  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    a.require_same_shape(b);
    TruncatedPoly out(a.field_, a.trunc_);
    Exponent e(a.num_vars());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size() && keep; ++i) {
          e[i] = ea[i] + eb[i];
          keep = e[i] < a.trunc_[i];
        }
        if (keep) out.add_term(e, a.field_.mul(ca, cb));
      }
    return out;
  }
  TruncatedPoly& operator*=(const TruncatedPoly& o) { return *this = *this * o; }

  TruncatedPoly pow(unsigned k) const {
    TruncatedPoly out = constant(field_, trunc_, field_.one());
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "Y1 + 1/2*Y1*Y2"; univariate series use t.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += num_vars() == 1 ? std::string("t") : "Y" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string coeff = field_.to_string(c);
      if (!s.empty()) s += " + ";
      if (mono.empty())
        s += coeff;
      else if (field_.is_one(c))
        s += mono;
      else
        s += coeff + "*" + mono;
    }
    return s;
  }

 private:
  void require_same_shape(const TruncatedPoly& o) const {
    if (trunc_ != o.trunc_) throw MathError(ErrorKind::ShapeMismatch, "truncation vectors differ");
  }

  K field_;
  std::vector<unsigned> trunc_;
  Terms terms_;
};

/// f(g_1, ..., g_m) in the algebra the g_i live in. Each g_i must lie in the
/// augmentation ideal.
template <ExactField K>
TruncatedPoly<K> substitute(const TruncatedPoly<K>& f, const std::vector<TruncatedPoly<K>>& gs) {
  if (gs.size() != f.num_vars())
    throw MathError(ErrorKind::ShapeMismatch, "substitution needs one series per variable");
  if (gs.empty()) throw MathError(ErrorKind::InvalidArgument, "empty substitution");
  const K& field = f.field();
  const auto& target = gs.front().truncation();
  for (const auto& g : gs) {
    if (g.truncation() != target) throw MathError(ErrorKind::ShapeMismatch, "substituted series disagree on truncation");
    if (!field.is_zero(g.constant_term()))
      throw MathError(ErrorKind::NonzeroConstantTerm, "substituted series " + g.to_string());
  }
  std::vector<std::vector<TruncatedPoly<K>>> powers(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    powers[i].push_back(TruncatedPoly<K>::constant(field, target, field.one()));
    for (unsigned k = 1; k < f.truncation()[i]; ++k) {
      if (powers[i].back().is_zero()) break;
      powers[i].push_back(powers[i].back() * gs[i]);
    }
  }
  TruncatedPoly<K> out(field, target);
  for (const auto& [e, c] : f.terms()) {
    TruncatedPoly<K> term = TruncatedPoly<K>::constant(field, target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] >= powers[i].size()) {
        term = TruncatedPoly<K>(field, target);
        break;
      }
      if (e[i] > 0) term *= powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

/// Compositional inverse of a univariate series with f(0) = 0 and f'(0) != 0.
template <ExactField K>
TruncatedPoly<K> compose_inverse(const TruncatedPoly<K>& f) {
  if (f.num_vars() != 1) throw MathError(ErrorKind::InvalidArgument, "compose_inverse needs a univariate series");
  const K& field = f.field();
  const unsigned r = f.truncation()[0];
  if (!field.is_zero(f.constant_term()))
    throw MathError(ErrorKind::NonzeroConstantTerm, "series " + f.to_string() + " has a constant term");
  TruncatedPoly<K> g(field, {r});
  if (r <= 1) return g;
  auto linear = f.coefficient({1});
  if (field.is_zero(linear))
    throw MathError(ErrorKind::NotInvertibleLinearPart, "series " + f.to_string() + " has zero linear coefficient");
  auto inv_linear = field.inv(linear);
  g.add_term({1}, inv_linear);
  // Raising the t^k coefficient of g by d raises the t^k coefficient of f(g) by f'(0) d.
  for (unsigned k = 2; k < r; ++k) {
    auto excess = substitute(f, {g}).coefficient({k});
    if (!field.is_zero(excess)) g.add_term({k}, field.neg(field.mul(excess, inv_linear)));
  }
  return g;
}

/// Index map between monomials Y^a of A_r and 0..dim-1, the first variable
/// being most significant (so the basis of k[Y,Z]/(Y^n,Z^m) matches the tensor
/// basis of k^n (x) k^m).
class MonomialBasis {
 public:
  explicit MonomialBasis(std::vector<unsigned> truncation) : trunc_(std::move(truncation)) {
    dim_ = 1;
    for (unsigned r : trunc_) dim_ *= r;
  }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<unsigned>& truncation() const noexcept { return trunc_; }

  std::size_t index(const Exponent& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < trunc_.size(); ++i) idx = idx * trunc_[i] + e[i];
    return idx;
  }
  Exponent exponent(std::size_t idx) const {
    Exponent e(trunc_.size());
    for (std::size_t i = trunc_.size(); i-- > 0;) {
      e[i] = static_cast<unsigned>(idx % trunc_[i]);
      idx /= trunc_[i];
    }
    return e;
  }

 private:
  std::vector<unsigned> trunc_;
  std::size_t dim_;
};

/// Column vector of a series in the monomial basis.
template <ExactField K>
std::vector<typename K::value_type> to_coordinates(const TruncatedPoly<K>& p) {
  MonomialBasis basis(p.truncation());
  std::vector<typename K::value_type> v(basis.dim(), p.field().zero());
  for (const auto& [e, c] : p.terms()) v[basis.index(e)] = c;
  return v;
}

/// Matrix of the multiplication operator x -> s x on A_r.
template <ExactField K>
Matrix<K> multiplication_operator(const TruncatedPoly<K>& s) {
  MonomialBasis basis(s.truncation());
  Matrix<K> m(s.field(), basis.dim(), basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    TruncatedPoly<K> mono(s.field(), s.truncation());
    mono.add_term(basis.exponent(col), s.field().one());
    const auto product = s * mono;
    for (const auto& [e, c] : product.terms()) m(basis.index(e), col) = c;
  }
  return m;
}

/// Matrix of the algebra endomorphism of A_r with Y_i -> images[i], on the
/// monomial basis.
template <ExactField K>
Matrix<K> algebra_map_matrix(const std::vector<TruncatedPoly<K>>& images) {
  if (images.empty()) throw MathError(ErrorKind::InvalidArgument, "no generator images");
  const auto& trunc = images.front().truncation();
  const K& field = images.front().field();
  MonomialBasis basis(trunc);
  Matrix<K> m(field, basis.dim(), basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    TruncatedPoly<K> mono(field, trunc);
    mono.add_term(basis.exponent(col), field.one());
    const auto image = substitute(mono, images);
    for (const auto& [e, c] : image.terms()) m(basis.index(e), col) = c;
  }
  return m;
}

/// Matrix of the algebra endomorphism with Lambda(Y_i) = Y_i (xi_i + f_i).
/// Nonzero xi and f_i in the augmentation ideal make it an automorphism.
template <ExactField K>
Matrix<K> build_automorphism(const std::vector<typename K::value_type>& xi, const std::vector<TruncatedPoly<K>>& fs,
                             const std::vector<unsigned>& truncation) {
  if (xi.size() != truncation.size() || fs.size() != truncation.size())
    throw MathError(ErrorKind::ShapeMismatch, "automorphism data does not match the number of variables");
  const K& field = fs.front().field();
  std::vector<TruncatedPoly<K>> images;
  for (std::size_t i = 0; i < truncation.size(); ++i) {
    if (field.is_zero(xi[i])) throw MathError(ErrorKind::ZeroLinearScalar, "xi_" + std::to_string(i + 1) + " = 0");
    if (fs[i].truncation() != truncation) throw MathError(ErrorKind::ShapeMismatch, "f_i truncation mismatch");
    if (!field.is_zero(fs[i].constant_term()))
      throw MathError(ErrorKind::NonzeroConstantTerm, "f_" + std::to_string(i + 1) + " = " + fs[i].to_string());
    auto y = TruncatedPoly<K>::variable(field, truncation, i);
    images.push_back(y * (TruncatedPoly<K>::constant(field, truncation, xi[i]) + fs[i]));
  }
  return algebra_map_matrix(images);
}

/// Elementary symmetric polynomial s_j in the variables of A_r.
template <ExactField K>
TruncatedPoly<K> elementary_symmetric(K field, unsigned j, const std::vector<unsigned>& truncation) {
  const std::size_t m = truncation.size();
  TruncatedPoly<K> s(field, truncation);
  if (j > m) return s;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + j, true);
  do {
    Exponent e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = pick[i] ? 1 : 0;
    s.add_term(e, field.one());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return s;
}

/// H_i = (1/j) sum_{|I| = j, i in I} Y_I, so that sum_i H_i = s_j and Y_i | H_i.
template <ExactField K>
std::vector<TruncatedPoly<K>> elementary_symmetric_split(K field, unsigned j, const std::vector<unsigned>& truncation) {
  const std::size_t m = truncation.size();
  if (j < 1 || j > m) throw MathError(ErrorKind::InvalidArgument, "need 1 <= j <= m");
  if (field.is_zero(field.from_int(j)))
    throw MathError(ErrorKind::JNotInvertible, "j = " + std::to_string(j) + " in " + field.spec().to_string());
  auto inv_j = field.inv(field.from_int(j));
  std::vector<TruncatedPoly<K>> hs(m, TruncatedPoly<K>(field, truncation));
  const auto sj = elementary_symmetric(field, j, truncation);
  for (const auto& [e, c] : sj.terms())
    for (std::size_t i = 0; i < m; ++i)
      if (e[i] == 1) hs[i].add_term(e, inv_j);
  return hs;
}

/// A symmetric series written as sum_k coeff_k * s_{j_1} ... s_{j_l}.
template <ExactField K>
struct ElementaryExpansion {
  struct Term {
    typename K::value_type coeff;
    std::vector<unsigned> factors;  // ascending j's
  };
  std::vector<Term> terms;
};

/// Greedy lex-leading reduction of a symmetric series into products of
/// elementary symmetric polynomials (exact in the truncated algebra).
template <ExactField K>
ElementaryExpansion<K> elementary_expansion(const TruncatedPoly<K>& f) {
  if (!f.is_symmetric()) throw MathError(ErrorKind::NotSymmetric, f.to_string());
  const K& field = f.field();
  const std::size_t m = f.num_vars();
  std::vector<TruncatedPoly<K>> s;
  for (unsigned j = 0; j <= m; ++j) s.push_back(elementary_symmetric(field, j, f.truncation()));
  ElementaryExpansion<K> out;
  TruncatedPoly<K> rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    Exponent a = lead;
    auto coeff = c;
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (a[i] < a[i + 1]) throw MathError(ErrorKind::NotSymmetric, "leading exponent not decreasing");
    typename ElementaryExpansion<K>::Term term{coeff, {}};
    TruncatedPoly<K> product = TruncatedPoly<K>::constant(field, f.truncation(), coeff);
    for (std::size_t k = 1; k <= m; ++k) {
      unsigned next = k < m ? a[k] : 0;
      for (unsigned e = 0; e < a[k - 1] - next; ++e) {
        term.factors.push_back(static_cast<unsigned>(k));
        product *= s[k];
      }
    }
    rest -= product;
    out.terms.push_back(std::move(term));
  }
  return out;
}

/// Splits a symmetric f = Y_1 + ... + Y_m + (higher terms) as f = f_1 + ... + f_m
/// with f_i = Y_i mod degree 2, Y_i | f_i and sigma.f_i = f_{sigma^{-1}(i)}.
/// All four properties are re-checked before returning.
template <ExactField K>
std::vector<TruncatedPoly<K>> symmetric_split(const TruncatedPoly<K>& f) {
  const K& field = f.field();
  const std::size_t m = f.num_vars();
  const auto& trunc = f.truncation();
  for (unsigned k = 2; k <= m; ++k)
    if (field.is_zero(field.from_int(k)))
      throw MathError(ErrorKind::FactorialNotInvertible, std::to_string(m) + "! in " + field.spec().to_string());
  if (!f.is_symmetric()) throw MathError(ErrorKind::NotSymmetric, f.to_string());
  if (f.homogeneous_part(1) != elementary_symmetric(field, 1, trunc) || !field.is_zero(f.constant_term()))
    throw MathError(ErrorKind::InvalidArgument, "series is not Y_1 + ... + Y_m modulo degree 2");

  std::vector<TruncatedPoly<K>> s;
  std::vector<std::vector<TruncatedPoly<K>>> h(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    s.push_back(elementary_symmetric(field, j, trunc));
    if (j >= 1) h[j] = elementary_symmetric_split(field, j, trunc);
  }
  std::vector<TruncatedPoly<K>> parts(m, TruncatedPoly<K>(field, trunc));
  for (const auto& term : elementary_expansion(f).terms) {
    // Split the first factor; the remaining product is invariant and rides along.
    TruncatedPoly<K> cofactor = TruncatedPoly<K>::constant(field, trunc, term.coeff);
    for (std::size_t k = 1; k < term.factors.size(); ++k) cofactor *= s[term.factors[k]];
    for (std::size_t i = 0; i < m; ++i) parts[i] += h[term.factors.front()][i] * cofactor;
  }

  TruncatedPoly<K> total(field, trunc);
  for (std::size_t i = 0; i < m; ++i) {
    if (parts[i].homogeneous_part(1) != TruncatedPoly<K>::variable(field, trunc, i) ||
        !field.is_zero(parts[i].constant_term()))
      throw MathError(ErrorKind::InvalidArgument, "split part is not Y_i modulo degree 2");
    for (const auto& [e, c] : parts[i].terms())
      if (e[i] == 0) throw MathError(ErrorKind::InvalidArgument, "split part not divisible by Y_i");
    total += parts[i];
  }
  if (total != f) throw MathError(ErrorKind::InvalidArgument, "split parts do not sum to f");
  std::vector<unsigned> sigma(m);
  for (std::size_t t = 0; t + 1 < m; ++t) {
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::swap(sigma[t], sigma[t + 1]);
    for (std::size_t i = 0; i < m; ++i)
      if (parts[i].permuted(sigma) != parts[sigma[i]])
        throw MathError(ErrorKind::InvalidArgument, "split parts are not permutation-equivariant");
  }
  return parts;
}

}  // namespace jblocks
