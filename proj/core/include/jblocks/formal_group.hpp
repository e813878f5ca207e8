#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jblocks/field.hpp"
#include "jblocks/series.hpp"

namespace jblocks {

/// A two-variable series F(u, v) = sum c_ab u^a v^b with c_00 = 0 and a
/// linear part xi_1 u + xi_2 v. Coefficients are rational and are reduced into
/// whichever field the law is used over.
///
/// A law is either a polynomial (every coefficient known, `truncation()` is
/// empty) or known only for a + b <= truncation.
class GeneralizedLaw {
 public:
  using Coefficients = std::map<std::pair<unsigned, unsigned>, Rational>;

  GeneralizedLaw(Coefficients coeffs, std::optional<unsigned> truncation, std::string name = {});

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  std::optional<unsigned> truncation() const noexcept { return truncation_; }
  const std::string& name() const noexcept { return name_; }

  Rational coefficient(unsigned a, unsigned b) const;
  Rational xi1() const { return coefficient(1, 0); }
  Rational xi2() const { return coefficient(0, 1); }

  /// True when every coefficient with a + b <= degree is known.
  bool known_to_degree(unsigned degree) const noexcept { return !truncation_ || *truncation_ >= degree; }

  /// Stable text identifying the coefficients; used as a memo key.
  std::string fingerprint() const;

  /// Polynomial notation such as "u + v + uv".
  std::string to_string() const;

  /// F as an element of k[u,v]/(u^{trunc[0]}, v^{trunc[1]}). Throws
  /// TruncationTooShort if a needed coefficient is unknown and ZeroLinearScalar
  /// if xi_1 or xi_2 vanishes in the field.
  template <ExactField K>
  TruncatedPoly<K> series(K field, std::vector<unsigned> trunc) const {
    if (trunc.size() != 2) throw MathError(ErrorKind::InvalidArgument, "a law has two variables");
    unsigned needed = trunc[0] + trunc[1] - 2;
    if (!known_to_degree(needed))
      throw MathError(ErrorKind::TruncationTooShort, "law '" + display_name() + "' is known to degree " +
                                                         std::to_string(*truncation_) + ", need " +
                                                         std::to_string(needed));
    if (field.is_zero(field.from_rational(xi1())) || field.is_zero(field.from_rational(xi2())))
      throw MathError(ErrorKind::ZeroLinearScalar,
                      "law '" + display_name() + "' has a vanishing linear coefficient in " + field.spec().to_string());
    TruncatedPoly<K> f(field, trunc);
    for (const auto& [ab, c] : coeffs_) f.add_term({ab.first, ab.second}, field.from_rational(c));
    return f;
  }

  std::string display_name() const { return name_.empty() ? to_string() : name_; }

  friend bool operator==(const GeneralizedLaw& a, const GeneralizedLaw& b) {
    return a.coeffs_ == b.coeffs_ && a.truncation_ == b.truncation_;
  }

 private:
  Coefficients coeffs_;
  std::optional<unsigned> truncation_;
  std::string name_;
};

struct ValidationReport {
  unsigned degree = 0;  // identities checked modulo (u,v,w)^{degree+1}
  bool linear_part = true;
  bool unit = true;
  bool commutative = true;
  bool associative = true;
  std::vector<std::string> failures;

  bool ok() const noexcept { return linear_part && unit && commutative && associative; }
  std::string to_string() const;
};

/// Checks the formal group law axioms up to total degree `degree` (capped at
/// the law's own truncation) over the given field.
ValidationReport validate_fgl(const GeneralizedLaw& law, FieldSpec field, unsigned degree);

/// A generalized law certified to satisfy the group-law axioms, either over
/// every field (the built-in polynomial laws) or over one specific field.
class FormalGroupLaw {
 public:
  static FormalGroupLaw additive();
  static FormalGroupLaw multiplicative();
  /// u + v + c uv; c = 0 gives the additive law.
  static FormalGroupLaw scaled_multiplicative(const Rational& c);

  /// g^{-1}(g(u) + g(v)) for g(t) = t + sum_k log_coeffs[k-2] t^k, known to
  /// total degree `truncation`. Integral coefficients make it a law over Z,
  /// hence over every field.
  static FormalGroupLaw from_logarithm(const std::vector<Integer>& log_coeffs, unsigned truncation,
                                       std::string name = {});
  /// Throws InvalidLaw with the validation report when an axiom fails.
  static FormalGroupLaw certify(GeneralizedLaw law, FieldSpec field, unsigned degree);

  const GeneralizedLaw& law() const noexcept { return law_; }
  operator const GeneralizedLaw&() const noexcept { return law_; }
  /// Empty for laws valid over every field.
  std::optional<FieldSpec> certified_field() const noexcept { return field_; }
  std::optional<unsigned> certified_degree() const noexcept { return degree_; }

  /// Re-checks the axioms if this law has not been certified for (field, degree).
  void require_valid(FieldSpec field, unsigned degree) const;

 private:
  FormalGroupLaw(GeneralizedLaw law, std::optional<FieldSpec> field, std::optional<unsigned> degree)
      : law_(std::move(law)), field_(field), degree_(degree) {}

  GeneralizedLaw law_;
  std::optional<FieldSpec> field_;
  std::optional<unsigned> degree_;
};

/// The m-variable series with one variable: Y_1, and m variables:
/// F(previous(Y_1..Y_{m-1}), Y_m), computed in A_r for r = truncation.
template <ExactField K>
TruncatedPoly<K> iterated_tensor_series(const GeneralizedLaw& law, K field, const std::vector<unsigned>& truncation) {
  const std::size_t m = truncation.size();
  if (m == 0) throw MathError(ErrorKind::InvalidArgument, "need at least one variable");
  TruncatedPoly<K> result = TruncatedPoly<K>::variable(field, truncation, 0);
  unsigned prev_degree = truncation[0] - 1;
  for (std::size_t k = 1; k < m; ++k) {
    auto f = law.series(field, {prev_degree + 1, truncation[k]});
    result = substitute(f, {result, TruncatedPoly<K>::variable(field, truncation, k)});
    prev_degree += truncation[k] - 1;
  }
  return result;
}

struct RandomLawShape {
  bool unit_linear_part = false;  // force xi = (1, 1)
  bool linear_only = false;       // zero every coefficient of degree >= 2
};

/// Deterministic random generalized law with coefficients in the prime field
/// (residues 0..p-1) or small integers in characteristic 0.
GeneralizedLaw random_generalized_law(std::uint64_t seed, unsigned truncation, FieldSpec field,
                                      RandomLawShape shape = {});

/// from_logarithm with logarithm coefficients drawn uniformly from [-2, 2].
FormalGroupLaw random_formal_group_law(std::uint64_t seed, unsigned truncation);

}  // namespace jblocks
