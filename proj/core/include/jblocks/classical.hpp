#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jblocks/rep_ring.hpp"

namespace jblocks {

/// GL acts on gl(V) = V (x) V^*, Sp on sp(V) = Sym^2 V, SO on so(V) = /\^2 V.
enum class ClassicalKind { GL, Sp, SO };

std::string_view to_string(ClassicalKind kind) noexcept;
/// Accepts "GL", "Sp", "SO" (case-insensitive); throws UnknownType.
ClassicalKind parse_classical_kind(std::string_view text);

/// Whether lambda is the partition of a nilpotent element of the Lie algebra:
/// any lambda for GL, odd parts with even multiplicity for Sp, even parts with
/// even multiplicity for SO.
bool validate_classical_partition(ClassicalKind kind, const Partition& lambda);

/// Good primes: every prime for GL, odd primes for Sp and SO.
bool is_good_prime(ClassicalKind kind, unsigned p) noexcept;

/// (1 - t)(1 + t)^{-1} - 1 = 2 sum_{i>=1} (-1)^i t^i modulo t^truncation.
template <ExactField K>
TruncatedPoly<K> cayley_series(K field, unsigned truncation) {
  if (field.characteristic() == 2) throw MathError(ErrorKind::CharTwo, "the Cayley transform needs p != 2");
  std::vector<typename K::value_type> coeffs(truncation, field.zero());
  for (unsigned i = 1; i < truncation; ++i) coeffs[i] = field.from_int(i % 2 ? -2 : 2);
  return TruncatedPoly<K>::univariate(field, truncation, coeffs);
}

/// The identity series t modulo t^truncation.
template <ExactField K>
TruncatedPoly<K> identity_series(K field, unsigned truncation) {
  std::vector<typename K::value_type> coeffs(std::min(truncation, 2u), field.zero());
  if (truncation > 1) coeffs[1] = field.one();
  return TruncatedPoly<K>::univariate(field, truncation, coeffs);
}

/// 1 + eps(X) for a series eps with eps(0) = 0 and nonzero linear term.
template <ExactField K>
Matrix<K> springer_image(const TruncatedPoly<K>& eps, const Matrix<K>& x) {
  const K& field = x.field();
  if (eps.num_vars() != 1) throw MathError(ErrorKind::InvalidArgument, "Springer series must be univariate");
  if (!field.is_zero(eps.constant_term()))
    throw MathError(ErrorKind::NonzeroConstantTerm, "Springer series " + eps.to_string());
  if (eps.truncation()[0] > 1 && field.is_zero(eps.coefficient({1})))
    throw MathError(ErrorKind::NotInvertibleLinearPart, "Springer series " + eps.to_string());
  return Matrix<K>::identity(field, x.rows()) + apply_series(eps, x);
}

/// Default Springer series: the Cayley transform when p != 2, otherwise t.
template <ExactField K>
TruncatedPoly<K> default_springer_series(K field, unsigned truncation) {
  return field.characteristic() == 2 ? identity_series(field, truncation) : cayley_series(field, truncation);
}

/// ad(X) on the adjoint module: X (x) 1 + 1 (x) X^T for GL, Sym^2 and /\^2 of X
/// under the additive law for Sp and SO.
template <ExactField K>
Matrix<K> nilpotent_adjoint_operator(ClassicalKind kind, const Matrix<K>& x) {
  const auto additive = FormalGroupLaw::additive();
  switch (kind) {
    case ClassicalKind::GL: return tensor_operator(x, x.transpose(), additive.law());
    case ClassicalKind::Sp: return sym_operator(x, 2, additive.law());
    case ClassicalKind::SO: return wedge_operator(x, 2, additive.law());
  }
  throw MathError(ErrorKind::UnknownType, "classical kind");
}

/// Ad(u) - 1 for u = 1 + eps(X): (u (x) u') - 1 with u' = 1 + eps(X^T) for GL,
/// and Sym^2 / /\^2 of u - 1 under the multiplicative law for Sp / SO.
template <ExactField K>
Matrix<K> unipotent_adjoint_operator(ClassicalKind kind, const Matrix<K>& x, const TruncatedPoly<K>& eps) {
  const K& field = x.field();
  const auto mult = FormalGroupLaw::multiplicative();
  const auto one = Matrix<K>::identity(field, x.rows());
  Matrix<K> shifted = springer_image(eps, x) - one;
  switch (kind) {
    case ClassicalKind::GL: {
      Matrix<K> dual = springer_image(eps, x.transpose()) - one;
      return tensor_operator(shifted, dual, mult.law());
    }
    case ClassicalKind::Sp: return sym_operator(shifted, 2, mult.law());
    case ClassicalKind::SO: return wedge_operator(shifted, 2, mult.law());
  }
  throw MathError(ErrorKind::UnknownType, "classical kind");
}

Partition nilpotent_adjoint_partition(ClassicalKind kind, const Partition& lambda, FieldSpec field);

/// Uses the default Springer series unless `springer_coeffs` is given; those
/// are the coefficients of t, t^2, ... as rationals reduced into the field.
Partition unipotent_adjoint_partition(ClassicalKind kind, const Partition& lambda, FieldSpec field,
                                      const std::optional<std::vector<Rational>>& springer_coeffs = std::nullopt);

struct AdjointReport {
  ClassicalKind kind;
  Partition lambda;
  unsigned p = 0;
  Partition nilpotent;  // partition of ad(X)
  Partition unipotent;  // partition of Ad(u) - 1
  bool equal = false;
  bool valid_partition = true;
  /// p is bad for the kind: the Sym^2 / /\^2 models are still computed, but
  /// they are no longer identified with the Lie algebra adjoint action.
  bool bad_characteristic = false;
};

AdjointReport good_char_report(ClassicalKind kind, const Partition& lambda, unsigned p);

}  // namespace jblocks
