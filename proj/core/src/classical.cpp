#include "jblocks/classical.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace jblocks {

std::string_view to_string(ClassicalKind kind) noexcept {
  switch (kind) {
    case ClassicalKind::GL: return "GL";
    case ClassicalKind::Sp: return "Sp";
    case ClassicalKind::SO: return "SO";
  }
  return "?";
}

ClassicalKind parse_classical_kind(std::string_view text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "GL") return ClassicalKind::GL;
  if (upper == "SP") return ClassicalKind::Sp;
  if (upper == "SO") return ClassicalKind::SO;
  throw MathError(ErrorKind::UnknownType, "classical type '" + std::string(text) + "' (expected GL, Sp or SO)");
}

bool validate_classical_partition(ClassicalKind kind, const Partition& lambda) {
  if (kind == ClassicalKind::GL) return true;
  const unsigned restricted_parity = kind == ClassicalKind::Sp ? 1 : 0;
  for (auto [part, count] : lambda.grouped())
    if (part % 2 == restricted_parity && count % 2 != 0) return false;
  return true;
}

bool is_good_prime(ClassicalKind kind, unsigned p) noexcept { return kind == ClassicalKind::GL || p != 2; }

Partition nilpotent_adjoint_partition(ClassicalKind kind, const Partition& lambda, FieldSpec field) {
  return visit_field(field, [&](auto k) {
    return jordan_partition(nilpotent_adjoint_operator(kind, nilpotent_from_partition(k, lambda)));
  });
}

Partition unipotent_adjoint_partition(ClassicalKind kind, const Partition& lambda, FieldSpec field,
                                      const std::optional<std::vector<Rational>>& springer_coeffs) {
  return visit_field(field, [&](auto k) {
    auto x = nilpotent_from_partition(k, lambda);
    const unsigned truncation = std::max(lambda.largest(), 1u);
    using Series = TruncatedPoly<decltype(k)>;
    Series eps = default_springer_series(k, truncation);
    if (springer_coeffs) {
      eps = Series(k, {truncation});
      for (unsigned i = 0; i < springer_coeffs->size() && i + 1 < truncation; ++i)
        eps.add_term({i + 1}, k.from_rational((*springer_coeffs)[i]));
    }
    return jordan_partition(unipotent_adjoint_operator(kind, x, eps));
  });
}

AdjointReport good_char_report(ClassicalKind kind, const Partition& lambda, unsigned p) {
  AdjointReport report{kind, lambda, p, {}, {}, false, validate_classical_partition(kind, lambda),
                       !is_good_prime(kind, p)};
  FieldSpec field(p);
  report.nilpotent = nilpotent_adjoint_partition(kind, lambda, field);
  report.unipotent = unipotent_adjoint_partition(kind, lambda, field);
  report.equal = report.nilpotent == report.unipotent;
  return report;
}

}  // namespace jblocks
