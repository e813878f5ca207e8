#include "jblocks/field.hpp"

#include <cctype>

namespace jblocks {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::FactorialNotInvertible: return "FactorialNotInvertible";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NotInvertibleLinearPart: return "NotInvertibleLinearPart";
    case ErrorKind::ZeroLinearScalar: return "ZeroLinearScalar";
    case ErrorKind::JNotInvertible: return "JNotInvertible";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidLaw: return "InvalidLaw";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::DoesNotStabilize: return "DoesNotStabilize";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::BlocksNotAllOdd: return "BlocksNotAllOdd";
    case ErrorKind::ExponentDivisible: return "ExponentDivisible";
    case ErrorKind::NotDistinguished: return "NotDistinguished";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(unsigned characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw MathError(ErrorKind::InvalidArgument,
                    "characteristic must be 0 or prime, got " + std::to_string(characteristic));
  if (characteristic >= (1u << 31))
    throw MathError(ErrorKind::InvalidArgument, "prime too large: " + std::to_string(characteristic));
}

bool FieldSpec::is_invertible(std::int64_t n) const noexcept {
  if (characteristic_ == 0) return n != 0;
  return n % static_cast<std::int64_t>(characteristic_) != 0;
}

std::string FieldSpec::to_string() const {
  return characteristic_ == 0 ? std::string("Q") : "F_" + std::to_string(characteristic_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw MathError(ErrorKind::InvalidArgument, "not a usable prime: " + std::to_string(p));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw MathError(ErrorKind::InvalidArgument, "division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw MathError(ErrorKind::InvalidArgument,
                    "denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p_));
  if (num < 0) num += p;
  return div(static_cast<value_type>(num.get_ui()), static_cast<value_type>(den.get_ui()));
}

PrimeField::value_type PrimeField::parse(const std::string& text) const {
  return from_rational(parse_rational(text));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw MathError(ErrorKind::InvalidArgument, "division by zero in Q");
  return Rational(1) / a;
}

RationalField::value_type RationalField::parse(const std::string& text) const {
  return parse_rational(text);
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw MathError(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw MathError(ErrorKind::ParseError, "zero denominator: '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace jblocks
