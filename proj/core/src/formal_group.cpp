#include "jblocks/formal_group.hpp"

#include <algorithm>
#include <random>

namespace jblocks {

GeneralizedLaw::GeneralizedLaw(Coefficients coeffs, std::optional<unsigned> truncation, std::string name)
    : truncation_(truncation), name_(std::move(name)) {
  for (auto& [ab, c] : coeffs) {
    if (ab.first == 0 && ab.second == 0) {
      if (c != 0) throw MathError(ErrorKind::InvalidArgument, "law has a constant term " + c.get_str());
      continue;
    }
    if (truncation && ab.first + ab.second > *truncation)
      throw MathError(ErrorKind::InvalidArgument,
                      "coefficient of u^" + std::to_string(ab.first) + " v^" + std::to_string(ab.second) +
                          " exceeds the declared truncation " + std::to_string(*truncation));
    if (c != 0) coeffs_.emplace(ab, c);
  }
  if (xi1() == 0 || xi2() == 0) throw MathError(ErrorKind::ZeroLinearScalar, "law " + to_string());
}

Rational GeneralizedLaw::coefficient(unsigned a, unsigned b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::string GeneralizedLaw::fingerprint() const {
  std::string s = truncation_ ? "t" + std::to_string(*truncation_) : std::string("poly");
  for (const auto& [ab, c] : coeffs_)
    s += ";" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ":" + c.get_str();
  return s;
}

std::string GeneralizedLaw::to_string() const {
  std::string s;
  // Order by total degree, then by descending power of u.
  std::vector<std::pair<std::pair<unsigned, unsigned>, Rational>> terms(coeffs_.begin(), coeffs_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    unsigned dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    return dx != dy ? dx < dy : x.first.first > y.first.first;
  });
  for (const auto& [ab, c] : terms) {
    std::string mono;
    if (ab.first) mono += ab.first == 1 ? std::string("u") : "u^" + std::to_string(ab.first);
    if (ab.second) mono += ab.second == 1 ? std::string("v") : "v^" + std::to_string(ab.second);
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (mag != 1) s += mag.get_str() + (mag.get_den() != 1 ? "*" : "");
    s += mono;
  }
  if (truncation_) s += " + O(deg " + std::to_string(*truncation_ + 1) + ")";
  return s;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "all axioms hold to degree " + std::to_string(degree);
  std::string s;
  for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
  return s;
}

namespace {

template <ExactField K>
ValidationReport validate_in(const GeneralizedLaw& law, K field, unsigned degree) {
  ValidationReport report;
  if (law.truncation()) degree = std::min(degree, *law.truncation());
  report.degree = degree;
  auto c = [&](unsigned a, unsigned b) { return field.from_rational(law.coefficient(a, b)); };

  if (!field.is_one(c(1, 0)) || !field.is_one(c(0, 1))) {
    report.linear_part = false;
    report.failures.push_back("linear part is not u + v");
  }
  for (unsigned a = 2; a <= degree; ++a) {
    if (!field.is_zero(c(a, 0)) || !field.is_zero(c(0, a))) {
      report.unit = false;
      report.failures.push_back("unit axiom F(u,0) = u fails at degree " + std::to_string(a));
      break;
    }
  }
  if (!field.is_one(c(1, 0)) || !field.is_one(c(0, 1))) report.unit = false;
  for (unsigned a = 0; a <= degree && report.commutative; ++a)
    for (unsigned b = a + 1; a + b <= degree; ++b)
      if (!field.is_zero(field.sub(c(a, b), c(b, a)))) {
        report.commutative = false;
        report.failures.push_back("commutativity fails at u^" + std::to_string(a) + " v^" + std::to_string(b));
        break;
      }

  // F(F(u,v),w) = F(u,F(v,w)) compared on monomials of total degree <= degree.
  const std::vector<unsigned> three(3, degree + 1);
  TruncatedPoly<K> f2(field, {degree + 1, degree + 1});
  for (const auto& [ab, coeff] : law.coefficients())
    if (ab.first + ab.second <= degree) f2.add_term({ab.first, ab.second}, field.from_rational(coeff));
  auto u = TruncatedPoly<K>::variable(field, three, 0);
  auto v = TruncatedPoly<K>::variable(field, three, 1);
  auto w = TruncatedPoly<K>::variable(field, three, 2);
  auto left = substitute(f2, {substitute(f2, {u, v}), w});
  auto right = substitute(f2, {u, substitute(f2, {v, w})});
  auto diff = left - right;
  for (const auto& [e, coeff] : diff.terms()) {
    unsigned d = e[0] + e[1] + e[2];
    if (d <= degree) {
      report.associative = false;
      report.failures.push_back("associativity fails at u^" + std::to_string(e[0]) + " v^" + std::to_string(e[1]) +
                                " w^" + std::to_string(e[2]));
      break;
    }
  }
  return report;
}

}  // namespace

ValidationReport validate_fgl(const GeneralizedLaw& law, FieldSpec field, unsigned degree) {
  return visit_field(field, [&](auto k) { return validate_in(law, k, degree); });
}

FormalGroupLaw FormalGroupLaw::additive() {
  return FormalGroupLaw(GeneralizedLaw({{{1, 0}, 1}, {{0, 1}, 1}}, std::nullopt, "additive"), std::nullopt,
                        std::nullopt);
}

FormalGroupLaw FormalGroupLaw::multiplicative() {
  return FormalGroupLaw(GeneralizedLaw({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}, std::nullopt, "multiplicative"),
                        std::nullopt, std::nullopt);
}

FormalGroupLaw FormalGroupLaw::scaled_multiplicative(const Rational& c) {
  GeneralizedLaw law({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, c}}, std::nullopt, "u + v + " + c.get_str() + "uv");
  return FormalGroupLaw(std::move(law), std::nullopt, std::nullopt);
}

FormalGroupLaw FormalGroupLaw::from_logarithm(const std::vector<Integer>& log_coeffs, unsigned truncation,
                                             std::string name) {
  RationalField q;
  const unsigned r = truncation + 1;
  std::vector<Rational> g(r, 0);
  if (r > 1) g[1] = 1;
  for (std::size_t k = 0; k < log_coeffs.size() && k + 2 < r; ++k) g[k + 2] = Rational(log_coeffs[k]);
  auto log = TruncatedPoly<RationalField>::univariate(q, r, g);
  auto exp = compose_inverse(log);
  const std::vector<unsigned> two{r, r};
  auto u = TruncatedPoly<RationalField>::variable(q, two, 0);
  auto v = TruncatedPoly<RationalField>::variable(q, two, 1);
  auto f = substitute(exp, {substitute(log, {u}) + substitute(log, {v})});
  GeneralizedLaw::Coefficients coeffs;
  for (const auto& [e, c] : f.terms())
    if (e[0] + e[1] <= truncation) coeffs[{e[0], e[1]}] = c;
  if (name.empty()) name = "log-law";
  return FormalGroupLaw(GeneralizedLaw(std::move(coeffs), truncation, std::move(name)), std::nullopt, std::nullopt);
}

FormalGroupLaw FormalGroupLaw::certify(GeneralizedLaw law, FieldSpec field, unsigned degree) {
  auto report = validate_fgl(law, field, degree);
  if (!report.ok())
    throw MathError(ErrorKind::InvalidLaw, "law '" + law.display_name() + "' over " + field.to_string() + ": " +
                                               report.to_string());
  return FormalGroupLaw(std::move(law), field, report.degree);
}

void FormalGroupLaw::require_valid(FieldSpec field, unsigned degree) const {
  if (!law_.known_to_degree(degree))
    throw MathError(ErrorKind::TruncationTooShort, "law '" + law_.display_name() + "' is needed to degree " +
                                                       std::to_string(degree));
  if (!field_) return;
  if (*field_ == field && degree_ && *degree_ >= degree) return;
  auto report = validate_fgl(law_, field, degree);
  if (!report.ok() || report.degree < degree)
    throw MathError(ErrorKind::InvalidLaw, "law '" + law_.display_name() + "' over " + field.to_string() + ": " +
                                               (report.ok() ? "only known to degree " + std::to_string(report.degree)
                                                            : report.to_string()));
}

GeneralizedLaw random_generalized_law(std::uint64_t seed, unsigned truncation, FieldSpec field, RandomLawShape shape) {
  std::mt19937_64 rng(seed);
  const unsigned p = field.characteristic();
  auto draw = [&]() -> long {
    if (p == 0) return std::uniform_int_distribution<long>(-3, 3)(rng);
    return static_cast<long>(std::uniform_int_distribution<unsigned>(0, p - 1)(rng));
  };
  auto draw_nonzero = [&]() -> long {
    if (p == 0) {
      long x = std::uniform_int_distribution<long>(1, 3)(rng);
      return std::bernoulli_distribution(0.5)(rng) ? x : -x;
    }
    return static_cast<long>(std::uniform_int_distribution<unsigned>(1, p - 1)(rng));
  };
  GeneralizedLaw::Coefficients coeffs;
  coeffs[{1, 0}] = shape.unit_linear_part ? 1 : draw_nonzero();
  coeffs[{0, 1}] = shape.unit_linear_part ? 1 : draw_nonzero();
  for (unsigned d = 2; d <= truncation; ++d)
    for (unsigned a = 0; a <= d; ++a) {
      long c = draw();
      if (!shape.linear_only) coeffs[{a, d - a}] = c;
    }
  return GeneralizedLaw(std::move(coeffs), truncation, "random(seed=" + std::to_string(seed) + ")");
}

FormalGroupLaw random_formal_group_law(std::uint64_t seed, unsigned truncation) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-2, 2);
  std::vector<Integer> coeffs;
  for (unsigned k = 2; k <= truncation; ++k) coeffs.push_back(draw(rng));
  return FormalGroupLaw::from_logarithm(coeffs, truncation, "random-fgl(seed=" + std::to_string(seed) + ")");
}

}  // namespace jblocks
