#include "jblocks/char0.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace jblocks {

namespace {

std::string_view family_name(WeylFamily f) {
  switch (f) {
    case WeylFamily::A: return "A";
    case WeylFamily::B: return "B";
    case WeylFamily::C: return "C";
    case WeylFamily::D: return "D";
    case WeylFamily::E6: return "E6";
    case WeylFamily::E7: return "E7";
    case WeylFamily::E8: return "E8";
    case WeylFamily::F4: return "F4";
    case WeylFamily::G2: return "G2";
  }
  return "?";
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

unsigned next_prime_above(unsigned n) {
  unsigned p = std::max(n + 1, 3u);
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace

std::string WeylTypeData::name() const {
  std::string s(family_name(family));
  if (family == WeylFamily::A || family == WeylFamily::B || family == WeylFamily::C || family == WeylFamily::D)
    s += std::to_string(rank);
  return s;
}

unsigned WeylTypeData::lie_dimension() const {
  const unsigned r = rank;
  switch (family) {
    case WeylFamily::A: return r * r + 2 * r;
    case WeylFamily::B:
    case WeylFamily::C: return 2 * r * r + r;
    case WeylFamily::D: return 2 * r * r - r;
    case WeylFamily::G2: return 14;
    case WeylFamily::F4: return 52;
    case WeylFamily::E6: return 78;
    case WeylFamily::E7: return 133;
    case WeylFamily::E8: return 248;
  }
  return 0;
}

unsigned WeylTypeData::positive_roots() const {
  const unsigned r = rank;
  switch (family) {
    case WeylFamily::A: return r * (r + 1) / 2;
    case WeylFamily::B:
    case WeylFamily::C: return r * r;
    case WeylFamily::D: return r * (r - 1);
    case WeylFamily::G2: return 6;
    case WeylFamily::F4: return 24;
    case WeylFamily::E6: return 36;
    case WeylFamily::E7: return 63;
    case WeylFamily::E8: return 120;
  }
  return 0;
}

Integer WeylTypeData::weyl_order() const {
  const unsigned r = rank;
  switch (family) {
    case WeylFamily::A: return factorial(r + 1);
    case WeylFamily::B:
    case WeylFamily::C: return (Integer(1) << r) * factorial(r);
    case WeylFamily::D: return (Integer(1) << (r - 1)) * factorial(r);
    case WeylFamily::G2: return 12;
    case WeylFamily::F4: return 1152;
    case WeylFamily::E6: return 51840;
    case WeylFamily::E7: return 2903040;
    case WeylFamily::E8: return 696729600;
  }
  return 0;
}

WeylTypeData exponents(WeylFamily family, unsigned rank) {
  WeylTypeData data{family, rank, {}};
  auto fixed = [&](unsigned r, std::vector<unsigned> e) {
    if (rank != 0 && rank != r)
      throw MathError(ErrorKind::UnknownType, std::string(family_name(family)) + " has rank " + std::to_string(r));
    data.rank = r;
    data.exponents = std::move(e);
  };
  switch (family) {
    case WeylFamily::A:
      if (rank < 1) throw MathError(ErrorKind::UnknownType, "A_r needs r >= 1");
      for (unsigned i = 1; i <= rank; ++i) data.exponents.push_back(i);
      break;
    case WeylFamily::B:
    case WeylFamily::C:
      if (rank < 1) throw MathError(ErrorKind::UnknownType, "B_r and C_r need r >= 1");
      for (unsigned i = 1; i <= rank; ++i) data.exponents.push_back(2 * i - 1);
      break;
    case WeylFamily::D:
      if (rank < 2) throw MathError(ErrorKind::UnknownType, "D_r needs r >= 2");
      for (unsigned i = 1; i < rank; ++i) data.exponents.push_back(2 * i - 1);
      data.exponents.push_back(rank - 1);
      break;
    case WeylFamily::G2: fixed(2, {1, 5}); break;
    case WeylFamily::F4: fixed(4, {1, 5, 7, 11}); break;
    case WeylFamily::E6: fixed(6, {1, 4, 5, 7, 8, 11}); break;
    case WeylFamily::E7: fixed(7, {1, 5, 7, 9, 11, 13, 17}); break;
    case WeylFamily::E8: fixed(8, {1, 7, 11, 13, 17, 19, 23, 29}); break;
  }
  std::sort(data.exponents.begin(), data.exponents.end());

  unsigned sum = 0, dim = 0;
  Integer order = 1;
  for (unsigned e : data.exponents) {
    sum += e;
    dim += 2 * e + 1;
    order *= e + 1;
  }
  if (sum != data.positive_roots() || dim != data.lie_dimension() || order != data.weyl_order())
    throw MathError(ErrorKind::InvalidArgument, "exponent data for " + data.name() + " fails the classical identities");
  return data;
}

WeylTypeData parse_weyl_type(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
      t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "G2") return exponents(WeylFamily::G2);
  if (t == "F4") return exponents(WeylFamily::F4);
  if (t == "E6") return exponents(WeylFamily::E6);
  if (t == "E7") return exponents(WeylFamily::E7);
  if (t == "E8") return exponents(WeylFamily::E8);
  if (t.size() >= 2 && std::string_view("ABCD").find(t[0]) != std::string_view::npos &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      t.size() <= 4) {
    static constexpr WeylFamily families[] = {WeylFamily::A, WeylFamily::B, WeylFamily::C, WeylFamily::D};
    return exponents(families[t[0] - 'A'], static_cast<unsigned>(std::stoul(t.substr(1))));
  }
  throw MathError(ErrorKind::UnknownType, "Weyl type '" + std::string(text) + "'");
}

WeylTypeData classical_weyl_type(ClassicalKind kind, unsigned dimension) {
  switch (kind) {
    case ClassicalKind::GL:
      if (dimension < 2) throw MathError(ErrorKind::UnknownType, "sl_d needs d >= 2");
      return exponents(WeylFamily::A, dimension - 1);
    case ClassicalKind::Sp:
      if (dimension < 2 || dimension % 2) throw MathError(ErrorKind::UnknownType, "sp_d needs even d >= 2");
      return exponents(WeylFamily::C, dimension / 2);
    case ClassicalKind::SO:
      if (dimension < 3) throw MathError(ErrorKind::UnknownType, "so_d needs d >= 3");
      if (dimension % 2) return exponents(WeylFamily::B, (dimension - 1) / 2);
      return exponents(WeylFamily::D, dimension / 2);
  }
  throw MathError(ErrorKind::UnknownType, "classical kind");
}

GradingProfile GradingProfile::from_ad_partition(const Partition& ad) {
  GradingProfile g;
  for (unsigned part : ad) {
    if (part % 2 == 0) throw MathError(ErrorKind::BlocksNotAllOdd, "ad partition " + ad.to_string());
    for (unsigned i = 0; 2 * i + 1 <= part; ++i) ++g.dims[i];
  }
  g.n = g.dims.empty() ? 0 : g.dims.rbegin()->first;
  return g;
}

Partition ad_partition_char0(ClassicalKind kind, const Partition& lambda) {
  const auto additive = FormalGroupLaw::additive();
  RingElement total;
  const std::vector<unsigned> parts(lambda.begin(), lambda.end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (kind == ClassicalKind::GL) {
      for (std::size_t j = 0; j < parts.size(); ++j) total += cg_tensor(parts[i], parts[j]);
      continue;
    }
    const FieldSpec field(next_prime_above(2 * parts[i]));
    Partition self = kind == ClassicalKind::Sp ? sym_partition(Partition{parts[i]}, 2, additive.law(), field)
                                               : wedge_partition(Partition{parts[i]}, 2, additive.law(), field);
    total += RingElement::from_partition(self);
    for (std::size_t j = i + 1; j < parts.size(); ++j) total += cg_tensor(parts[i], parts[j]);
  }
  return total.to_partition();
}

bool springer_condition(const Partition& ad) {
  for (unsigned part : ad)
    if (part % 2 == 0) throw MathError(ErrorKind::BlocksNotAllOdd, "ad partition " + ad.to_string());
  return ad.multiplicity(3) == 1;
}

Partition predict_blocks(const std::vector<unsigned>& exps, unsigned n) {
  const unsigned modulus = n + 1;
  std::vector<unsigned> blocks;
  for (unsigned e : exps) {
    if (e % modulus == 0)
      throw MathError(ErrorKind::ExponentDivisible,
                      "exponent " + std::to_string(e) + " is divisible by n+1 = " + std::to_string(modulus));
    unsigned f = modulus - e % modulus;
    blocks.push_back(2 * f + 1);
  }
  return Partition(std::move(blocks));
}

bool is_distinguished(ClassicalKind kind, const Partition& lambda) {
  if (kind == ClassicalKind::GL) return lambda.length() == 1;
  const unsigned parity = kind == ClassicalKind::Sp ? 0 : 1;
  for (auto [part, count] : lambda.grouped())
    if (count != 1 || part % 2 != parity) return false;
  return true;
}

Char0Report check_theorem(ClassicalKind kind, const Partition& lambda) {
  if (!is_distinguished(kind, lambda))
    throw MathError(ErrorKind::NotDistinguished,
                    lambda.to_string() + " is not distinguished for " + std::string(to_string(kind)));
  Char0Report report{kind, lambda, classical_weyl_type(kind, lambda.size()), {}, {}, 0, false, {}, false};
  report.ad = ad_partition_char0(kind, lambda);
  if (kind == ClassicalKind::GL) report.ad = partition_difference(report.ad, Partition{1});
  report.grading = GradingProfile::from_ad_partition(report.ad);
  report.n = report.grading.n;
  report.gate = springer_condition(report.ad);
  report.predicted = predict_blocks(report.type.exponents, report.n);
  report.contained = contains(report.ad, report.predicted);
  return report;
}

}  // namespace jblocks
