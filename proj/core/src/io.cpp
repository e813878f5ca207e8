#include "jblocks/io.hpp"

#include <algorithm>
#include <fstream>

namespace jblocks::io {

Json to_json(const Partition& lambda) { return Json(std::vector<unsigned>(lambda.begin(), lambda.end())); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw MathError(ErrorKind::ParseError, "partition must be a JSON array");
  std::vector<unsigned> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() <= 0)
      throw MathError(ErrorKind::ParseError, "partition parts must be positive integers, got " + x.dump());
    parts.push_back(x.get<unsigned>());
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw MathError(ErrorKind::ParseError, "partition must be weakly decreasing: " + j.dump());
  return Partition(std::move(parts));
}

Json to_json(const RingElement& x) {
  Json terms = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) terms.push_back({{"n", it->first}, {"a", it->second}});
  return {{"terms", terms}};
}

RingElement ring_element_from_json(const Json& j) {
  try {
    RingElement x;
    for (const auto& term : j.at("terms")) x.add(term.at("n").get<unsigned>(), term.at("a").get<std::int64_t>());
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::ParseError, std::string("ring element: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const MathError& e) {
      throw MathError(ErrorKind::ParseError, "coefficient " + j.dump() + ": " + e.what());
    }
  }
  throw MathError(ErrorKind::ParseError, "coefficient must be an integer or a string, got " + j.dump());
}

Json to_json(const GeneralizedLaw& law, std::optional<unsigned> p) {
  Json coeffs = Json::array();
  for (const auto& [ab, c] : law.coefficients()) coeffs.push_back({{"a", ab.first}, {"b", ab.second}, {"c", c.get_str()}});
  Json j{{"coeffs", coeffs}};
  if (p) j["p"] = *p;
  if (law.truncation()) j["trunc"] = *law.truncation();
  return j;
}

LawFile law_from_json(const Json& j, std::string name) {
  if (!j.is_object()) throw MathError(ErrorKind::ParseError, "law must be a JSON object");
  try {
    std::optional<unsigned> p;
    if (j.contains("p")) {
      p = j.at("p").get<unsigned>();
      if (*p != 0 && !is_prime(*p))
        throw MathError(ErrorKind::ParseError, "\"p\" must be 0 or a prime, got " + std::to_string(*p));
    }
    std::optional<unsigned> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = j.at("trunc").get<unsigned>();
    GeneralizedLaw::Coefficients coeffs{{{1, 0}, 1}, {{0, 1}, 1}};
    for (const auto& term : j.value("coeffs", Json::array()))
      coeffs[{term.at("a").get<unsigned>(), term.at("b").get<unsigned>()}] = rational_from_json(term.at("c"));
    return LawFile{p, GeneralizedLaw(std::move(coeffs), trunc, std::move(name))};
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::ParseError, std::string("law: ") + e.what());
  }
}

LawFile load_law_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MathError(ErrorKind::ParseError, "cannot open law file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return law_from_json(j, path.filename().string());
}

Json to_json(const ValidationReport& report) {
  return {{"degree", report.degree}, {"linear_part", report.linear_part}, {"unit", report.unit},
          {"commutative", report.commutative}, {"associative", report.associative}, {"ok", report.ok()},
          {"failures", report.failures}};
}

Json to_json(const AdjointReport& r) {
  return {{"type", std::string(to_string(r.kind))}, {"lambda", to_json(r.lambda)}, {"p", r.p},
          {"ad", to_json(r.nilpotent)}, {"Ad", to_json(r.unipotent)}, {"equal", r.equal},
          {"valid_partition", r.valid_partition}, {"bad_characteristic", r.bad_characteristic}};
}

Json to_json(const G2Row& r) {
  return {{"orbit", std::string(to_string(r.orbit))},
          {"p", r.p},
          {"V", to_json(r.v_nilpotent)},
          {"adjoint_nilpotent", to_json(r.adjoint_nilpotent)},
          {"adjoint_unipotent", to_json(r.adjoint_unipotent)},
          {"routes_agree", r.routes_agree},
          {"V_unipotent", to_json(r.v_unipotent)},
          {"wedge_nilpotent", to_json(r.wedge_nilpotent)},
          {"wedge_unipotent", to_json(r.wedge_unipotent)},
          {"expected_V", to_json(r.expected_v)},
          {"expected_adjoint", to_json(r.expected_adjoint)},
          {"modes_agree", r.modes_agree},
          {"matches_table", r.matches_table}};
}

Json to_json(const G2Table& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back(to_json(r));
  return rows;
}

Json to_json(const Char0Report& r) {
  return {{"type", std::string(to_string(r.kind))}, {"lambda", to_json(r.lambda)}, {"n", r.n},
          {"gate", r.gate},  {"predicted", to_json(r.predicted)},   {"ad", to_json(r.ad)},
          {"contained", r.contained}, {"weyl_type", r.type.name()}};
}

}  // namespace jblocks::io
