#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "jblocks/char0.hpp"
#include "jblocks/classical.hpp"
#include "jblocks/g2.hpp"

namespace jblocks::io {

using Json = nlohmann::json;

Json to_json(const Partition& lambda);
/// Positive integers, weakly decreasing. Throws ParseError.
Partition partition_from_json(const Json& j);

/// {"terms": [{"n": 8, "a": 6}, ...]}, largest block first.
Json to_json(const RingElement& x);
RingElement ring_element_from_json(const Json& j);

/// {"vars": m, "trunc": [r_1, ...], "terms": [{"exp": [a_1, ...], "c": "num/den"}]}
template <ExactField K>
Json to_json(const TruncatedPoly<K>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"c", f.field().to_string(c)}});
  return {{"vars", f.num_vars()}, {"trunc", f.truncation()}, {"terms", terms}};
}

/// Coefficients may be JSON integers or strings "n" / "n/d"; they are read as
/// rationals and reduced into the field.
Rational rational_from_json(const Json& j);

template <ExactField K>
TruncatedPoly<K> series_from_json(K field, const Json& j) {
  try {
    const auto trunc = j.at("trunc").get<std::vector<unsigned>>();
    if (j.contains("vars") && j.at("vars").get<std::size_t>() != trunc.size())
      throw MathError(ErrorKind::ParseError, "\"vars\" does not match the length of \"trunc\"");
    TruncatedPoly<K> f(field, trunc);
    for (const auto& term : j.value("terms", Json::array())) {
      auto e = term.at("exp").get<std::vector<unsigned>>();
      if (e.size() != trunc.size()) throw MathError(ErrorKind::ParseError, "exponent of the wrong length");
      f.add_term(e, field.from_rational(rational_from_json(term.at("c"))));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::ParseError, std::string("series: ") + e.what());
  }
}

/// {"p": 2, "trunc": N, "coeffs": [{"a": 1, "b": 1, "c": "1"}]}. "p" is the
/// characteristic the law is meant for; "trunc" is omitted for polynomial laws.
struct LawFile {
  std::optional<unsigned> p;
  GeneralizedLaw law;
};

Json to_json(const GeneralizedLaw& law, std::optional<unsigned> p = std::nullopt);
/// The linear part defaults to u + v unless (1,0) or (0,1) entries are given.
LawFile law_from_json(const Json& j, std::string name = "file");
LawFile load_law_file(const std::filesystem::path& path);

Json to_json(const ValidationReport& report);
/// {"type", "lambda", "p", "ad", "Ad", "equal"}, plus "bad_characteristic".
Json to_json(const AdjointReport& report);
/// {"orbit", "p", "V", "adjoint_nilpotent", "adjoint_unipotent", "routes_agree"},
/// plus the remaining comparison fields of the row.
Json to_json(const G2Row& row);
Json to_json(const G2Table& table);
/// {"type", "lambda", "n", "gate", "predicted", "ad", "contained"}, plus "weyl_type".
Json to_json(const Char0Report& report);

}  // namespace jblocks::io
