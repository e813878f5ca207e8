#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jblocks/char0.hpp"
#include "jblocks/classical.hpp"
#include "jblocks/g2.hpp"
#include "jblocks/io.hpp"
#include "verify/verify.hpp"

namespace {

using namespace jblocks;
using Json = io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// A bad flag value; reported with the flag name and exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned p = 0;
  std::string law = "additive";
  std::string lambda, mu;
  unsigned a = 0, b = 0;
  unsigned m = 2;
  std::uint64_t seed = verify::Options{}.seed;
  bool json = false;
};

FieldSpec field_from(unsigned p) {
  if (p != 0 && !is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not 0 or a prime");
  return FieldSpec(p);
}

Partition partition_from(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError(flag + " is required");
  try {
    return Partition::parse(text);
  } catch (const MathError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

GeneralizedLaw law_from(const std::string& spec) {
  if (spec == "additive" || spec == "Fa" || spec == "F_a") return FormalGroupLaw::additive().law();
  if (spec == "multiplicative" || spec == "Fm" || spec == "F_m") return FormalGroupLaw::multiplicative().law();
  if (spec.rfind("scaled:", 0) == 0) {
    try {
      return FormalGroupLaw::scaled_multiplicative(parse_rational(spec.substr(7))).law();
    } catch (const MathError& e) {
      throw UsageError("--law: " + std::string(e.what()));
    }
  }
  if (!std::filesystem::exists(spec))
    throw UsageError("--law: '" + spec + "' is neither additive, multiplicative, scaled:<c> nor a readable file");
  try {
    return io::load_law_file(spec).law;
  } catch (const MathError& e) {
    throw UsageError("--law: " + std::string(e.what()));
  }
}

/// Built-in laws are valid everywhere; file laws are certified on demand.
FormalGroupLaw group_law_from(const std::string& spec, FieldSpec field, unsigned degree) {
  GeneralizedLaw law = law_from(spec);
  if (law == FormalGroupLaw::additive().law()) return FormalGroupLaw::additive();
  if (law == FormalGroupLaw::multiplicative().law()) return FormalGroupLaw::multiplicative();
  if (spec.rfind("scaled:", 0) == 0) return FormalGroupLaw::scaled_multiplicative(parse_rational(spec.substr(7)));
  return FormalGroupLaw::certify(std::move(law), field, degree);
}

void emit(const Common& c, const Json& j, const std::string& plain) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

int cmd_tensor(const Common& c) {
  const FieldSpec field = field_from(c.p);
  Partition lambda, mu;
  if (c.a || c.b) {
    if (!c.a || !c.b) throw UsageError("--a and --b must be given together");
    if (!c.lambda.empty() || !c.mu.empty()) throw UsageError("--a/--b cannot be combined with --lambda/--mu");
    lambda = Partition{c.a};
    mu = Partition{c.b};
  } else {
    lambda = partition_from("--lambda", c.lambda);
    mu = partition_from("--mu", c.mu);
  }
  const auto law = law_from(c.law);
  const Partition result = tensor_partition(lambda, mu, law, field);
  const RingElement x = RingElement::from_partition(result);
  emit(c,
       {{"lambda", io::to_json(lambda)}, {"mu", io::to_json(mu)}, {"p", c.p}, {"law", law.display_name()},
        {"partition", io::to_json(result)}, {"class", io::to_json(x)}},
       x.to_string());
  return kOk;
}

int cmd_power(const Common& c, bool wedge) {
  const FieldSpec field = field_from(c.p);
  const Partition lambda = partition_from("--lambda", c.lambda);
  if (c.m == 0) throw UsageError("--m must be positive");
  const auto law = law_from(c.law);
  const Partition result =
      wedge ? wedge_partition(lambda, c.m, law, field) : sym_partition(lambda, c.m, law, field);
  const RingElement x = RingElement::from_partition(result);
  emit(c,
       {{"lambda", io::to_json(lambda)}, {"m", c.m}, {"p", c.p}, {"law", law.display_name()},
        {"partition", io::to_json(result)}, {"class", io::to_json(x)}},
       x.to_string());
  return kOk;
}

int cmd_ring_constants(const Common& c, unsigned max_block) {
  const FieldSpec field = field_from(c.p);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (c.a || c.b) {
    if (!c.a || !c.b) throw UsageError("--a and --b must be given together");
    pairs.emplace_back(c.a, c.b);
  } else {
    if (max_block == 0) throw UsageError("--max must be positive");
    for (unsigned n = 1; n <= max_block; ++n)
      for (unsigned m = n; m <= max_block; ++m) pairs.emplace_back(n, m);
  }
  unsigned degree = 1;
  for (auto [n, m] : pairs) degree = std::max(degree, n + m - 2);
  const auto law = group_law_from(c.law, field, degree);
  Json rows = Json::array();
  std::ostringstream plain;
  for (auto [n, m] : pairs) {
    const RingElement x = structure_constants(n, m, law, field);
    rows.push_back({{"n", n}, {"m", m}, {"product", io::to_json(x)}});
    plain << "J" << n << " * J" << m << " = " << x.to_string() << "\n";
  }
  std::string text = plain.str();
  text.pop_back();
  emit(c, {{"p", c.p}, {"law", law.law().display_name()}, {"constants", rows}}, text);
  return kOk;
}

int cmd_adjoint(const Common& c, const std::string& type) {
  const ClassicalKind kind = [&] {
    try {
      return parse_classical_kind(type);
    } catch (const MathError& e) {
      throw UsageError("--type: " + std::string(e.what()));
    }
  }();
  if (c.p == 0 || !is_prime(c.p)) throw UsageError("--p: a prime is required");
  const Partition lambda = partition_from("--lambda", c.lambda);
  const auto report = good_char_report(kind, lambda, c.p);
  std::ostringstream plain;
  plain << to_string(kind) << " " << lambda.to_string() << " p=" << c.p << "\n"
        << "ad: " << report.nilpotent.to_string() << "\n"
        << "Ad: " << report.unipotent.to_string() << "\n"
        << "equal: " << (report.equal ? "yes" : "no");
  if (!report.valid_partition) plain << "\nwarning: " << lambda.to_string() << " is not a nilpotent class of this type";
  if (report.bad_characteristic)
    plain << "\nwarning: p=" << c.p << " is bad for " << to_string(kind) << "; the models are not the adjoint action";
  emit(c, io::to_json(report), plain.str());
  const bool theorem_applies = report.valid_partition && !report.bad_characteristic;
  return theorem_applies && !report.equal ? kCheckFailed : kOk;
}

int cmd_g2(const Common& c) {
  if (c.p <= 3 || !is_prime(c.p)) throw UsageError("--p: a prime > 3 is required");
  const auto table = g2_table(c.p);
  std::ostringstream plain;
  plain << "g2 dimension " << table.g2_dimension << " at p=" << c.p;
  for (const auto& row : table.rows)
    plain << "\n"
          << to_string(row.orbit) << "  V " << row.v_nilpotent.to_string() << "  ad "
          << row.adjoint_nilpotent.to_string() << "  Ad " << row.adjoint_unipotent.to_string()
          << (row.ok() ? "" : "  MISMATCH");
  emit(c, io::to_json(table), plain.str());
  return table.ok() ? kOk : kCheckFailed;
}

std::vector<Rational> coefficients_from(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const MathError& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(flag + " needs at least one coefficient");
  return out;
}

int cmd_springer(const Common& c, const std::string& series_text) {
  const FieldSpec field = field_from(c.p);
  const Partition lambda = partition_from("--lambda", c.lambda);
  std::optional<std::vector<Rational>> coeffs;
  if (!series_text.empty()) coeffs = coefficients_from("--series", series_text);
  const Partition result = visit_field(field, [&](auto k) {
    using Poly = TruncatedPoly<decltype(k)>;
    const unsigned trunc = lambda.largest();
    Poly eps = default_springer_series(k, trunc);
    if (coeffs) {
      eps = Poly(k, {trunc});
      for (std::size_t i = 0; i < coeffs->size() && i + 1 < trunc; ++i)
        eps.add_term({static_cast<unsigned>(i + 1)}, k.from_rational((*coeffs)[i]));
    }
    return unipotent_partition(springer_image(eps, nilpotent_from_partition(k, lambda)));
  });
  const bool same = result == lambda;
  emit(c, {{"lambda", io::to_json(lambda)}, {"p", c.p}, {"unipotent", io::to_json(result)}, {"preserved", same}},
       "1 + eps(X): " + result.to_string() + (same ? "" : "  (differs from " + lambda.to_string() + ")"));
  return same ? kOk : kCheckFailed;
}

int cmd_predict(const Common& c, const std::string& type, const std::string& weyl, unsigned n) {
  if (!weyl.empty()) {
    if (!type.empty()) throw UsageError("--weyl cannot be combined with --type");
    const WeylTypeData data = [&] {
      try {
        return parse_weyl_type(weyl);
      } catch (const MathError& e) {
        throw UsageError("--weyl: " + std::string(e.what()));
      }
    }();
    const unsigned level = n ? n : data.exponents.back();
    const Partition predicted = predict_blocks(data.exponents, level);
    emit(c,
         {{"weyl_type", data.name()}, {"exponents", data.exponents}, {"n", level},
          {"predicted", io::to_json(predicted)}},
         data.name() + " n=" + std::to_string(level) + ": " + predicted.to_string());
    return kOk;
  }
  const ClassicalKind kind = [&] {
    try {
      return parse_classical_kind(type);
    } catch (const MathError& e) {
      throw UsageError("--type: " + std::string(e.what()));
    }
  }();
  const Partition lambda = partition_from("--lambda", c.lambda);
  const auto report = check_theorem(kind, lambda);
  std::ostringstream plain;
  plain << report.type.name() << " " << lambda.to_string() << "\n"
        << "ad: " << report.ad.to_string() << "\n"
        << "n: " << report.n << "\n"
        << "gate: " << (report.gate ? "passes" : "fails") << "\n"
        << "predicted: " << report.predicted.to_string() << "\n"
        << "contained: " << (report.contained ? "yes" : "no");
  emit(c, io::to_json(report), plain.str());
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_series_invert(const Common& c, const std::string& series_text, const std::string& file, unsigned trunc) {
  const FieldSpec field = field_from(c.p);
  if (series_text.empty() == file.empty()) throw UsageError("give exactly one of --series and --file");
  return visit_field(field, [&](auto k) {
    using Poly = TruncatedPoly<decltype(k)>;
    Poly f(k, {1});
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("--file: cannot open " + file);
      Json j;
      try {
        in >> j;
        f = io::series_from_json(k, j);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError("--file: " + std::string(e.what()));
      } catch (const MathError& e) {
        throw UsageError("--file: " + std::string(e.what()));
      }
    } else {
      const auto coeffs = coefficients_from("--series", series_text);
      const unsigned r = trunc ? trunc : static_cast<unsigned>(coeffs.size());
      f = Poly(k, {r});
      for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term({static_cast<unsigned>(i)}, k.from_rational(coeffs[i]));
    }
    const Poly g = compose_inverse(f);
    emit(c, {{"input", io::to_json(f)}, {"inverse", io::to_json(g)}}, g.to_string());
    return kOk;
  });
}

int cmd_verify(const Common& c, const std::vector<std::string>& only, const std::string& law_file) {
  verify::Options options;
  options.seed = c.seed;
  if (!law_file.empty()) options.extra_law = law_from(law_file);
  std::vector<std::string> keys;
  for (const auto& item : only) {
    std::stringstream ss(item);
    std::string key;
    while (std::getline(ss, key, ','))
      if (!key.empty()) keys.push_back(key);
  }
  std::vector<const verify::Suite*> chosen;
  try {
    chosen = verify::select(keys);
  } catch (const MathError& e) {
    throw UsageError("--only: " + std::string(e.what()));
  }
  bool all = true;
  Json results = Json::array();
  for (const auto* suite : chosen) {
    const auto r = verify::run_suite(*suite, options);
    all = all && r.passed;
    if (c.json) {
      results.push_back(verify::to_json(r));
      continue;
    }
    std::cout << verify::summary_line(r) << "\n";
    for (const auto& f : r.failures) std::cout << "    failure: " << f << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    std::cout.flush();
  }
  if (c.json)
    std::cout << Json{{"passed", all}, {"seed", c.seed}, {"suites", results}}.dump(2) << "\n";
  else
    std::cout << (all ? "all suites passed" : "some suites failed") << "\n";
  return all ? kOk : kCheckFailed;
}

void add_field(CLI::App* app, Common& c) { app->add_option("--p", c.p, "characteristic: 0 or a prime")->capture_default_str(); }
void add_law(CLI::App* app, Common& c) {
  app->add_option("--law", c.law, "additive | multiplicative | scaled:<c> | path to a JSON law file")
      ->capture_default_str();
}
void add_json(CLI::App* app, Common& c) { app->add_flag("--json", c.json, "print a JSON document"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan block computations for tensor products, adjoint modules and G2"};
  app.require_subcommand(1);
  Common c;

  auto* tensor = app.add_subcommand("tensor", "partition of the F-tensor product of two nilpotents");
  add_field(tensor, c);
  add_law(tensor, c);
  add_json(tensor, c);
  tensor->add_option("--a", c.a, "first block size");
  tensor->add_option("--b", c.b, "second block size");
  tensor->add_option("--lambda", c.lambda, "first partition, e.g. 3,2,2 or (3,2^2)");
  tensor->add_option("--mu", c.mu, "second partition");

  auto* wedge = app.add_subcommand("wedge", "partition on the m-th exterior power");
  auto* sym = app.add_subcommand("sym", "partition on the m-th symmetric power");
  for (auto* sub : {wedge, sym}) {
    add_field(sub, c);
    add_law(sub, c);
    add_json(sub, c);
    sub->add_option("--lambda", c.lambda, "partition of the nilpotent")->required();
    sub->add_option("--m", c.m, "power")->capture_default_str();
  }

  auto* ring = app.add_subcommand("ring", "representation ring");
  ring->require_subcommand(1);
  unsigned max_block = 9;
  auto* constants = ring->add_subcommand("constants", "structure constants J_n * J_m");
  add_field(constants, c);
  add_law(constants, c);
  add_json(constants, c);
  constants->add_option("--a", c.a, "n");
  constants->add_option("--b", c.b, "m");
  constants->add_option("--max", max_block, "table of all n <= m <= max")->capture_default_str();

  std::string type;
  auto* adjoint = app.add_subcommand("adjoint", "adjoint partitions");
  adjoint->require_subcommand(1);
  auto* classical = adjoint->add_subcommand("classical", "ad(X) and Ad(1+eps(X)) for GL, Sp, SO");
  add_field(classical, c);
  add_json(classical, c);
  classical->add_option("--type", type, "GL | Sp | SO")->required();
  classical->add_option("--lambda", c.lambda, "partition of X on the natural module")->required();

  auto* g2 = app.add_subcommand("g2", "G2 in so7");
  g2->require_subcommand(1);
  auto* table = g2->add_subcommand("table", "partitions of the nilpotent and unipotent classes");
  add_field(table, c);
  add_json(table, c);

  std::string series_text;
  auto* springer = app.add_subcommand("springer", "Springer maps X -> 1 + eps(X)");
  springer->require_subcommand(1);
  auto* apply = springer->add_subcommand("apply", "partition of 1 + eps(X) - 1");
  add_field(apply, c);
  add_json(apply, c);
  apply->add_option("--lambda", c.lambda, "partition of X")->required();
  apply->add_option("--series", series_text, "coefficients of t, t^2, ... (default: Cayley, or t at p=2)");

  std::string weyl;
  unsigned level = 0;
  auto* predict = app.add_subcommand("predict", "characteristic-0 predictions");
  predict->require_subcommand(1);
  auto* char0 = predict->add_subcommand("char0", "adjoint blocks from Weyl group exponents");
  add_json(char0, c);
  char0->add_option("--type", type, "GL | Sp | SO (with --lambda)");
  char0->add_option("--lambda", c.lambda, "distinguished partition");
  char0->add_option("--weyl", weyl, "Weyl type such as G2 or E8 (with --n)");
  char0->add_option("--n", level, "grading level n (default: largest exponent)");

  std::string series_file;
  unsigned trunc = 0;
  auto* series = app.add_subcommand("series", "truncated power series");
  series->require_subcommand(1);
  auto* invert = series->add_subcommand("invert", "compositional inverse of a univariate series");
  add_field(invert, c);
  add_json(invert, c);
  invert->add_option("--series", series_text, "coefficients of 1, t, t^2, ...");
  invert->add_option("--file", series_file, "JSON series file");
  invert->add_option("--trunc", trunc, "truncation (default: number of coefficients)");

  std::vector<std::string> only;
  std::string law_file;
  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->require_subcommand(1);
  auto* paper = verify_cmd->add_subcommand("paper", "run every acceptance suite");
  add_json(paper, c);
  paper->add_option("--only", only, "suite names or criterion numbers (repeatable, comma separated)");
  paper->add_option("--law", law_file, "extra law file checked by the independence suite");
  paper->add_option("--seed", c.seed, "seed for the randomized suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tensor) return cmd_tensor(c);
    if (*wedge) return cmd_power(c, true);
    if (*sym) return cmd_power(c, false);
    if (*constants) return cmd_ring_constants(c, max_block);
    if (*classical) return cmd_adjoint(c, type);
    if (*table) return cmd_g2(c);
    if (*apply) return cmd_springer(c, series_text);
    if (*char0) return cmd_predict(c, type, weyl, level);
    if (*invert) return cmd_series_invert(c, series_text, series_file, trunc);
    if (*paper) return cmd_verify(c, only, law_file);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
