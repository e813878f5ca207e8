#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>

#include "jblocks/char0.hpp"
#include "jblocks/classical.hpp"
#include "jblocks/g2.hpp"
#include "jblocks/io.hpp"

namespace jblocks::verify {

bool Context::check(bool condition, const std::string& what) {
  ++checks_;
  if (!condition) failures_.push_back(what);
  return condition;
}

namespace {

using Rng = std::mt19937_64;

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[uniform(rng, 0, static_cast<unsigned>(xs.size() - 1))];
}

RingElement ring(std::initializer_list<std::pair<unsigned, std::int64_t>> terms) {
  RingElement x;
  for (auto [n, a] : terms) x.add(n, a);
  return x;
}

std::string show(const Partition& p) { return p.to_string(); }
std::string show(const RingElement& x) { return x.to_string(); }

template <class T>
bool expect_equal(Context& ctx, const T& got, const T& want, const std::string& where) {
  return ctx.check(got == want, where + ": got " + show(got) + ", expected " + show(want));
}

Partition block_times(unsigned count, unsigned size) { return Partition(std::vector<unsigned>(count, size)); }

Partition random_partition(Rng& rng, unsigned max_size, unsigned max_part) {
  unsigned remaining = uniform(rng, 1, max_size);
  std::vector<unsigned> parts;
  while (remaining > 0) {
    unsigned part = uniform(rng, 1, std::min(max_part, remaining));
    parts.push_back(part);
    remaining -= part;
  }
  return Partition(std::move(parts));
}

/// A partition valid for `kind` with parts <= max_part and size <= max_size.
Partition random_classical_partition(Rng& rng, ClassicalKind kind, unsigned max_size, unsigned max_part) {
  unsigned remaining = uniform(rng, 1, max_size);
  if (kind == ClassicalKind::Sp && remaining % 2) ++remaining;
  const std::optional<unsigned> paired_parity = kind == ClassicalKind::Sp   ? std::optional<unsigned>(1)
                                                : kind == ClassicalKind::SO ? std::optional<unsigned>(0)
                                                                            : std::nullopt;
  std::vector<unsigned> parts;
  while (remaining > 0) {
    unsigned part = uniform(rng, 1, std::min(max_part, remaining));
    if (paired_parity && part % 2 == *paired_parity) {
      if (2 * part > remaining) continue;
      parts.push_back(part);
      remaining -= part;
    }
    parts.push_back(part);
    remaining -= part;
  }
  return Partition(std::move(parts));
}

std::string field_name(FieldSpec f) { return f.to_string(); }

// 1 -------------------------------------------------------------------------

struct FossumRow {
  unsigned n;
  bool multiplicative;
  RingElement tensor, wedge, sym;
};

void fossum_table(Context& ctx) {
  const std::vector<FossumRow> rows{
      {4, true, ring({{4, 4}}), ring({{2, 1}, {4, 1}}), ring({{4, 2}, {2, 1}})},
      {4, false, ring({{4, 4}}), ring({{3, 2}}), ring({{4, 2}, {1, 2}})},
      {5, true, ring({{8, 2}, {4, 2}, {1, 1}}), ring({{7, 1}, {3, 1}}), ring({{8, 1}, {4, 1}, {3, 1}})},
      {5, false, ring({{8, 2}, {4, 2}, {1, 1}}), ring({{7, 1}, {3, 1}}), ring({{8, 1}, {4, 1}, {1, 3}})},
      {6, true, ring({{8, 4}, {2, 2}}), ring({{8, 1}, {6, 1}, {1, 1}}), ring({{8, 2}, {4, 1}, {1, 1}})},
      {6, false, ring({{8, 4}, {2, 2}}), ring({{7, 2}, {1, 1}}), ring({{8, 2}, {2, 1}, {1, 3}})},
      {7, true, ring({{8, 6}, {1, 1}}), ring({{8, 2}, {5, 1}}), ring({{8, 3}, {4, 1}})},
      {7, false, ring({{8, 6}, {1, 1}}), ring({{7, 3}}), ring({{8, 3}, {1, 4}})},
  };
  const FieldSpec f2(2);
  for (const auto& row : rows) {
    const auto law = row.multiplicative ? FormalGroupLaw::multiplicative() : FormalGroupLaw::additive();
    const std::string tag = "n=" + std::to_string(row.n) + (row.multiplicative ? " F_m" : " F_a");
    const Partition jn{row.n};
    expect_equal(ctx, RingElement::from_partition(tensor_partition(jn, jn, law, f2)), row.tensor, tag + " tensor square");
    expect_equal(ctx, RingElement::from_partition(wedge_partition(jn, 2, law, f2)), row.wedge, tag + " exterior square");
    expect_equal(ctx, RingElement::from_partition(sym_partition(jn, 2, law, f2)), row.sym, tag + " symmetric square");
  }
}

// 2 -------------------------------------------------------------------------

void fossum_independence(Context& ctx) {
  const unsigned max_block = 9;
  const unsigned degree = 2 * max_block - 2;
  for (unsigned p : {2u, 3u, 5u}) {
    const FieldSpec field(p);
    std::vector<GeneralizedLaw> laws{FormalGroupLaw::additive().law(), FormalGroupLaw::multiplicative().law(),
                                     FormalGroupLaw::scaled_multiplicative(7).law(),
                                     FormalGroupLaw::scaled_multiplicative(Rational(-1, 11)).law()};
    for (unsigned i = 0; i < 20; ++i)
      laws.push_back(random_generalized_law(ctx.options().seed * 1000 + 20 * p + i, degree, field, {true, false}));
    if (const auto& extra = ctx.options().extra_law) {
      auto report = validate_fgl(*extra, field, degree);
      if (!ctx.check(report.ok(), "law '" + extra->display_name() + "' over " + field_name(field) + ": " +
                                      report.to_string()))
        continue;
      laws.push_back(*extra);
    }
    for (unsigned n = 1; n <= max_block; ++n)
      for (unsigned m = 1; m <= max_block; ++m) {
        const Partition a{n}, b{m};
        const Partition reference = tensor_partition(a, b, laws.front(), field);
        bool all_same = true;
        std::string culprit;
        for (std::size_t k = 1; k < laws.size() && all_same; ++k) {
          Partition got;
          try {
            got = tensor_partition(a, b, laws[k], field);
          } catch (const MathError& e) {
            culprit = laws[k].display_name() + ": " + e.what();
            all_same = false;
            break;
          }
          if (got != reference) {
            all_same = false;
            culprit = laws[k].display_name() + " gives " + got.to_string() + " vs additive " + reference.to_string();
          }
        }
        ctx.check(all_same, "p=" + std::to_string(p) + " J" + std::to_string(n) + " (x) J" + std::to_string(m) + ": " +
                                culprit);
      }
  }
}

// 3 -------------------------------------------------------------------------

void cyclic_oracle(Context& ctx) {
  const auto mult = FormalGroupLaw::multiplicative();
  for (unsigned p : {2u, 3u}) {
    const PrimeField k(p);
    for (unsigned n = 1; n <= p * p; ++n)
      for (unsigned m = 1; m <= p * p; ++m) {
        auto gn = Matrix<PrimeField>::identity(k, n) + jordan_block(k, n);
        auto gm = Matrix<PrimeField>::identity(k, m) + jordan_block(k, m);
        RingElement oracle = RingElement::from_partition(unipotent_partition(kron(gn, gm)));
        expect_equal(ctx, structure_constants(n, m, mult, FieldSpec(p)), oracle,
                     "p=" + std::to_string(p) + " J" + std::to_string(n) + "*J" + std::to_string(m));
      }
  }
}

// 4 -------------------------------------------------------------------------

void rep_ring_calcs(Context& ctx) {
  const auto additive = FormalGroupLaw::additive();
  for (unsigned p : {5u, 7u, 11u}) {
    const FieldSpec field(p);
    const std::string at = " at p=" + std::to_string(p);
    auto wedge = [&](const Partition& lambda) {
      return RingElement::from_partition(wedge_partition(lambda, 2, additive, field));
    };
    expect_equal(ctx, wedge(Partition{3, 3, 1}), ring({{5, 1}, {3, 5}, {1, 1}}), "/\\^2(2J3+J1)" + at);
    expect_equal(ctx, wedge(Partition{2, 2, 1, 1, 1}), ring({{3, 1}, {2, 6}, {1, 6}}), "/\\^2(2J2+3J1)" + at);

    const RingElement item2 = wedge(Partition{3, 2, 2});
    expect_equal(ctx, item2, ring({{4, 2}, {3, 2}, {2, 2}, {1, 3}}), "/\\^2(J3+2J2)" + at);
    const RingElement printed2 = ring({{4, 2}, {3, 2}, {2, 2}, {1, 1}});
    if (item2 != printed2)
      ctx.note("/\\^2(J3+2J2)" + at + ": computed " + item2.to_string() + " (dim " + std::to_string(item2.dim()) +
               "), printed " + printed2.to_string() + " (dim " + std::to_string(printed2.dim()) + ")");

    const RingElement item4 = wedge(Partition{7});
    const RingElement want4 = p == 7 ? ring({{7, 3}}) : ring({{11, 1}, {7, 1}, {3, 1}});
    expect_equal(ctx, item4, want4, "/\\^2(J7)" + at);
    const RingElement printed4 = p == 7 ? ring({{7, 2}}) : ring({{11, 1}, {3, 1}});
    if (item4 != printed4)
      ctx.note("/\\^2(J7)" + at + ": computed " + item4.to_string() + " (dim " + std::to_string(item4.dim()) +
               "), printed " + printed4.to_string() + " (dim " + std::to_string(printed4.dim()) + ")");
  }
}

// 5 -------------------------------------------------------------------------

void classical_adjoint(Context& ctx) {
  Rng rng(ctx.options().seed + 5);
  const std::vector<ClassicalKind> kinds{ClassicalKind::GL, ClassicalKind::Sp, ClassicalKind::SO};
  const std::vector<unsigned> all_primes{2, 3, 5, 7, 11, 13}, odd_primes{3, 5, 7, 11, 13};
  for (unsigned i = 0; i < 200; ++i) {
    const ClassicalKind kind = pick(rng, kinds);
    const unsigned p = pick(rng, kind == ClassicalKind::GL ? all_primes : odd_primes);
    const Partition lambda = random_classical_partition(rng, kind, 12, 8);
    const auto report = good_char_report(kind, lambda, p);
    const std::string tag = std::string(to_string(kind)) + " " + lambda.to_string() + " p=" + std::to_string(p);
    ctx.check(report.valid_partition && !report.bad_characteristic, tag + ": generator produced an invalid case");
    ctx.check(report.equal, tag + ": ad " + report.nilpotent.to_string() + " vs Ad " + report.unipotent.to_string());
  }
}

// 6 -------------------------------------------------------------------------

void bad_characteristic(Context& ctx) {
  const auto sp = good_char_report(ClassicalKind::Sp, Partition{4}, 2);
  expect_equal(ctx, sp.nilpotent, Partition{4, 4, 1, 1}, "Sp (4) p=2 ad");
  expect_equal(ctx, sp.unipotent, Partition{4, 4, 2}, "Sp (4) p=2 Ad");
  ctx.check(!sp.equal && sp.bad_characteristic, "Sp (4) p=2 must differ and be flagged");

  const auto so = good_char_report(ClassicalKind::SO, Partition{7}, 2);
  expect_equal(ctx, so.nilpotent, Partition{7, 7, 7}, "SO (7) p=2 ad");
  expect_equal(ctx, so.unipotent, Partition{8, 8, 5}, "SO (7) p=2 Ad");
  ctx.check(!so.equal && so.bad_characteristic, "SO (7) p=2 must differ and be flagged");
}

// 7 -------------------------------------------------------------------------

void g2_suite(Context& ctx) {
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    const auto table = g2_table(p);
    const std::string at = " at p=" + std::to_string(p);
    ctx.check(table.g2_dimension == 14, "g2 closure dimension " + std::to_string(table.g2_dimension) + at);
    for (const auto& row : table.rows) {
      const std::string tag = std::string(to_string(row.orbit)) + at;
      expect_equal(ctx, row.v_nilpotent, row.expected_v, tag + " V (nilpotent)");
      expect_equal(ctx, row.v_unipotent, row.expected_v, tag + " V (unipotent)");
      expect_equal(ctx, row.adjoint_nilpotent, row.expected_adjoint, tag + " adjoint (nilpotent, direct)");
      expect_equal(ctx, row.adjoint_unipotent, row.expected_adjoint, tag + " adjoint (unipotent, direct)");
      expect_equal(ctx, row.wedge_nilpotent, row.expected_adjoint, tag + " adjoint (nilpotent, /\\^2 route)");
      expect_equal(ctx, row.wedge_unipotent, row.expected_adjoint, tag + " adjoint (unipotent, /\\^2 route)");
    }
  }
}

// 8 -------------------------------------------------------------------------

void free_over_jp(Context& ctx) {
  for (unsigned p : {3u, 5u, 7u})
    for (const auto& law : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()})
      for (unsigned a = 1; a <= p; ++a)
        expect_equal(ctx, tensor_partition(Partition{a}, Partition{p}, law, FieldSpec(p)), block_times(a, p),
                     law.law().display_name() + " J" + std::to_string(a) + " (x) J" + std::to_string(p) +
                         " at p=" + std::to_string(p));
}

// 9 -------------------------------------------------------------------------

template <ExactField K>
void check_pair_intertwiner(Context& ctx, K field, unsigned n, unsigned m, const GeneralizedLaw& law,
                            const std::string& tag) {
  const std::vector<unsigned> trunc{n, m};
  const auto lambda = build_intertwiner_pair(n, m, law, field);
  const auto y = TruncatedPoly<K>::variable(field, trunc, 0);
  const auto z = TruncatedPoly<K>::variable(field, trunc, 1);
  const auto lhs = lambda * multiplication_operator(y + z);
  const auto rhs = multiplication_operator(law.series(field, trunc)) * lambda;
  ctx.check(lhs == rhs, tag + ": Lambda mu_{y+z} != mu_F Lambda");
  ctx.check(is_invertible(lambda), tag + ": Lambda is singular");
}

template <ExactField K>
void check_symmetric_intertwiner(Context& ctx, K field, unsigned n, unsigned m, const GeneralizedLaw& law,
                                 const std::string& tag) {
  const std::vector<unsigned> trunc(m, n);
  const auto lambda = build_symmetric_intertwiner(n, m, law, field);
  TruncatedPoly<K> sum(field, trunc);
  for (unsigned i = 0; i < m; ++i) sum += TruncatedPoly<K>::variable(field, trunc, i);
  const auto lhs = lambda * multiplication_operator(sum);
  const auto rhs = multiplication_operator(iterated_tensor_series(law, field, trunc)) * lambda;
  ctx.check(lhs == rhs, tag + ": Lambda mu_{sum y} != mu_{(x)F} Lambda");
  ctx.check(is_invertible(lambda), tag + ": Lambda is singular");
  for (unsigned i = 0; i + 1 < m; ++i) {
    std::vector<unsigned> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::swap(sigma[i], sigma[i + 1]);
    const auto perm = variable_permutation(field, sigma, trunc);
    ctx.check(perm * lambda == lambda * perm, tag + ": Lambda does not commute with s_" + std::to_string(i + 1));
  }
}

void intertwiners(Context& ctx) {
  Rng rng(ctx.options().seed + 9);
  const std::vector<unsigned> chars{0, 2, 3, 5, 7};
  for (unsigned i = 0; i < 50; ++i) {
    const unsigned n = uniform(rng, 1, 5), m = uniform(rng, 1, 5);
    const FieldSpec field(pick(rng, chars));
    const auto law = random_generalized_law(rng(), std::max(1u, n + m - 2), field);
    const std::string tag = "pair #" + std::to_string(i) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " over " + field_name(field);
    visit_field(field, [&](auto k) { check_pair_intertwiner(ctx, k, n, m, law, tag); });
  }
  for (unsigned i = 0; i < 50; ++i) {
    const unsigned m = uniform(rng, 2, 3), n = uniform(rng, 2, m == 3 ? 4 : 5);
    const std::vector<unsigned> chars_ok = m == 2 ? std::vector<unsigned>{0, 3, 5, 7} : std::vector<unsigned>{0, 5, 7};
    const FieldSpec field(pick(rng, chars_ok));
    const unsigned degree = m * (n - 1);
    GeneralizedLaw law = FormalGroupLaw::additive().law();
    switch (uniform(rng, 0, 3)) {
      case 0: law = FormalGroupLaw::multiplicative().law(); break;
      case 1: law = FormalGroupLaw::scaled_multiplicative(Rational(static_cast<long>(uniform(rng, 1, 4)))).law(); break;
      default: law = random_formal_group_law(rng(), degree).law(); break;
    }
    const std::string tag = "symmetric #" + std::to_string(i) + " n=" + std::to_string(n) + " m=" +
                            std::to_string(m) + " " + law.display_name() + " over " + field_name(field);
    visit_field(field, [&](auto k) { check_symmetric_intertwiner(ctx, k, n, m, law, tag); });
  }
}

// 10 ------------------------------------------------------------------------

void char0_predictor(Context& ctx) {
  auto regular = [&](ClassicalKind kind, const Partition& lambda) {
    const auto report = check_theorem(kind, lambda);
    const std::string tag = report.type.name() + " regular " + lambda.to_string();
    std::vector<unsigned> blocks;
    for (unsigned e : report.type.exponents) blocks.push_back(2 * e + 1);
    const Partition exact(blocks);
    ctx.check(report.contained, tag + ": predicted " + report.predicted.to_string() + " not in ad " +
                                    report.ad.to_string());
    expect_equal(ctx, report.predicted, exact, tag + " predicted");
    expect_equal(ctx, report.ad, exact, tag + " ad");
  };
  for (unsigned r = 1; r <= 6; ++r) regular(ClassicalKind::GL, Partition{r + 1});
  for (unsigned r = 1; r <= 5; ++r) {
    regular(ClassicalKind::SO, Partition{2 * r + 1});
    regular(ClassicalKind::Sp, Partition{2 * r});
    if (r >= 2) regular(ClassicalKind::SO, Partition{2 * r - 1, 1});
  }
  const auto g2 = exponents(WeylFamily::G2);
  const Partition predicted = predict_blocks(g2.exponents, 5);
  expect_equal(ctx, predicted, Partition{11, 3}, "G2 predicted");
  const auto table = g2_table(13);
  for (const auto& row : table.rows)
    if (row.orbit == G2Orbit::G2reg)
      ctx.check(contains(row.adjoint_nilpotent, predicted),
                "G2 predicted " + predicted.to_string() + " not in " + row.adjoint_nilpotent.to_string());
}

// 11 ------------------------------------------------------------------------

void properties(Context& ctx) {
  Rng rng(ctx.options().seed + 11);
  const std::vector<unsigned> chars{0, 2, 3, 5, 7, 11};

  // Series conjugation invariance.
  for (unsigned i = 0; i < 100; ++i) {
    const FieldSpec field(pick(rng, chars));
    const Partition lambda = random_partition(rng, 10, 7);
    const unsigned trunc = lambda.largest() + uniform(rng, 0, 2);
    std::vector<long> coeffs(trunc, 0);
    for (unsigned k = 2; k < trunc; ++k) coeffs[k] = static_cast<long>(uniform(rng, 0, 6)) - 3;
    if (trunc > 1) {
      coeffs[1] = static_cast<long>(uniform(rng, 1, 6));
      if (field.characteristic() != 0 && coeffs[1] % field.characteristic() == 0) coeffs[1] = 1;
    }
    visit_field(field, [&](auto k) {
      using Poly = TruncatedPoly<decltype(k)>;
      std::vector<typename decltype(k)::value_type> c;
      for (long x : coeffs) c.push_back(k.from_int(x));
      const Poly eps = Poly::univariate(k, trunc, c);
      const auto got = jordan_partition(apply_series(eps, nilpotent_from_partition(k, lambda)));
      expect_equal(ctx, got, lambda, "eps(X) for " + lambda.to_string() + " over " + field_name(field));
    });
  }

  // Dimension conservation.
  const std::vector<GeneralizedLaw> laws{FormalGroupLaw::additive().law(), FormalGroupLaw::multiplicative().law()};
  for (unsigned i = 0; i < 40; ++i) {
    const unsigned p = pick(rng, std::vector<unsigned>{2, 3, 5, 7});
    const FieldSpec field(p);
    const auto& law = pick(rng, laws);
    const Partition a = random_partition(rng, 8, 6), b = random_partition(rng, 8, 6);
    const unsigned d = a.size();
    const std::string tag = a.to_string() + "," + b.to_string() + " p=" + std::to_string(p);
    ctx.check(tensor_partition(a, b, law, field).size() == d * b.size(), tag + ": tensor dimension");
    ctx.check(wedge_partition(a, 2, law, field).size() == d * (d - 1) / 2, tag + ": /\\^2 dimension");
    ctx.check(sym_partition(a, 2, law, field).size() == d * (d + 1) / 2, tag + ": Sym^2 dimension");
    const RingElement x = RingElement::from_partition(a), y = RingElement::from_partition(b);
    const auto fgl = p % 2 ? FormalGroupLaw::multiplicative() : FormalGroupLaw::additive();
    ctx.check(ring_multiply(x, y, fgl, field).dim() == x.dim() * y.dim(), tag + ": ring product dimension");
    const auto kind = pick(rng, std::vector<ClassicalKind>{ClassicalKind::GL, ClassicalKind::Sp, ClassicalKind::SO});
    const Partition c = random_classical_partition(rng, kind, 8, 6);
    const unsigned e = c.size();
    const unsigned want = kind == ClassicalKind::GL ? e * e : kind == ClassicalKind::Sp ? e * (e + 1) / 2 : e * (e - 1) / 2;
    const auto report = good_char_report(kind, c, p);
    ctx.check(report.nilpotent.size() == want && report.unipotent.size() == want,
              std::string(to_string(kind)) + " " + c.to_string() + ": adjoint dimension");
    ctx.check(ad_partition_char0(kind, c).size() == want,
              std::string(to_string(kind)) + " " + c.to_string() + ": char-0 adjoint dimension");
    const unsigned n = uniform(rng, 1, 9), m = uniform(rng, 1, 9);
    ctx.check(cg_tensor(n, m).dim() == static_cast<std::int64_t>(n * m), "CG dimension");
  }
  for (unsigned p : {5u, 7u}) {
    const auto table = g2_table(p);
    for (const auto& row : table.rows)
      ctx.check(row.adjoint_nilpotent.size() == 14 && row.adjoint_unipotent.size() == 14 &&
                    row.v_nilpotent.size() == 7,
                "G2 " + std::string(to_string(row.orbit)) + ": dimensions");
  }

  // Multilinear independence of the law when m! is invertible.
  const auto additive = FormalGroupLaw::additive();
  for (unsigned i = 0; i < 50; ++i) {
    const std::uint64_t seed = ctx.options().seed * 100 + i;
    for (unsigned m : {2u, 3u})
      for (unsigned p : {5u, 7u}) {
        const Partition lambda = random_partition(rng, m == 2 ? 7 : 4, m == 2 ? 5 : 4);
        const auto law = random_formal_group_law(seed, std::max(1u, m * (lambda.largest() - 1)));
        const FieldSpec field(p);
        const std::string tag = law.law().display_name() + " m=" + std::to_string(m) + " p=" + std::to_string(p) +
                                " " + lambda.to_string();
        expect_equal(ctx, wedge_partition(lambda, m, law, field), wedge_partition(lambda, m, additive, field),
                     tag + " exterior power");
        expect_equal(ctx, sym_partition(lambda, m, law, field), sym_partition(lambda, m, additive, field),
                     tag + " symmetric power");
      }
  }
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {1, "fossum-table", "char-2 tensor, exterior and symmetric squares of J4..J7", 5, fossum_table},
      {2, "fossum-independence", "structure constants independent of the law, n,m <= 9, p in {2,3,5}", 60,
       fossum_independence},
      {3, "cyclic-oracle", "multiplicative law agrees with the cyclic-group tensor product", 0, cyclic_oracle},
      {4, "rep-ring-calcs", "exterior squares at p in {5,7,11}", 0, rep_ring_calcs},
      {5, "classical-adjoint", "ad and Ad partitions agree in good characteristic (200 cases)", 120,
       classical_adjoint},
      {6, "bad-characteristic", "Sp_4 and SO_7 at p = 2", 0, bad_characteristic},
      {7, "g2", "G2 partitions on V and on the adjoint module, p in {5,7,11,13}", 30, g2_suite},
      {8, "free-over-jp", "J_a (x) J_p = a J_p in characteristic p", 0, free_over_jp},
      {9, "intertwiners", "pair and symmetric intertwiners (50 cases each)", 0, intertwiners},
      {10, "char0", "characteristic-0 predictor from Weyl group exponents", 0, char0_predictor},
      {11, "properties", "series invariance, dimension conservation, multilinear independence", 0, properties},
  };
  return all;
}

std::vector<const Suite*> select(const std::vector<std::string>& only) {
  std::vector<const Suite*> out;
  for (const auto& suite : suites()) {
    bool wanted = only.empty();
    for (const auto& key : only)
      if (key == suite.name || key == std::to_string(suite.criterion)) wanted = true;
    if (wanted) out.push_back(&suite);
  }
  for (const auto& key : only) {
    bool matched = false;
    for (const auto& suite : suites())
      if (key == suite.name || key == std::to_string(suite.criterion)) matched = true;
    if (!matched) throw MathError(ErrorKind::InvalidArgument, "no verification suite named '" + key + "'");
  }
  return out;
}

SuiteResult run_suite(const Suite& suite, const Options& options) {
  Context ctx(options);
  const auto start = std::chrono::steady_clock::now();
  std::string crash;
  try {
    suite.body(ctx);
  } catch (const std::exception& e) {
    crash = std::string("aborted: ") + e.what();
  }
  SuiteResult r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.criterion = suite.criterion;
  r.name = suite.name;
  r.title = suite.title;
  r.time_limit = suite.time_limit;
  r.checks = ctx.checks();
  r.failures = ctx.failures();
  r.notes = ctx.notes();
  if (!crash.empty()) r.failures.push_back(crash);
  if (suite.time_limit > 0 && r.seconds > suite.time_limit)
    r.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(suite.time_limit) + " s");
  r.passed = r.failures.empty();
  return r;
}

std::vector<SuiteResult> run(const std::vector<const Suite*>& chosen, const Options& options) {
  std::vector<SuiteResult> out;
  for (const Suite* s : chosen) out.push_back(run_suite(*s, options));
  return out;
}

std::string summary_line(const SuiteResult& r) {
  char timing[96];
  if (r.time_limit > 0)
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.time_limit);
  else
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  criterion " + std::to_string(r.criterion) + "  " + r.name +
         "  (" + std::to_string(r.checks) + " checks, " + timing + ")";
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"criterion", r.criterion}, {"name", r.name},         {"title", r.title},
          {"passed", r.passed},       {"checks", r.checks},     {"seconds", r.seconds},
          {"time_limit", r.time_limit}, {"failures", r.failures}, {"notes", r.notes}};
}

}  // namespace jblocks::verify
