#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jblocks/classical.hpp"

namespace jblocks {

enum class WeylFamily { A, B, C, D, E6, E7, E8, F4, G2 };

struct WeylTypeData {
  WeylFamily family;
  unsigned rank = 0;
  std::vector<unsigned> exponents;  // ascending

  std::string name() const;
  /// Classical data by closed formula, used to validate the exponents.
  unsigned lie_dimension() const;
  unsigned positive_roots() const;
  Integer weyl_order() const;
};

/// Exponents of the Weyl group of the given type. Ranks: A, B, C >= 1, D >= 2;
/// exceptional families ignore `rank` unless it contradicts the type. Throws
/// UnknownType for an invalid family/rank.
WeylTypeData exponents(WeylFamily family, unsigned rank = 0);
/// "A3", "B2", "D4", "G2", "F4", "E6", "E7", "E8".
WeylTypeData parse_weyl_type(std::string_view text);

/// Type of the simple Lie algebra attached to a classical group on a space of
/// dimension d: GL -> A_{d-1}, Sp -> C_{d/2}, SO -> B_{(d-1)/2} or D_{d/2}.
WeylTypeData classical_weyl_type(ClassicalKind kind, unsigned dimension);

/// dim g(2i) for the grading by an sl_2 with ad partition `ad` (all parts odd).
struct GradingProfile {
  unsigned n = 0;                      // largest i with g(2i) != 0
  std::map<unsigned, unsigned> dims;  // i -> dim g(2i), i >= 0

  static GradingProfile from_ad_partition(const Partition& ad);
};

/// Exact characteristic-0 adjoint partition of a nilpotent with partition
/// lambda on gl(V), sp(V) = Sym^2 V or so(V) = /\^2 V, via Clebsch-Gordan.
Partition ad_partition_char0(ClassicalKind kind, const Partition& lambda);

/// Whether dim g(4) = dim g(2) - 1, i.e. exactly one block of size 3.
/// Throws BlocksNotAllOdd.
bool springer_condition(const Partition& ad);

/// Blocks 2f_i + 1 with f_i = -e_i mod (n+1), 1 <= f_i <= n. Throws
/// ExponentDivisible when some e_i = 0 mod (n+1).
Partition predict_blocks(const std::vector<unsigned>& exponents, unsigned n);

/// GL: one part. Sp: distinct even parts. SO: distinct odd parts.
bool is_distinguished(ClassicalKind kind, const Partition& lambda);

struct Char0Report {
  ClassicalKind kind;
  Partition lambda;
  WeylTypeData type;
  Partition ad;  // traceless part for GL
  GradingProfile grading;
  unsigned n = 0;
  bool gate = false;
  Partition predicted;
  bool contained = false;
  /// The theorem's assertion: when the gate passes, predicted is in ad.
  bool ok() const noexcept { return !gate || contained; }
};

/// Throws NotDistinguished.
Char0Report check_theorem(ClassicalKind kind, const Partition& lambda);

}  // namespace jblocks
