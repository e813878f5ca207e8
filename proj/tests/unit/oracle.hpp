#pragma once

// Reference implementations: dense int64 matrices over F_p and Gaussian
// elimination from scratch.

#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "jblocks/matrix.hpp"
#include "jblocks/partition.hpp"
#include "jblocks/rep_ring.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

inline std::size_t rank_mod(Dense m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && mod(m[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const auto iv = inv_mod(mod(m[r][c], p), p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mod(m[i][c], p) == 0) continue;
      const auto f = mod(m[i][c] * iv, p);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

inline Dense multiply(const Dense& a, const Dense& b, std::int64_t p) {
  Dense c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], p);
  return c;
}

/// Jordan partition of a nilpotent dense matrix, from ranks of all powers.
inline jblocks::Partition jordan(const Dense& n, std::int64_t p) {
  const std::size_t d = n.size();
  std::vector<std::size_t> ranks{d};
  Dense pw = n;
  for (std::size_t k = 1; k <= d; ++k) {
    ranks.push_back(rank_mod(pw, p));
    pw = multiply(pw, n, p);
  }
  std::vector<unsigned> parts;
  // blocks of size exactly k: r_{k-1} - 2 r_k + r_{k+1}
  for (std::size_t k = 1; k <= d; ++k) {
    const long next = k + 1 < ranks.size() ? static_cast<long>(ranks[k + 1]) : 0;
    const long count = static_cast<long>(ranks[k - 1]) - 2 * static_cast<long>(ranks[k]) + next;
    for (long i = 0; i < count; ++i) parts.push_back(static_cast<unsigned>(k));
  }
  return jblocks::Partition(parts);
}

inline Dense to_dense(const jblocks::Matrix<jblocks::PrimeField>& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

/// Kronecker-product tensor of nilpotents under the additive law, built by hand.
inline Dense kron_sum(const Dense& a, const Dense& b, std::int64_t p) {
  const std::size_t n = a.size(), m = b.size();
  Dense c(n * m, std::vector<std::int64_t>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          std::int64_t v = 0;
          if (k == l) v += a[i][j];
          if (i == j) v += b[k][l];
          c[i * m + k][j * m + l] = mod(v, p);
        }
  return c;
}

inline Dense shift_block_sum(const jblocks::Partition& lambda) {
  const std::size_t d = lambda.size();
  Dense m(d, std::vector<std::int64_t>(d, 0));
  std::size_t off = 0;
  for (unsigned part : lambda) {
    for (unsigned i = 0; i + 1 < part; ++i) m[off + i][off + i + 1] = 1;
    off += part;
  }
  return m;
}

/// Characteristic-0 Clebsch-Gordan for sl_2: V_n (x) V_m.
inline std::vector<unsigned> clebsch_gordan(unsigned n, unsigned m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < std::min(n, m); ++i) out.push_back(n + m - 1 - 2 * i);
  return out;
}

inline jblocks::Partition random_partition(std::mt19937_64& rng, unsigned max_size, unsigned max_part) {
  std::uniform_int_distribution<unsigned> size(1, max_size);
  unsigned left = size(rng);
  std::vector<unsigned> parts;
  while (left > 0) {
    std::uniform_int_distribution<unsigned> part(1, std::min(left, max_part));
    parts.push_back(part(rng));
    left -= parts.back();
  }
  return jblocks::Partition(parts);
}

}  // namespace oracle

namespace doctest {
template <>
struct StringMaker<jblocks::Partition> {
  static String convert(const jblocks::Partition& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<jblocks::RingElement> {
  static String convert(const jblocks::RingElement& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
