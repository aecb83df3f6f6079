#pragma once

// Test-only reference computations. Nothing here calls into the routines
// it is used to check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spinvol/intlinalg.hpp"

namespace oracle {

using spinvol::Integer;
using spinvol::IntMatrix;
using spinvol::Rational;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix &m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = m(i, k);
      }
    const Integer term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

/// Characteristic polynomial det(xI - m) by Faddeev-LeVerrier, lowest
/// degree first.
inline std::vector<Rational> char_poly(const IntMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- a * (mk_prev + c_{n-k+1} I)
    std::vector<std::vector<Rational>> prev = mk;
    for (std::size_t i = 0; i < n; ++i) prev[i][i] += coeff[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * prev[l][j];
        mk[i][j] = s;
      }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    coeff[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return coeff;
}

struct SignCounts {
  std::size_t positive = 0, negative = 0, zero = 0;
};

/// Eigenvalue sign counts of a real symmetric matrix. The characteristic
/// polynomial is real-rooted, so Descartes' rule of signs is exact.
inline SignCounts eigen_signs(const IntMatrix &m) {
  auto c = char_poly(m);
  SignCounts out;
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  out.zero = low;
  auto changes = [&](bool flip) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t i = low; i < c.size(); ++i) {
      int s = sgn(c[i]);
      if (s == 0) continue;
      if (flip && i % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positive = changes(false);
  out.negative = changes(true);
  return out;
}

/// All (n+, n-) with n+ + n- = k whose difference is sigma/2 mod 16,
/// found by scanning every pair in [0, k]^2.
inline std::vector<std::pair<long, long>> brute_rohlin(long sigma, long k) {
  std::vector<std::pair<long, long>> out;
  for (long a = 0; a <= k; ++a)
    for (long b = 0; b <= k; ++b) {
      if (a + b != k) continue;
      long d = (a - b) - sigma / 2;
      if (d % 16 == 0) out.emplace_back(a, b);
    }
  return out;
}

/// Sums of k signs that admit even k+, k- with |k+-| <= bound,
/// k+ + k- = -sigma/8 and k+ - k- = S/4. Enumerates every sign vector.
inline std::vector<long> brute_epsilon_sums(long sigma, long k, long bound) {
  std::vector<bool> reachable(2 * k + 1, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    long s = 0;
    for (long i = 0; i < k; ++i) s += (mask >> i & 1) ? 1 : -1;
    reachable[s + k] = true;
  }
  std::vector<long> out;
  for (long s = -k; s <= k; ++s) {
    if (!reachable[s + k]) continue;
    bool ok = false;
    for (long kp = -bound; kp <= bound && !ok; kp += 1)
      for (long km = -bound; km <= bound && !ok; km += 1) {
        if (kp % 2 != 0 || km % 2 != 0) continue;
        if (8 * (kp + km) != -sigma) continue;
        if (4 * (kp - km) != s) continue;
        ok = true;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  IntMatrix symmetric(std::size_t n, long lo, long hi) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = uniform(lo, hi);
        m(j, i) = m(i, j);
      }
    return m;
  }

  /// Product of random elementary integer operations (det +-1).
  IntMatrix unimodular(std::size_t n, int steps = 12) {
    IntMatrix p = IntMatrix::identity(n);
    if (n < 2) {
      if (n == 1 && uniform(0, 1)) p(0, 0) = -1;
      return p;
    }
    for (int s = 0; s < steps; ++s) {
      auto i = static_cast<std::size_t>(uniform(0, long(n) - 1));
      auto j = static_cast<std::size_t>(uniform(0, long(n) - 2));
      if (j >= i) ++j;
      switch (uniform(0, 2)) {
      case 0: p.add_row_multiple(i, j, Integer(uniform(-2, 2))); break;
      case 1: p.swap_rows(i, j); break;
      default: p.negate_row(i); break;
      }
    }
    return p;
  }

  /// Unimodular p together with its inverse.
  std::pair<IntMatrix, IntMatrix> unimodular_with_inverse(std::size_t n,
                                                          int steps = 12) {
    IntMatrix p = IntMatrix::identity(n), q = IntMatrix::identity(n);
    if (n < 2) return {p, q};
    for (int s = 0; s < steps; ++s) {
      auto i = static_cast<std::size_t>(uniform(0, long(n) - 1));
      auto j = static_cast<std::size_t>(uniform(0, long(n) - 2));
      if (j >= i) ++j;
      switch (uniform(0, 2)) {
      case 0: {
        const Integer f = uniform(-2, 2);
        p.add_row_multiple(i, j, f);
        q.add_col_multiple(j, i, -f);
        break;
      }
      case 1:
        p.swap_rows(i, j);
        q.swap_cols(i, j);
        break;
      default:
        p.negate_row(i);
        q.negate_col(i);
        break;
      }
    }
    return {p, q};
  }

private:
  std::mt19937_64 gen_;
};

} // namespace oracle
