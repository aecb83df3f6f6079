#include "spinvol/intlinalg.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace spinvol {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer &x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

IntMatrix IntMatrix::principal_block(std::size_t first,
                                     std::size_t count) const {
  IntMatrix out(count, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      out(i, j) = (*this)(first + i, first + j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer &factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer &s = (*this)(src, j);
    if (sgn(s) != 0) (*this)(dst, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer &factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer &s = (*this)(i, src);
    if (sgn(s) != 0) (*this)(i, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer &aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

void require_same_shape(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

} // namespace

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
  require_same_shape(a, b);
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
  require_same_shape(a, b);
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix &a) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::vector<Integer> SNFResult::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest |a(i,j)| over i, j >= t; row-major scan keeps the first minimum.
std::optional<Position> find_pivot(const IntMatrix &a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer &x = a(i, j);
      if (sgn(x) == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = Position{i, j};
        best_abs = abs(x);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

class SmithReducer {
public:
  explicit SmithReducer(const IntMatrix &m)
      : a_(m), u_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        v_inv_(IntMatrix::identity(m.cols())) {}

  SNFResult run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < steps; ++t) {
      if (!reduce_at(t)) break;
    }
    return SNFResult{std::move(u_), std::move(a_), std::move(v_),
                     std::move(v_inv_), t};
  }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    v_.swap_cols(a, b);
    v_inv_.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer &f) {
    a_.add_row_multiple(dst, src, f);
    u_.add_row_multiple(dst, src, f);
  }
  // col[dst] += f col[src]; the inverse picks up row[src] -= f row[dst].
  void add_col(std::size_t dst, std::size_t src, const Integer &f) {
    a_.add_col_multiple(dst, src, f);
    v_.add_col_multiple(dst, src, f);
    v_inv_.add_row_multiple(src, dst, -f);
  }

  bool place_pivot(std::size_t t) {
    auto p = find_pivot(a_, t);
    if (!p) return false;
    swap_rows(t, p->row);
    swap_cols(t, p->col);
    return true;
  }

  // Clears row t and column t; true when both are clean.
  bool eliminate(std::size_t t) {
    bool clean = true;
    Integer q;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (sgn(a_(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (sgn(a_(t, j)) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const Integer &p = a_(t, t);
    if (mpz_cmpabs_ui(p.get_mpz_t(), 1) == 0) return std::nullopt;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (sgn(a_(i, j)) != 0 &&
            !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t()))
          return i;
    return std::nullopt;
  }

  bool reduce_at(std::size_t t) {
    if (!place_pivot(t)) return false;
    for (;;) {
      if (!eliminate(t)) {
        // a remainder smaller than the pivot survived; re-pivot
        place_pivot(t);
        continue;
      }
      auto bad = non_divisible_row(t);
      if (!bad) break;
      add_row(t, *bad, Integer(1));
    }
    if (sgn(a_(t, t)) < 0) {
      a_.negate_row(t);
      u_.negate_row(t);
    }
    return true;
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix v_inv_;
};

void require_square(const IntMatrix &m, const char *what) {
  if (!m.is_square())
    throw Error(ErrorCode::NotSquare,
                std::string(what) + " needs a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

} // namespace

SNFResult smith_normal_form(const IntMatrix &m) { return SmithReducer(m).run(); }

IntMatrix integer_kernel(const IntMatrix &m) {
  auto snf = smith_normal_form(m);
  return snf.v.column_block(snf.rank, m.cols() - snf.rank);
}

Inertia inertia(const IntMatrix &m) {
  require_square(m, "inertia");
  if (!m.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "inertia needs a symmetric matrix");

  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = m(i, j);

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;

  Inertia out;
  auto drop = [&alive](std::size_t idx) {
    alive.erase(std::find(alive.begin(), alive.end(), idx));
  };

  Rational f;
  while (!alive.empty()) {
    auto diag = std::find_if(alive.begin(), alive.end(), [&](std::size_t i) {
      return sgn(s[i][i]) != 0;
    });
    if (diag != alive.end()) {
      const std::size_t p = *diag;
      const Rational pivot = s[p][p];
      (sgn(pivot) > 0 ? out.positive : out.negative) += 1;
      drop(p);
      for (std::size_t j : alive) {
        if (sgn(s[j][p]) == 0) continue;
        f = s[j][p] / pivot;
        for (std::size_t k : alive)
          if (sgn(s[p][k]) != 0) s[j][k] -= f * s[p][k];
      }
      continue;
    }

    std::optional<Position> off;
    for (std::size_t a = 0; a < alive.size() && !off; ++a)
      for (std::size_t b = a + 1; b < alive.size(); ++b)
        if (sgn(s[alive[a]][alive[b]]) != 0) {
          off = Position{alive[a], alive[b]};
          break;
        }
    if (!off) {
      out.zero += alive.size();
      break;
    }

    // Zero-diagonal pivot block [[0, b], [b, 0]] is hyperbolic.
    const std::size_t i = off->row, j = off->col;
    const Rational b = s[i][j];
    out.positive += 1;
    out.negative += 1;
    drop(i);
    drop(j);
    std::vector<std::pair<Rational, Rational>> c;
    c.reserve(alive.size());
    for (std::size_t k : alive) c.emplace_back(s[k][i], s[k][j]);
    for (std::size_t x = 0; x < alive.size(); ++x) {
      if (sgn(c[x].first) == 0 && sgn(c[x].second) == 0) continue;
      for (std::size_t y = 0; y < alive.size(); ++y)
        s[alive[x]][alive[y]] -=
            (c[x].first * c[y].second + c[x].second * c[y].first) / b;
    }
  }
  return out;
}

Integer determinant(const IntMatrix &m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    // Gram matrices here are sparse: a row with a(i, k) = 0 only gets
    // rescaled by a(k, k) / prev, which is a no-op when the two agree.
    const bool same_scale = a(k, k) == prev;
    Integer t;
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool zero_lead = sgn(a(i, k)) == 0;
      if (zero_lead && same_scale) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_ptr x = a(i, j).get_mpz_t();
        if (zero_lead || sgn(a(k, j)) == 0) {
          if (mpz_sgn(x) == 0) continue;
          mpz_mul(t.get_mpz_t(), x, a(k, k).get_mpz_t());
        } else {
          mpz_mul(t.get_mpz_t(), x, a(k, k).get_mpz_t());
          mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(),
                     a(k, j).get_mpz_t());
        }
        mpz_divexact(x, t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace spinvol
