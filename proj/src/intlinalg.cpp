#include "intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace capgroup {

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j)
    return;
  for (size_t c = 0; c < cols_; ++c)
    std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::negate_row(size_t i) {
  for (size_t c = 0; c < cols_; ++c)
    (*this)(i, c) = checked_neg((*this)(i, c));
}

void IntMatrix::row_axpy(size_t i, size_t j, int64_t factor) {
  if (factor == 0)
    return;
  for (size_t c = 0; c < cols_; ++c)
    (*this)(i, c) = checked_add((*this)(i, c), checked_mul(factor, (*this)(j, c)));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j)
    return;
  for (size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_col(size_t i) {
  for (size_t r = 0; r < rows_; ++r)
    (*this)(r, i) = checked_neg((*this)(r, i));
}

void IntMatrix::col_axpy(size_t i, size_t j, int64_t factor) {
  if (factor == 0)
    return;
  for (size_t r = 0; r < rows_; ++r)
    (*this)(r, i) = checked_add((*this)(r, i), checked_mul(factor, (*this)(r, j)));
}

void IntMatrix::combine_rows(size_t i, size_t j, int64_t a, int64_t b,
                             int64_t c, int64_t d) {
  for (size_t k = 0; k < cols_; ++k) {
    int64_t ri = (*this)(i, k);
    int64_t rj = (*this)(j, k);
    (*this)(i, k) = checked_add(checked_mul(a, ri), checked_mul(b, rj));
    (*this)(j, k) = checked_add(checked_mul(c, ri), checked_mul(d, rj));
  }
}

void IntMatrix::combine_cols(size_t i, size_t j, int64_t a, int64_t b,
                             int64_t c, int64_t d) {
  for (size_t k = 0; k < rows_; ++k) {
    int64_t ci = (*this)(k, i);
    int64_t cj = (*this)(k, j);
    (*this)(k, i) = checked_add(checked_mul(a, ci), checked_mul(b, cj));
    (*this)(k, j) = checked_add(checked_mul(c, ci), checked_mul(d, cj));
  }
}

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    fail(errc::invalid_argument, "matmul: dimension mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (size_t j = 0; j < b.cols(); ++j)
        r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
    }
  return r;
}

XgcdResult ext_gcd(int64_t a, int64_t b) {
  if (a == 0 && b == 0)
    return {0, 0, 0};
  int64_t old_r = a, r = b;
  int64_t old_s = 1, s = 0;
  int64_t old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = checked_div(old_r, r);
    int64_t tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_s = checked_neg(old_s);
    old_t = checked_neg(old_t);
  }
  return {old_r, old_s, old_t};
}

HnfResult hermite_normal_form(const IntMatrix &m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    size_t nz = pivot_row;
    while (nz < h.rows() && h(nz, col) == 0)
      ++nz;
    if (nz == h.rows())
      continue;
    h.swap_rows(pivot_row, nz);
    u.swap_rows(pivot_row, nz);
    // Clear the column below the pivot with unimodular row pairs.
    for (size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0)
        continue;
      auto [g, s, t] = ext_gcd(h(pivot_row, col), h(i, col));
      int64_t a = checked_div(h(pivot_row, col), g);
      int64_t b = checked_div(h(i, col), g);
      // det [[s, t], [-b, a]] = s*a + t*b = 1
      h.combine_rows(pivot_row, i, s, t, checked_neg(b), a);
      u.combine_rows(pivot_row, i, s, t, checked_neg(b), a);
    }
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    int64_t pivot = h(pivot_row, col);
    for (size_t i = 0; i < pivot_row; ++i) {
      int64_t q = floor_div(h(i, col), pivot);
      if (q != 0) {
        h.row_axpy(i, pivot_row, checked_neg(q));
        u.row_axpy(i, pivot_row, checked_neg(q));
      }
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

namespace {

// Position of the entry of minimal nonzero magnitude in the trailing block
// d[s.., s..], or nullopt when the block is zero.
std::optional<std::pair<size_t, size_t>> min_nonzero(const IntMatrix &d,
                                                     size_t s) {
  std::optional<std::pair<size_t, size_t>> best;
  uint64_t best_mag = 0;
  for (size_t i = s; i < d.rows(); ++i)
    for (size_t j = s; j < d.cols(); ++j) {
      int64_t e = d(i, j);
      if (e == 0)
        continue;
      uint64_t mag = e < 0 ? -static_cast<uint64_t>(e) : static_cast<uint64_t>(e);
      if (!best || mag < best_mag) {
        best = {{i, j}};
        best_mag = mag;
      }
    }
  return best;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  size_t nmin = std::min(m.rows(), m.cols());
  for (size_t s = 0; s < nmin; ++s) {
    for (;;) {
      auto pos = min_nonzero(d, s);
      if (!pos)
        return {std::move(d), std::move(u), std::move(v)}; // trailing block zero
      d.swap_rows(s, pos->first);
      u.swap_rows(s, pos->first);
      d.swap_cols(s, pos->second);
      v.swap_cols(s, pos->second);
      int64_t pivot = d(s, s);
      bool clean = true;
      for (size_t i = s + 1; i < d.rows(); ++i) {
        if (d(i, s) == 0)
          continue;
        int64_t q = checked_div(d(i, s), pivot);
        d.row_axpy(i, s, checked_neg(q));
        u.row_axpy(i, s, checked_neg(q));
        if (d(i, s) != 0)
          clean = false; // remainder left, re-pivot on it
      }
      for (size_t j = s + 1; j < d.cols(); ++j) {
        if (d(s, j) == 0)
          continue;
        int64_t q = checked_div(d(s, j), pivot);
        d.col_axpy(j, s, checked_neg(q));
        v.col_axpy(j, s, checked_neg(q));
        if (d(s, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Pivot must divide the whole trailing block for the divisibility
      // chain; fold an offending row into row s and reduce again.
      bool divides = true;
      for (size_t i = s + 1; i < d.rows() && divides; ++i)
        for (size_t j = s + 1; j < d.cols(); ++j)
          if (checked_rem(d(i, j), pivot) != 0) {
            d.row_axpy(s, i, 1);
            u.row_axpy(s, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (d(s, s) < 0) {
      d.negate_row(s);
      u.negate_row(s);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::optional<std::vector<int64_t>>
solve_against_echelon(const IntMatrix &h, std::span<const int64_t> v) {
  if (v.size() != h.cols())
    fail(errc::invalid_argument, "solve: vector length does not match columns");
  std::vector<int64_t> residual(v.begin(), v.end());
  std::vector<int64_t> y(h.rows(), 0);
  for (size_t i = 0; i < h.rows(); ++i) {
    size_t p = 0;
    while (p < h.cols() && h(i, p) == 0)
      ++p;
    if (p == h.cols())
      break; // zero rows are at the bottom
    if (checked_rem(residual[p], h(i, p)) != 0)
      return std::nullopt;
    int64_t q = checked_div(residual[p], h(i, p));
    y[i] = q;
    if (q != 0)
      for (size_t c = p; c < h.cols(); ++c)
        residual[c] = checked_sub(residual[c], checked_mul(q, h(i, c)));
  }
  for (int64_t r : residual)
    if (r != 0)
      return std::nullopt;
  return y;
}

std::optional<std::vector<int64_t>>
solve_in_rowspace(const IntMatrix &b, std::span<const int64_t> v) {
  auto [h, u] = hermite_normal_form(b);
  auto y = solve_against_echelon(h, v);
  if (!y)
    return std::nullopt;
  std::vector<int64_t> c(b.rows(), 0);
  for (size_t j = 0; j < b.rows(); ++j) {
    int64_t acc = 0;
    for (size_t i = 0; i < b.rows(); ++i)
      acc = checked_add(acc, checked_mul((*y)[i], u(i, j)));
    c[j] = acc;
  }
  return c;
}

} // namespace capgroup
