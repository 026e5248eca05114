#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"

namespace capgroup {

// Exact int64 arithmetic. Overflow raises errc::overflow instead of wrapping.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow, "integer overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(errc::overflow, "integer overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

inline int64_t checked_div(int64_t a, int64_t b) {
  if (b == 0)
    fail(errc::invalid_argument, "division by zero");
  if (a == INT64_MIN && b == -1)
    fail(errc::overflow, "integer overflow in division");
  return a / b;
}

// Remainder with the same domain restrictions as checked_div.
inline int64_t checked_rem(int64_t a, int64_t b) {
  if (b == 0)
    fail(errc::invalid_argument, "remainder by zero");
  if (b == 1 || b == -1)
    return 0;
  return a % b;
}

// Largest q with q*b <= a, for b > 0.
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = checked_div(a, b);
  if (a % b != 0 && (a < 0) != (b < 0))
    --q;
  return q;
}

/// Dense row-major matrix of exact 64-bit integers. Dimensions are fixed at
/// construction; zero rows/columns are allowed.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  IntMatrix(size_t rows, size_t cols, std::vector<int64_t> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
      fail(errc::invalid_argument, "entry count does not match dimensions");
  }

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const int64_t> d) {
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  int64_t &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  int64_t operator()(size_t r, size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<int64_t> &entries() const { return entries_; }

  void swap_rows(size_t i, size_t j);
  void negate_row(size_t i);
  // row i += factor * row j
  void row_axpy(size_t i, size_t j, int64_t factor);
  void swap_cols(size_t i, size_t j);
  void negate_col(size_t i);
  // col i += factor * col j
  void col_axpy(size_t i, size_t j, int64_t factor);
  // simultaneously rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
  void combine_rows(size_t i, size_t j, int64_t a, int64_t b, int64_t c,
                    int64_t d);
  void combine_cols(size_t i, size_t j, int64_t a, int64_t b, int64_t c,
                    int64_t d);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  size_t rows_, cols_;
  std::vector<int64_t> entries_;
};

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b);

struct XgcdResult {
  int64_t g; // gcd(a, b) >= 0
  int64_t s; // s*a + t*b == g
  int64_t t;
};

/// Extended Euclidean algorithm. ext_gcd(0, 0) = {0, 0, 0}.
XgcdResult ext_gcd(int64_t a, int64_t b);

struct HnfResult {
  IntMatrix h; // canonical row Hermite form of m
  IntMatrix u; // unimodular, u*m == h
};

/// Canonical row Hermite form: row echelon with positive pivots, entries
/// above each pivot reduced into [0, pivot), zero rows at the bottom. The
/// canonical form is the unique such basis of the integer row space, so
/// lattices are equal iff their forms are entry-wise equal.
HnfResult hermite_normal_form(const IntMatrix &m);

struct SnfResult {
  IntMatrix d; // diagonal, d_1 | d_2 | ..., all entries >= 0
  IntMatrix u; // unimodular, u*m*v == d
  IntMatrix v; // unimodular
};

/// Smith normal form by pivoting on a minimal entry and alternating row and
/// column reductions until the pivot divides the trailing block.
SnfResult smith_normal_form(const IntMatrix &m);

/// Solves y*h = v for a matrix h already in row echelon form. Returns one
/// coefficient per row of h (zero for zero rows), or nullopt when v is not
/// in the integer row space.
std::optional<std::vector<int64_t>>
solve_against_echelon(const IntMatrix &h, std::span<const int64_t> v);

/// Integer membership in the row space of an arbitrary matrix: returns c
/// with c*b = v, or nullopt.
std::optional<std::vector<int64_t>>
solve_in_rowspace(const IntMatrix &b, std::span<const int64_t> v);

} // namespace capgroup
