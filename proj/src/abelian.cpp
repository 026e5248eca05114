#include "abelian.hpp"

#include <algorithm>
#include <numeric>

namespace capgroup {

namespace {

int64_t positive_mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_same_group(const AbelianGroup &a, const AbelianGroup &b,
                        const char *what) {
  if (!(a == b))
    fail(errc::parent_mismatch, std::string(what) + ": parent group mismatch");
}

} // namespace

AbelianGroup AbelianGroup::from_orders(std::span<const int64_t> orders) {
  for (int64_t m : orders)
    if (m <= 1)
      fail(errc::invalid_argument,
           "cyclic factor orders must be > 1 (got " + std::to_string(m) + ")");
  auto snf = smith_normal_form(IntMatrix::diagonal(orders));
  std::vector<int64_t> factors;
  for (size_t i = 0; i < orders.size(); ++i)
    if (snf.d(i, i) > 1)
      factors.push_back(snf.d(i, i));
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<int64_t> factors) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] <= 1)
      fail(errc::invalid_argument, "invariant factors must be > 1");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      fail(errc::invalid_argument,
           "invariant factors must form a divisibility chain");
  }
  return AbelianGroup(std::move(factors));
}

int64_t AbelianGroup::order() const {
  int64_t p = 1;
  for (int64_t n : factors_)
    p = checked_mul(p, n);
  return p;
}

GroupElement::GroupElement(AbelianGroup group, std::vector<int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank())
    fail(errc::invalid_argument, "element coordinate count != group rank");
  for (size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = positive_mod(coords_[i], group_.factors()[i]);
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int64_t c) { return c == 0; });
}

GroupElement zero(const AbelianGroup &g) {
  return GroupElement(g, std::vector<int64_t>(g.rank(), 0));
}

GroupElement generator(const AbelianGroup &g, size_t i) {
  if (i >= g.rank())
    fail(errc::invalid_argument, "generator index out of range");
  std::vector<int64_t> c(g.rank(), 0);
  c[i] = 1;
  return GroupElement(g, std::move(c));
}

GroupElement add(const GroupElement &x, const GroupElement &y) {
  require_same_group(x.group(), y.group(), "add");
  std::vector<int64_t> c(x.coords());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(c[i], y.coords()[i]);
  return GroupElement(x.group(), std::move(c));
}

GroupElement neg(const GroupElement &x) {
  std::vector<int64_t> c(x.coords());
  for (auto &v : c)
    v = checked_neg(v);
  return GroupElement(x.group(), std::move(c));
}

GroupElement smul(int64_t c, const GroupElement &x) {
  std::vector<int64_t> v(x.coords());
  for (auto &e : v)
    e = checked_mul(e, c);
  return GroupElement(x.group(), std::move(v));
}

int64_t element_order(const GroupElement &x) {
  int64_t ord = 1;
  for (size_t i = 0; i < x.coords().size(); ++i) {
    int64_t n = x.group().factors()[i];
    int64_t per = n / std::gcd(x.coords()[i], n);
    ord = std::lcm(ord, per);
  }
  return ord;
}

Subgroup Subgroup::from_basis_rows(const AbelianGroup &g,
                                   const IntMatrix &rows) {
  size_t k = g.rank();
  if (rows.cols() != k)
    fail(errc::invalid_argument, "basis rows must have one column per factor");
  IntMatrix stacked(rows.rows() + k, k);
  for (size_t r = 0; r < rows.rows(); ++r)
    for (size_t c = 0; c < k; ++c)
      stacked(r, c) = rows(r, c);
  for (size_t i = 0; i < k; ++i)
    stacked(rows.rows() + i, i) = g.factors()[i];
  IntMatrix h = hermite_normal_form(stacked).h;
  IntMatrix basis(k, k);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c)
      basis(r, c) = h(r, c);
  return Subgroup(g, std::move(basis));
}

Subgroup Subgroup::generated_by(const AbelianGroup &g,
                                std::span<const GroupElement> gens) {
  IntMatrix rows(gens.size(), g.rank());
  for (size_t i = 0; i < gens.size(); ++i) {
    require_same_group(g, gens[i].group(), "generated_by");
    for (size_t c = 0; c < g.rank(); ++c)
      rows(i, c) = gens[i].coords()[c];
  }
  return from_basis_rows(g, rows);
}

Subgroup Subgroup::trivial(const AbelianGroup &g) {
  return from_basis_rows(g, IntMatrix(0, g.rank()));
}

Subgroup Subgroup::whole(const AbelianGroup &g) {
  return Subgroup(g, IntMatrix::identity(g.rank()));
}

int64_t Subgroup::basis_determinant() const {
  int64_t det = 1;
  for (size_t i = 0; i < basis_.rows(); ++i)
    det = checked_mul(det, basis_(i, i));
  return det;
}

int64_t Subgroup::order() const {
  return checked_div(group_.order(), basis_determinant());
}

bool Subgroup::contains(const GroupElement &x) const {
  require_same_group(group_, x.group(), "contains");
  return solve_against_echelon(basis_, x.coords()).has_value();
}

bool Subgroup::contains(const Subgroup &other) const {
  require_same_group(group_, other.group_, "contains");
  for (size_t r = 0; r < other.basis_.rows(); ++r) {
    std::vector<int64_t> row(group_.rank());
    for (size_t c = 0; c < group_.rank(); ++c)
      row[c] = other.basis_(r, c);
    if (!solve_against_echelon(basis_, row))
      return false;
  }
  return true;
}

std::vector<GroupElement> Subgroup::elements() const {
  size_t k = group_.rank();
  // Coefficient c_i of basis row i ranges over [0, n_i / d_i); each choice
  // lands in a distinct coset of L, so this walks every member once.
  std::vector<int64_t> radix(k);
  for (size_t i = 0; i < k; ++i)
    radix[i] = group_.factors()[i] / basis_(i, i);
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(order()));
  std::vector<int64_t> c(k, 0);
  for (;;) {
    std::vector<int64_t> coords(k, 0);
    for (size_t i = 0; i < k; ++i) {
      if (c[i] == 0)
        continue;
      for (size_t j = 0; j < k; ++j)
        coords[j] = checked_add(coords[j], checked_mul(c[i], basis_(i, j)));
    }
    out.emplace_back(group_, std::move(coords));
    size_t i = 0;
    while (i < k && ++c[i] == radix[i])
      c[i++] = 0;
    if (i == k)
      break;
  }
  return out;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> gens;
  for (size_t r = 0; r < basis_.rows(); ++r) {
    std::vector<int64_t> row(group_.rank());
    for (size_t c = 0; c < group_.rank(); ++c)
      row[c] = basis_(r, c);
    GroupElement e(group_, std::move(row));
    if (!e.is_zero())
      gens.push_back(std::move(e));
  }
  return gens;
}

Subgroup join(const Subgroup &a, const Subgroup &b) {
  require_same_group(a.group(), b.group(), "join");
  size_t k = a.group().rank();
  IntMatrix rows(2 * k, k);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) {
      rows(r, c) = a.basis()(r, c);
      rows(k + r, c) = b.basis()(r, c);
    }
  return Subgroup::from_basis_rows(a.group(), rows);
}

Subgroup intersect(const Subgroup &a, const Subgroup &b) {
  require_same_group(a.group(), b.group(), "intersect");
  // Element filtering of the smaller subgroup; group orders are desk scale.
  const Subgroup &small = a.order() <= b.order() ? a : b;
  const Subgroup &large = a.order() <= b.order() ? b : a;
  std::vector<GroupElement> common;
  for (const GroupElement &x : small.elements())
    if (large.contains(x))
      common.push_back(x);
  return Subgroup::generated_by(a.group(), common);
}

std::vector<int64_t> quotient_invariants(const Subgroup &h) {
  auto snf = smith_normal_form(h.basis());
  std::vector<int64_t> inv;
  for (size_t i = 0; i < h.basis().rows(); ++i)
    if (snf.d(i, i) > 1)
      inv.push_back(snf.d(i, i));
  return inv;
}

int64_t quotient_exponent(const Subgroup &h) {
  auto inv = quotient_invariants(h);
  return inv.empty() ? 1 : inv.back();
}

std::vector<int64_t> subgroup_invariants(const Subgroup &h) {
  // H is the image of the coefficient lattice Z^k under the basis, with
  // kernel lattice C where C * basis = diag(n_1, ..., n_k).
  size_t k = h.group().rank();
  IntMatrix c(k, k);
  for (size_t i = 0; i < k; ++i) {
    std::vector<int64_t> target(k, 0);
    target[i] = h.group().factors()[i];
    auto y = solve_against_echelon(h.basis(), target);
    if (!y)
      fail(errc::invalid_argument, "subgroup basis does not contain L");
    for (size_t j = 0; j < k; ++j)
      c(i, j) = (*y)[j];
  }
  auto snf = smith_normal_form(c);
  std::vector<int64_t> inv;
  for (size_t i = 0; i < k; ++i)
    if (snf.d(i, i) > 1)
      inv.push_back(snf.d(i, i));
  return inv;
}

bool is_isomorphic(std::span<const int64_t> f1, std::span<const int64_t> f2) {
  return std::ranges::equal(f1, f2);
}

namespace {

std::vector<int64_t> sorted_divisors(int64_t n) {
  std::vector<int64_t> divs;
  for (int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d)
        divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Does n_row * e_row lie in the span of rows row..k-1 of the partial upper
// triangular basis? Only those rows matter: any combination using earlier
// rows has a nonzero entry in an earlier column.
bool suffix_contains_lattice_row(const IntMatrix &b,
                                 const std::vector<int64_t> &factors,
                                 size_t row) {
  size_t k = factors.size();
  std::vector<int64_t> residual(k, 0);
  int64_t y = factors[row] / b(row, row); // diagonal divides n_row by choice
  for (size_t j = row; j < k; ++j)
    residual[j] = checked_neg(checked_mul(y, b(row, j)));
  residual[row] = checked_add(residual[row], factors[row]); // = 0
  for (size_t j = row + 1; j < k; ++j) {
    if (residual[j] == 0)
      continue;
    if (checked_rem(residual[j], b(j, j)) != 0)
      return false;
    int64_t q = checked_div(residual[j], b(j, j));
    for (size_t c = j; c < k; ++c)
      residual[c] = checked_sub(residual[c], checked_mul(q, b(j, c)));
  }
  return true;
}

void enumerate_rows(const AbelianGroup &g,
                    const std::vector<std::vector<int64_t>> &divisors,
                    IntMatrix &b, size_t row_plus_one,
                    std::vector<Subgroup> &out) {
  if (row_plus_one == 0) {
    out.push_back(Subgroup::from_basis_rows(g, b));
    return;
  }
  size_t row = row_plus_one - 1;
  size_t k = g.rank();
  for (int64_t d : divisors[row]) {
    b(row, row) = d;
    // Entries right of the pivot are reduced modulo the pivot below them.
    std::vector<int64_t> entry(k, 0);
    for (;;) {
      for (size_t j = row + 1; j < k; ++j)
        b(row, j) = entry[j];
      if (suffix_contains_lattice_row(b, g.factors(), row))
        enumerate_rows(g, divisors, b, row, out);
      size_t j = row + 1;
      while (j < k && ++entry[j] == b(j, j))
        entry[j++] = 0;
      if (j == k)
        break;
    }
  }
  for (size_t j = row; j < k; ++j)
    b(row, j) = 0;
}

} // namespace

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup &g,
                                          int64_t bound) {
  if (bound <= 0)
    fail(errc::invalid_argument, "enumeration bound must be positive");
  if (g.order() > bound)
    fail(errc::bound_exceeded,
         "group order " + std::to_string(g.order()) +
             " exceeds enumeration bound " + std::to_string(bound));
  size_t k = g.rank();
  if (k == 0)
    return {Subgroup::trivial(g)};
  std::vector<std::vector<int64_t>> divisors(k);
  for (size_t i = 0; i < k; ++i)
    divisors[i] = sorted_divisors(g.factors()[i]);
  IntMatrix b(k, k);
  std::vector<Subgroup> out;
  enumerate_rows(g, divisors, b, k, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All partitions of e as weakly decreasing part lists.
void partitions_into(int64_t e, int64_t max_part, std::vector<int64_t> &cur,
                     std::vector<std::vector<int64_t>> &out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int64_t p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(e - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::pair<int64_t, int64_t>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int64_t>> fac;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int64_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  if (n > 1)
    fac.emplace_back(n, 1);
  return fac;
}

int64_t ipow(int64_t base, int64_t exp) {
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i)
    r = checked_mul(r, base);
  return r;
}

} // namespace

std::vector<std::vector<int64_t>> abelian_types(int64_t max_order) {
  if (max_order < 1)
    fail(errc::invalid_argument, "max_order must be >= 1");
  std::vector<std::vector<int64_t>> out;
  out.push_back({}); // trivial group
  for (int64_t n = 2; n <= max_order; ++n) {
    auto fac = factorize(n);
    std::vector<std::vector<std::vector<int64_t>>> per_prime;
    for (auto [p, e] : fac) {
      std::vector<std::vector<int64_t>> parts;
      std::vector<int64_t> cur;
      partitions_into(e, e, cur, parts);
      per_prime.push_back(std::move(parts));
    }
    // Cartesian product of per-prime partitions; align largest parts to
    // build each invariant factor.
    std::vector<size_t> idx(per_prime.size(), 0);
    std::vector<std::vector<int64_t>> of_this_order;
    for (;;) {
      size_t klen = 0;
      for (size_t i = 0; i < per_prime.size(); ++i)
        klen = std::max(klen, per_prime[i][idx[i]].size());
      std::vector<int64_t> factors(klen, 1); // factors[0] = largest
      for (size_t i = 0; i < per_prime.size(); ++i) {
        const auto &parts = per_prime[i][idx[i]];
        for (size_t j = 0; j < parts.size(); ++j)
          factors[j] = checked_mul(factors[j], ipow(fac[i].first, parts[j]));
      }
      std::reverse(factors.begin(), factors.end());
      of_this_order.push_back(std::move(factors));
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == per_prime[i].size())
        idx[i++] = 0;
      if (i == idx.size())
        break;
    }
    std::sort(of_this_order.begin(), of_this_order.end());
    for (auto &t : of_this_order)
      out.push_back(std::move(t));
  }
  return out;
}

int64_t element_index(const GroupElement &x) {
  int64_t idx = 0;
  for (size_t i = 0; i < x.coords().size(); ++i) {
    idx = checked_mul(idx, x.group().factors()[i]);
    idx = checked_add(idx, x.coords()[i]);
  }
  return idx;
}

} // namespace capgroup
