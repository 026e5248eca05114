#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "intlinalg.hpp"

namespace capgroup {

/// Finite abelian group in invariant factor form: C_{n_1} x ... x C_{n_k}
/// with 1 < n_1 | n_2 | ... | n_k. The empty factor list is the trivial
/// group. Immutable value type.
class AbelianGroup {
public:
  AbelianGroup() = default; // trivial group

  /// Normalizes C_{m_1} x ... x C_{m_r} for arbitrary orders > 1 into
  /// invariant factor form (Smith form of the diagonal order matrix).
  static AbelianGroup from_orders(std::span<const int64_t> orders);

  /// Wraps an already valid divisibility chain; rejects anything else.
  static AbelianGroup from_invariant_factors(std::vector<int64_t> factors);

  const std::vector<int64_t> &factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  int64_t order() const;
  int64_t exponent() const {
    return factors_.empty() ? 1 : factors_.back();
  }

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;

private:
  explicit AbelianGroup(std::vector<int64_t> factors)
      : factors_(std::move(factors)) {}

  std::vector<int64_t> factors_;
};

/// Element of an AbelianGroup: residue vector with coordinate i reduced
/// into [0, n_i). Immutable.
class GroupElement {
public:
  GroupElement(AbelianGroup group, std::vector<int64_t> coords);

  const AbelianGroup &group() const { return group_; }
  const std::vector<int64_t> &coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const GroupElement &, const GroupElement &) = default;

private:
  AbelianGroup group_;
  std::vector<int64_t> coords_;
};

GroupElement zero(const AbelianGroup &g);
// The canonical generator a_i (standard basis vector), 0-based.
GroupElement generator(const AbelianGroup &g, size_t i);
GroupElement add(const GroupElement &x, const GroupElement &y);
GroupElement neg(const GroupElement &x);
GroupElement smul(int64_t c, const GroupElement &x);

/// Order of an element: lcm over i of n_i / gcd(m_i, n_i).
int64_t element_order(const GroupElement &x);

/// Subgroup of an AbelianGroup, represented by the canonical Hermite basis
/// of the intermediate lattice M with L <= M <= Z^k, where L is spanned by
/// the rows n_i * e_i. Two subgroups are equal iff their bases are
/// entry-wise equal. Immutable.
class Subgroup {
public:
  static Subgroup generated_by(const AbelianGroup &g,
                               std::span<const GroupElement> gens);
  static Subgroup trivial(const AbelianGroup &g);
  static Subgroup whole(const AbelianGroup &g);
  /// Canonicalizes the lattice spanned by the given rows together with L.
  static Subgroup from_basis_rows(const AbelianGroup &g, const IntMatrix &rows);

  const AbelianGroup &group() const { return group_; }
  const IntMatrix &basis() const { return basis_; }

  int64_t basis_determinant() const; // product of the diagonal, > 0
  int64_t order() const;             // |G| / det(basis)

  bool contains(const GroupElement &x) const;
  bool contains(const Subgroup &other) const;

  /// All member elements (exactly order() of them), in a deterministic
  /// coefficient-vector order.
  std::vector<GroupElement> elements() const;

  /// Nonzero rows of the canonical basis reduced mod n_i; generate the
  /// subgroup. Empty for the trivial subgroup.
  std::vector<GroupElement> generators() const;

  friend bool operator==(const Subgroup &, const Subgroup &) = default;

  // Lexicographic on flattened canonical basis; groups must match.
  friend bool operator<(const Subgroup &a, const Subgroup &b) {
    return a.basis_.entries() < b.basis_.entries();
  }

private:
  friend std::vector<Subgroup> enumerate_subgroups(const AbelianGroup &,
                                                   int64_t);
  Subgroup(AbelianGroup g, IntMatrix basis)
      : group_(std::move(g)), basis_(std::move(basis)) {}

  AbelianGroup group_;
  IntMatrix basis_;
};

Subgroup join(const Subgroup &a, const Subgroup &b);
Subgroup intersect(const Subgroup &a, const Subgroup &b);

/// Invariant factors of G/H: nontrivial Smith diagonal of H's basis.
std::vector<int64_t> quotient_invariants(const Subgroup &h);
/// Exponent of G/H (1 for the trivial quotient).
int64_t quotient_exponent(const Subgroup &h);
/// Invariant factors of H itself.
std::vector<int64_t> subgroup_invariants(const Subgroup &h);

/// Isomorphy of invariant factor lists is plain equality.
bool is_isomorphic(std::span<const int64_t> f1, std::span<const int64_t> f2);

inline constexpr int64_t kDefaultEnumerationBound = 4096;

/// The complete subgroup list of G, sorted lexicographically by canonical
/// basis. Enumerates canonical Hermite matrices row by row from the bottom,
/// pruning prefixes whose row span already fails to contain the lattice L.
/// Rejects groups with order above bound.
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup &g,
                                          int64_t bound = kDefaultEnumerationBound);

/// One invariant factor list per abelian isomorphism type of order
/// <= max_order, the trivial type first, then ordered by (order, list).
std::vector<std::vector<int64_t>> abelian_types(int64_t max_order);

/// Flat index of an element in the mixed-radix numbering of G.
int64_t element_index(const GroupElement &x);

} // namespace capgroup
