#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "abelian.hpp"

namespace capgroup {

/// Capability of a finite abelian group: noncyclic with the top two
/// invariant factors equal. The trivial group is not capable.
bool is_capable(const AbelianGroup &g);

/// All pairs (i, j) in [0,n)^2 whose element has order n in C_n x C_n,
/// i.e. gcd(i, j, n) = 1. Lexicographic order.
std::vector<std::pair<int64_t, int64_t>> x_set(int64_t n);

/// For x of order n in C_n x C_n, a y of order n with <x> ∩ <y> trivial
/// and <x><y> the whole group: with i*i' + j*j' = gcd(i, j), returns
/// (j' mod n, -i' mod n).
std::pair<int64_t, int64_t> complement(std::pair<int64_t, int64_t> x,
                                       int64_t n);

struct CoverMember {
  std::pair<int64_t, int64_t> representative; // lexicographically least generator
  Subgroup subgroup;
};

/// The distinct cyclic subgroups <x> over x in x_set(n), inside C_n x C_n.
/// Their element sets cover the whole group.
std::vector<CoverMember> cyclic_cover(int64_t n);

/// Verdicts and per-member data for a family of subgroups.
struct FamilyReport {
  bool intersection_trivial = false;
  bool generates = false; // join of the family is G
  bool covers = false;    // set union of the family is G
  std::vector<std::vector<int64_t>> quotient_invariant_lists;
  std::vector<int64_t> quotient_exponents;
  std::vector<std::vector<int64_t>> subgroup_invariant_lists;
  bool quotients_same_exponent = false;
  bool quotients_isomorphic = false;
  bool subgroups_isomorphic = false;
  bool verdict_c = false; // intersection_trivial && generates && same exponent
  bool verdict_d = false; // intersection_trivial && covers && both isomorphy checks
};

/// The witness family of a capable group G = C_{n_1} x ... x C_{n_k}:
///   H_i = <a_1, ..., a_{i-1}, a_i + (n_k/n_i) a_k, a_{i+1}, ..., a_{k-1}>
///   H_k = <a_1, ..., a_{k-1}>
///   H_x = <a_1, ..., a_{k-2}, x> for one x per cyclic subgroup covering
///         the top block C_{n_{k-1}} x C_{n_k}
/// deduplicated and sorted lexicographically by canonical basis. Every
/// member is isomorphic to C_{n_1} x ... x C_{n_{k-1}} with quotient
/// C_{n_k}; the family has trivial intersection and covers G.
std::vector<Subgroup> witness_family(const AbelianGroup &g);

/// Checks every family condition; the family must be nonempty and live in g.
FamilyReport verify_family(const AbelianGroup &g,
                           std::span<const Subgroup> family);

/// Existence oracles over all subgroups of g. Families are scanned per
/// type class (quotient exponent for c; subgroup/quotient type pair for d):
/// within a class, enlarging a family only shrinks the intersection and
/// grows the join/union, so it suffices to test the maximal family of each
/// class.
bool exists_family_c(const AbelianGroup &g,
                     int64_t bound = kDefaultEnumerationBound);
bool exists_family_d(const AbelianGroup &g,
                     int64_t bound = kDefaultEnumerationBound);

/// The obstruction subgroup A_p = <(0, ..., 0, n_k/p^t)> of order p^t,
/// where p^t is the highest power of p dividing m = n_k/n_{k-1}. Requires
/// g noncyclic with m > 1 and p a prime dividing m. For every subgroup H:
/// the exponent of G/H divides n_k/p^t iff H contains A_p.
Subgroup critical_subgroup(const AbelianGroup &g, int64_t p);

} // namespace capgroup
