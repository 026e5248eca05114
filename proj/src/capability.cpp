#include "capability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace capgroup {

bool is_capable(const AbelianGroup &g) {
  const auto &f = g.factors();
  return f.size() >= 2 && f[f.size() - 1] == f[f.size() - 2];
}

std::vector<std::pair<int64_t, int64_t>> x_set(int64_t n) {
  if (n <= 1)
    fail(errc::invalid_argument, "x_set requires n > 1");
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j)
      if (std::gcd(std::gcd(i, j), n) == 1)
        out.emplace_back(i, j);
  return out;
}

std::pair<int64_t, int64_t> complement(std::pair<int64_t, int64_t> x,
                                       int64_t n) {
  if (n <= 1)
    fail(errc::invalid_argument, "complement requires n > 1");
  auto [i, j] = x;
  if (i < 0 || i >= n || j < 0 || j >= n || std::gcd(std::gcd(i, j), n) != 1)
    fail(errc::invalid_argument,
         "complement requires an element of order n in C_n x C_n");
  auto [d, ii, jj] = ext_gcd(i, j); // i*ii + j*jj = d, gcd(d, n) = 1
  auto mod = [n](int64_t a) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
  };
  return {mod(jj), mod(checked_neg(ii))};
}

std::vector<CoverMember> cyclic_cover(int64_t n) {
  AbelianGroup square = AbelianGroup::from_invariant_factors({n, n});
  std::vector<CoverMember> cover;
  for (auto [i, j] : x_set(n)) {
    GroupElement x(square, {i, j});
    Subgroup h = Subgroup::generated_by(square, std::span(&x, 1));
    bool seen = false;
    for (const auto &m : cover)
      if (m.subgroup == h) {
        seen = true;
        break;
      }
    if (!seen)
      cover.push_back({{i, j}, std::move(h)});
  }
  return cover;
}

std::vector<Subgroup> witness_family(const AbelianGroup &g) {
  if (!is_capable(g))
    fail(errc::not_capable,
         "witness family requires a noncyclic group whose top two invariant "
         "factors are equal");
  const auto &f = g.factors();
  size_t k = g.rank();
  int64_t n = f[k - 1]; // = f[k - 2]
  std::vector<Subgroup> family;

  // H_i, i = 1..k-1: replace a_i by a_i + (n_k/n_i) a_k, drop a_k.
  for (size_t i = 0; i + 1 < k; ++i) {
    std::vector<GroupElement> gens;
    for (size_t j = 0; j + 1 < k; ++j) {
      if (j == i) {
        GroupElement tw = add(generator(g, i), smul(n / f[i], generator(g, k - 1)));
        gens.push_back(std::move(tw));
      } else {
        gens.push_back(generator(g, j));
      }
    }
    family.push_back(Subgroup::generated_by(g, gens));
  }

  // H_k = <a_1, ..., a_{k-1}>.
  {
    std::vector<GroupElement> gens;
    for (size_t j = 0; j + 1 < k; ++j)
      gens.push_back(generator(g, j));
    family.push_back(Subgroup::generated_by(g, gens));
  }

  // H_x = <a_1, ..., a_{k-2}, x> with x running over one representative per
  // cyclic subgroup covering the top block C_n x C_n.
  for (const auto &member : cyclic_cover(n)) {
    std::vector<GroupElement> gens;
    for (size_t j = 0; j + 2 < k; ++j)
      gens.push_back(generator(g, j));
    std::vector<int64_t> coords(k, 0);
    coords[k - 2] = member.representative.first;
    coords[k - 1] = member.representative.second;
    gens.emplace_back(g, std::move(coords));
    family.push_back(Subgroup::generated_by(g, gens));
  }

  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

FamilyReport verify_family(const AbelianGroup &g,
                           std::span<const Subgroup> family) {
  if (family.empty())
    fail(errc::invalid_argument, "verify_family requires a nonempty family");
  for (const auto &h : family)
    if (!(h.group() == g))
      fail(errc::parent_mismatch, "family member from a different group");

  FamilyReport r;

  Subgroup running_meet = family[0];
  Subgroup running_join = family[0];
  for (size_t i = 1; i < family.size(); ++i) {
    running_meet = intersect(running_meet, family[i]);
    running_join = join(running_join, family[i]);
  }
  r.intersection_trivial = running_meet == Subgroup::trivial(g);
  r.generates = running_join == Subgroup::whole(g);

  std::unordered_set<int64_t> covered;
  for (const auto &h : family)
    for (const auto &x : h.elements())
      covered.insert(element_index(x));
  r.covers = std::cmp_equal(covered.size(), g.order());

  for (const auto &h : family) {
    r.quotient_invariant_lists.push_back(quotient_invariants(h));
    r.quotient_exponents.push_back(quotient_exponent(h));
    r.subgroup_invariant_lists.push_back(subgroup_invariants(h));
  }
  r.quotients_same_exponent =
      std::ranges::all_of(r.quotient_exponents, [&](int64_t e) {
        return e == r.quotient_exponents.front();
      });
  r.quotients_isomorphic =
      std::ranges::all_of(r.quotient_invariant_lists, [&](const auto &l) {
        return l == r.quotient_invariant_lists.front();
      });
  r.subgroups_isomorphic =
      std::ranges::all_of(r.subgroup_invariant_lists, [&](const auto &l) {
        return l == r.subgroup_invariant_lists.front();
      });

  r.verdict_c = r.intersection_trivial && r.generates && r.quotients_same_exponent;
  r.verdict_d = r.intersection_trivial && r.covers && r.quotients_isomorphic &&
                r.subgroups_isomorphic;
  return r;
}

namespace {

bool family_has_trivial_intersection(const AbelianGroup &g,
                                     std::span<const Subgroup *const> family) {
  Subgroup meet = *family[0];
  Subgroup triv = Subgroup::trivial(g);
  for (size_t i = 1; i < family.size(); ++i) {
    if (meet == triv)
      return true;
    meet = intersect(meet, *family[i]);
  }
  return meet == triv;
}

} // namespace

bool exists_family_c(const AbelianGroup &g, int64_t bound) {
  if (g.is_trivial())
    return false; // the conditions concern nontrivial groups
  auto subgroups = enumerate_subgroups(g, bound);
  std::map<int64_t, std::vector<const Subgroup *>> by_exponent;
  for (const auto &h : subgroups)
    by_exponent[quotient_exponent(h)].push_back(&h);
  Subgroup whole = Subgroup::whole(g);
  for (const auto &[e, family] : by_exponent) {
    if (!family_has_trivial_intersection(g, family))
      continue;
    Subgroup jn = *family[0];
    for (size_t i = 1; i < family.size() && !(jn == whole); ++i)
      jn = join(jn, *family[i]);
    if (jn == whole)
      return true;
  }
  return false;
}

bool exists_family_d(const AbelianGroup &g, int64_t bound) {
  if (g.is_trivial())
    return false;
  auto subgroups = enumerate_subgroups(g, bound);
  using TypePair = std::pair<std::vector<int64_t>, std::vector<int64_t>>;
  std::map<TypePair, std::vector<const Subgroup *>> by_types;
  for (const auto &h : subgroups)
    by_types[{subgroup_invariants(h), quotient_invariants(h)}].push_back(&h);
  for (const auto &[types, family] : by_types) {
    if (!family_has_trivial_intersection(g, family))
      continue;
    std::unordered_set<int64_t> covered;
    for (const Subgroup *h : family)
      for (const auto &x : h->elements())
        covered.insert(element_index(x));
    if (std::cmp_equal(covered.size(), g.order()))
      return true;
  }
  return false;
}

namespace {

bool is_prime(int64_t p) {
  if (p < 2)
    return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

Subgroup critical_subgroup(const AbelianGroup &g, int64_t p) {
  const auto &f = g.factors();
  size_t k = g.rank();
  if (k < 2)
    fail(errc::invalid_argument, "critical subgroup requires a noncyclic group");
  int64_t m = f[k - 1] / f[k - 2];
  if (m <= 1)
    fail(errc::invalid_argument,
         "critical subgroup requires distinct top invariant factors");
  if (!is_prime(p) || m % p != 0)
    fail(errc::invalid_argument,
         "critical subgroup requires a prime dividing n_k / n_{k-1}");
  int64_t pt = 1;
  for (int64_t mm = m; mm % p == 0; mm /= p)
    pt = checked_mul(pt, p);
  std::vector<int64_t> coords(k, 0);
  coords[k - 1] = f[k - 1] / pt;
  GroupElement gen(g, std::move(coords));
  return Subgroup::generated_by(g, std::span(&gen, 1));
}

} // namespace capgroup
