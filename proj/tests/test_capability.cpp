#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "capability.hpp"
#include "oracles.hpp"

using namespace capgroup;

namespace {

AbelianGroup group(std::vector<int64_t> factors) {
  return AbelianGroup::from_invariant_factors(std::move(factors));
}

oracle::ElemSet element_set(const Subgroup &h) {
  oracle::ElemSet s;
  for (const auto &x : h.elements())
    s.insert(x.coords());
  return s;
}

} // namespace

TEST_CASE("is_capable: noncyclic with equal top factors") {
  CHECK(is_capable(group({2, 2})));
  CHECK(is_capable(group({2, 6, 6})));
  CHECK(is_capable(group({3, 3})));
  CHECK(!is_capable(group({6})));
  CHECK(!is_capable(group({2, 4})));
  CHECK(!is_capable(group({})));
  CHECK(!is_capable(group({2})));
}

TEST_CASE("x_set for n = 2") {
  auto x = x_set(2);
  std::set<std::pair<int64_t, int64_t>> got(x.begin(), x.end());
  CHECK(got == std::set<std::pair<int64_t, int64_t>>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("x_set membership rules") {
  for (int64_t n : {2, 3, 4, 6, 9, 12}) {
    auto x = x_set(n);
    std::set<std::pair<int64_t, int64_t>> got(x.begin(), x.end());
    CHECK(got.count({1, 0}) == 1);
    // brute force: exactly the elements of order n in C_n x C_n
    std::vector<int64_t> nn{n, n};
    for (int64_t i = 0; i < n; ++i)
      for (int64_t j = 0; j < n; ++j) {
        bool want = oracle::element_order_brute({i, j}, nn) == n;
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        REQUIRE(got.count({i, j}) == (want ? 1u : 0u));
      }
  }
  auto x6 = x_set(6);
  std::set<std::pair<int64_t, int64_t>> got6(x6.begin(), x6.end());
  CHECK(got6.count({2, 4}) == 0); // gcd(2, 4, 6) = 2
  CHECK(got6.count({2, 3}) == 1);
}

TEST_CASE("x_set rejects n <= 1") {
  CHECK_THROWS_AS(x_set(1), Error);
}

namespace {

// |<x>| = |<y>| = n, <x> ∩ <y> = 1, |<x><y>| = n^2.
void check_direct_product(std::pair<int64_t, int64_t> x,
                          std::pair<int64_t, int64_t> y, int64_t n) {
  auto square = group({n, n});
  GroupElement ex(square, {x.first, x.second});
  GroupElement ey(square, {y.first, y.second});
  REQUIRE(element_order(ex) == n);
  REQUIRE(element_order(ey) == n);
  auto hx = Subgroup::generated_by(square, std::span(&ex, 1));
  auto hy = Subgroup::generated_by(square, std::span(&ey, 1));
  REQUIRE(intersect(hx, hy) == Subgroup::trivial(square));
  REQUIRE(join(hx, hy) == Subgroup::whole(square));
  // product set is the whole group, not merely the join
  oracle::ElemSet prod;
  for (const auto &a : hx.elements())
    for (const auto &b : hy.elements())
      prod.insert(add(a, b).coords());
  REQUIRE(std::cmp_equal(prod.size(), n * n));
}

} // namespace

TEST_CASE("complement closed forms") {
  for (int64_t n : {2, 3, 5, 8}) {
    auto y = complement({1, 0}, n);
    CHECK(y == std::pair<int64_t, int64_t>{0, n - 1});
  }
}

TEST_CASE("complement yields an internal direct product") {
  check_direct_product({1, 1}, complement({1, 1}, 2), 2);
  check_direct_product({2, 3}, complement({2, 3}, 6), 6);
  for (int64_t n : {2, 3, 4, 6, 10}) {
    for (auto x : x_set(n))
      check_direct_product(x, complement(x, n), n);
  }
}

TEST_CASE("complement rejects elements outside x_set") {
  CHECK_THROWS_AS(complement({2, 4}, 6), Error);
  CHECK_THROWS_AS(complement({0, 0}, 4), Error);
  CHECK_THROWS_AS(complement({-1, 0}, 4), Error);
}

TEST_CASE("cyclic_cover small cases") {
  auto c2 = cyclic_cover(2);
  CHECK(c2.size() == 3);
  auto c3 = cyclic_cover(3);
  CHECK(c3.size() == 4);
  oracle::ElemSet all3;
  for (const auto &m : c3)
    for (const auto &x : m.subgroup.elements())
      all3.insert(x.coords());
  CHECK(all3.size() == 9);
}

TEST_CASE("cyclic_cover covers C_n x C_n and members are distinct order-n") {
  for (int64_t n : {2, 3, 4, 5, 6, 8, 12}) {
    auto cover = cyclic_cover(n);
    CAPTURE(n);
    std::set<std::vector<int64_t>> bases;
    oracle::ElemSet covered;
    for (const auto &m : cover) {
      REQUIRE(m.subgroup.order() == n);
      REQUIRE(bases.insert(m.subgroup.basis().entries()).second);
      for (const auto &x : m.subgroup.elements())
        covered.insert(x.coords());
      // representative is a generator and lexicographically least in x_set
      REQUIRE(std::gcd(std::gcd(m.representative.first, m.representative.second), n) == 1);
    }
    REQUIRE(std::cmp_equal(covered.size(), n * n));
  }
}

TEST_CASE("cyclic_cover of a prime partitions the generators") {
  for (int64_t p : {2, 3, 5, 7}) {
    auto cover = cyclic_cover(p);
    // p + 1 subgroups; phi(p) * (p + 1) = (p - 1)(p + 1) generators
    CHECK(std::cmp_equal(cover.size(), p + 1));
    CHECK(std::cmp_equal(x_set(p).size(), (p - 1) * (p + 1)));
    // each x in x_set lies in exactly one cover member
    for (auto [i, j] : x_set(p)) {
      auto square = group({p, p});
      GroupElement x(square, {i, j});
      int hits = 0;
      for (const auto &m : cover)
        if (m.subgroup.contains(x))
          ++hits;
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("witness_family of the Klein group") {
  auto klein = group({2, 2});
  auto family = witness_family(klein);
  REQUIRE(family.size() == 3);
  std::set<oracle::ElemSet> got;
  for (const auto &h : family) {
    CHECK(h.order() == 2);
    got.insert(element_set(h));
  }
  std::set<oracle::ElemSet> want{
      {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 1}}};
  CHECK(got == want);
}

TEST_CASE("witness_family refuses non-capable groups") {
  CHECK_THROWS_AS(witness_family(group({2, 4})), Error);
  try {
    witness_family(group({2, 4}));
  } catch (const Error &e) {
    CHECK(e.code() == errc::not_capable);
  }
  CHECK_THROWS_AS(witness_family(group({6})), Error);
  CHECK_THROWS_AS(witness_family(group({})), Error);
}

TEST_CASE("witness_family member types for C_2^3") {
  auto g = group({2, 2, 2});
  auto family = witness_family(g);
  for (const auto &h : family) {
    CHECK(subgroup_invariants(h) == std::vector<int64_t>{2, 2});
    CHECK(quotient_invariants(h) == std::vector<int64_t>{2});
  }
  auto report = verify_family(g, family);
  CHECK(report.verdict_c);
  CHECK(report.verdict_d);
}

TEST_CASE("witness_family is deterministic and sorted by canonical basis") {
  auto g = group({2, 4, 4});
  auto f1 = witness_family(g);
  auto f2 = witness_family(g);
  CHECK(f1 == f2);
  CHECK(std::is_sorted(f1.begin(), f1.end()));
}

TEST_CASE("verify_family degenerate families") {
  auto klein = group({2, 2});
  std::vector<Subgroup> whole{Subgroup::whole(klein)};
  auto r = verify_family(klein, whole);
  CHECK(!r.intersection_trivial);
  CHECK(r.generates);
  CHECK(r.covers);
  CHECK(!r.verdict_c);
  CHECK(!r.verdict_d);

  std::vector<Subgroup> trivial{Subgroup::trivial(klein)};
  r = verify_family(klein, trivial);
  CHECK(r.intersection_trivial);
  CHECK(!r.generates);
  CHECK(!r.covers);
  CHECK(!r.verdict_c);
  CHECK(!r.verdict_d);
}

TEST_CASE("verify_family of a witness family is fully green") {
  auto klein = group({2, 2});
  auto r = verify_family(klein, witness_family(klein));
  CHECK(r.intersection_trivial);
  CHECK(r.generates);
  CHECK(r.covers);
  CHECK(r.quotients_same_exponent);
  CHECK(r.quotients_isomorphic);
  CHECK(r.subgroups_isomorphic);
  CHECK(r.verdict_c);
  CHECK(r.verdict_d);
}

TEST_CASE("verify_family rejects empty families and foreign members") {
  auto klein = group({2, 2});
  CHECK_THROWS_AS(verify_family(klein, {}), Error);
  std::vector<Subgroup> foreign{Subgroup::whole(group({2, 4}))};
  CHECK_THROWS_AS(verify_family(klein, foreign), Error);
}

TEST_CASE("covers implies generates on sampled families") {
  std::mt19937_64 rng(7);
  for (auto factors : {std::vector<int64_t>{2, 4}, {2, 2, 2}, {3, 3}, {12}}) {
    auto g = group(factors);
    auto subs = enumerate_subgroups(g);
    std::uniform_int_distribution<size_t> pick(0, subs.size() - 1);
    std::uniform_int_distribution<size_t> len(1, 4);
    for (int iter = 0; iter < 40; ++iter) {
      std::vector<Subgroup> family;
      size_t m = len(rng);
      for (size_t i = 0; i < m; ++i)
        family.push_back(subs[pick(rng)]);
      auto r = verify_family(g, family);
      CAPTURE(factors);
      REQUIRE((!r.covers || r.generates));
      REQUIRE(r.verdict_c == (r.intersection_trivial && r.generates &&
                              r.quotients_same_exponent));
      REQUIRE(r.verdict_d == (r.intersection_trivial && r.covers &&
                              r.quotients_isomorphic && r.subgroups_isomorphic));
    }
  }
}

TEST_CASE("existence oracles on small groups") {
  CHECK(exists_family_c(group({2, 2})));
  CHECK(exists_family_d(group({2, 2})));
  CHECK(!exists_family_c(group({4})));
  CHECK(!exists_family_d(group({4})));
  CHECK(!exists_family_c(group({2, 4})));
  CHECK(!exists_family_d(group({2, 4})));
  CHECK(!exists_family_c(group({})));
  CHECK(!exists_family_d(group({})));
}

TEST_CASE("existence oracles respect the enumeration bound") {
  CHECK_THROWS_AS(exists_family_c(group({2, 4}), 4), Error);
  CHECK_THROWS_AS(exists_family_d(group({2, 4}), 4), Error);
}

TEST_CASE("critical_subgroup examples") {
  auto a2 = critical_subgroup(group({2, 4}), 2);
  CHECK(a2.order() == 2);
  CHECK(a2.contains(GroupElement(group({2, 4}), {0, 2})));

  auto a2big = critical_subgroup(group({2, 8}), 2);
  CHECK(a2big.order() == 4);
  CHECK(a2big.contains(GroupElement(group({2, 8}), {0, 2})));

  auto a3 = critical_subgroup(group({2, 6}), 3);
  CHECK(a3.order() == 3);
  CHECK(a3.contains(GroupElement(group({2, 6}), {0, 2})));
}

TEST_CASE("critical_subgroup characterization over all subgroups") {
  for (auto factors : {std::vector<int64_t>{2, 4}, {2, 8}, {2, 6}, {4, 8},
                       {2, 2, 4}, {3, 9}}) {
    auto g = group(factors);
    int64_t m = g.factors()[g.rank() - 1] / g.factors()[g.rank() - 2];
    REQUIRE(m > 1);
    for (int64_t p = 2; p <= m; ++p) {
      if (m % p != 0)
        continue;
      bool prime = true;
      for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
          prime = false;
      if (!prime)
        continue;
      auto ap = critical_subgroup(g, p);
      int64_t pt = ap.order();
      int64_t threshold = g.factors()[g.rank() - 1] / pt;
      CAPTURE(factors);
      CAPTURE(p);
      for (const auto &h : enumerate_subgroups(g)) {
        bool exp_divides = threshold % quotient_exponent(h) == 0;
        bool contains_ap = h.contains(ap);
        REQUIRE(exp_divides == contains_ap);
      }
    }
  }
}

TEST_CASE("critical_subgroup rejects invalid inputs") {
  CHECK_THROWS_AS(critical_subgroup(group({8}), 2), Error);      // cyclic
  CHECK_THROWS_AS(critical_subgroup(group({2, 2}), 2), Error);   // m = 1
  CHECK_THROWS_AS(critical_subgroup(group({2, 4}), 3), Error);   // p does not divide m
  CHECK_THROWS_AS(critical_subgroup(group({2, 8}), 4), Error);   // not prime
}
