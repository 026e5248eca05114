#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared-library surface the way an external client would:
// through capgroup.h only.

#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "capgroup.h"

namespace {

struct Group {
  capg_group *ptr = nullptr;
  explicit Group(std::vector<int64_t> orders) {
    REQUIRE(capg_group_new(orders.data(), orders.size(), &ptr) == CAPG_OK);
  }
  ~Group() { capg_group_free(ptr); }
  Group(const Group &) = delete;
  Group &operator=(const Group &) = delete;
};

std::vector<int64_t> factors_of(const capg_group *g) {
  std::vector<int64_t> f(capg_group_rank(g));
  REQUIRE(capg_group_factors(g, f.data(), f.size()) == CAPG_OK);
  return f;
}

} // namespace

TEST_CASE("group construction normalizes invariant factors") {
  Group g({4, 6});
  CHECK(capg_group_rank(g.ptr) == 2);
  CHECK(factors_of(g.ptr) == std::vector<int64_t>{2, 12});
  int64_t order = 0, exponent = 0;
  CHECK(capg_group_order(g.ptr, &order) == CAPG_OK);
  CHECK(capg_group_exponent(g.ptr, &exponent) == CAPG_OK);
  CHECK(order == 24);
  CHECK(exponent == 12);
  CHECK(capg_group_is_capable(g.ptr) == 0);
}

TEST_CASE("group construction rejects invalid orders") {
  capg_group *g = nullptr;
  int64_t bad[] = {2, 1};
  CHECK(capg_group_new(bad, 2, &g) == CAPG_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(std::strlen(capg_last_error()) > 0);
}

TEST_CASE("trivial group") {
  capg_group *g = nullptr;
  REQUIRE(capg_group_new(nullptr, 0, &g) == CAPG_OK);
  CHECK(capg_group_rank(g) == 0);
  int64_t order = 0;
  CHECK(capg_group_order(g, &order) == CAPG_OK);
  CHECK(order == 1);
  CHECK(capg_group_is_capable(g) == 0);
  capg_group_free(g);
}

TEST_CASE("capability flag") {
  Group yes({2, 2});
  Group no({2, 4});
  Group cyc({7});
  CHECK(capg_group_is_capable(yes.ptr) == 1);
  CHECK(capg_group_is_capable(no.ptr) == 0);
  CHECK(capg_group_is_capable(cyc.ptr) == 0);
}

TEST_CASE("witness family construction and verification") {
  Group g({2, 2});
  capg_family *fam = nullptr;
  REQUIRE(capg_witness_family(g.ptr, &fam) == CAPG_OK);
  CHECK(capg_family_size(fam) == 3);

  std::set<std::vector<int64_t>> gens;
  for (size_t m = 0; m < 3; ++m) {
    size_t count = 0;
    REQUIRE(capg_family_generator_count(fam, m, &count) == CAPG_OK);
    REQUIRE(count == 1);
    std::vector<int64_t> buf(2);
    REQUIRE(capg_family_generators(fam, m, buf.data(), buf.size()) == CAPG_OK);
    gens.insert(buf);
    int64_t order = 0;
    REQUIRE(capg_family_member_order(fam, m, &order) == CAPG_OK);
    CHECK(order == 2);
  }
  CHECK(gens == std::set<std::vector<int64_t>>{{1, 0}, {0, 1}, {1, 1}});

  capg_report report{};
  REQUIRE(capg_verify_family(g.ptr, fam, &report) == CAPG_OK);
  CHECK(report.intersection_trivial == 1);
  CHECK(report.generates == 1);
  CHECK(report.covers == 1);
  CHECK(report.quotients_same_exponent == 1);
  CHECK(report.quotients_isomorphic == 1);
  CHECK(report.subgroups_isomorphic == 1);
  CHECK(report.verdict_c == 1);
  CHECK(report.verdict_d == 1);
  capg_family_free(fam);
}

TEST_CASE("witness family refuses non-capable groups") {
  Group g({2, 4});
  capg_family *fam = nullptr;
  CHECK(capg_witness_family(g.ptr, &fam) == CAPG_ERR_NOT_CAPABLE);
  CHECK(fam == nullptr);
}

TEST_CASE("families built from generators") {
  Group g({2, 2});
  capg_family *fam = nullptr;
  REQUIRE(capg_family_new(g.ptr, &fam) == CAPG_OK);
  // the whole group from its two standard generators
  int64_t whole[] = {1, 0, 0, 1};
  REQUIRE(capg_family_add_subgroup(fam, whole, 2) == CAPG_OK);
  capg_report report{};
  REQUIRE(capg_verify_family(g.ptr, fam, &report) == CAPG_OK);
  CHECK(report.intersection_trivial == 0);
  CHECK(report.generates == 1);
  CHECK(report.covers == 1);
  CHECK(report.verdict_c == 0);
  CHECK(report.verdict_d == 0);

  // trivial subgroup via zero generators
  REQUIRE(capg_family_add_subgroup(fam, nullptr, 0) == CAPG_OK);
  CHECK(capg_family_size(fam) == 2);
  int64_t order = 0;
  REQUIRE(capg_family_member_order(fam, 1, &order) == CAPG_OK);
  CHECK(order == 1);
  size_t count = 99;
  REQUIRE(capg_family_generator_count(fam, 1, &count) == CAPG_OK);
  CHECK(count == 0);
  capg_family_free(fam);
}

TEST_CASE("verify rejects families over a different group") {
  Group g({2, 2});
  Group other({2, 4});
  capg_family *fam = nullptr;
  REQUIRE(capg_family_new(other.ptr, &fam) == CAPG_OK);
  int64_t gen[] = {0, 1};
  REQUIRE(capg_family_add_subgroup(fam, gen, 1) == CAPG_OK);
  capg_report report{};
  CHECK(capg_verify_family(g.ptr, fam, &report) == CAPG_ERR_PARENT_MISMATCH);
  capg_family_free(fam);
}

TEST_CASE("verify rejects empty families") {
  Group g({2, 2});
  capg_family *fam = nullptr;
  REQUIRE(capg_family_new(g.ptr, &fam) == CAPG_OK);
  capg_report report{};
  CHECK(capg_verify_family(g.ptr, fam, &report) == CAPG_ERR_INVALID_ARGUMENT);
  capg_family_free(fam);
}

TEST_CASE("subgroup enumeration and member data") {
  Group g({2, 2});
  capg_family *fam = nullptr;
  REQUIRE(capg_enumerate_subgroups(g.ptr, 0, &fam) == CAPG_OK);
  CHECK(capg_family_size(fam) == 5);
  // member data: basis, invariants, quotient data
  for (size_t m = 0; m < capg_family_size(fam); ++m) {
    int64_t basis[4];
    REQUIRE(capg_family_member_basis(fam, m, basis, 4) == CAPG_OK);
    CHECK(basis[2] == 0); // upper triangular
    CHECK(basis[0] > 0);
    CHECK(basis[3] > 0);
    int64_t buf[2];
    size_t w = 0;
    REQUIRE(capg_family_member_invariants(fam, m, buf, 2, &w) == CAPG_OK);
    int64_t sub_order = 1;
    for (size_t i = 0; i < w; ++i)
      sub_order *= buf[i];
    int64_t order = 0;
    REQUIRE(capg_family_member_order(fam, m, &order) == CAPG_OK);
    CHECK(sub_order == order);
    REQUIRE(capg_family_quotient_invariants(fam, m, buf, 2, &w) == CAPG_OK);
    int64_t quot_order = 1;
    for (size_t i = 0; i < w; ++i)
      quot_order *= buf[i];
    CHECK(order * quot_order == 4);
    int64_t e = 0;
    REQUIRE(capg_family_quotient_exponent(fam, m, &e) == CAPG_OK);
    CHECK((w == 0 ? e == 1 : e == buf[w - 1]));
  }
  capg_family_free(fam);
}

TEST_CASE("enumeration respects the bound") {
  Group g({2, 4});
  capg_family *fam = nullptr;
  CHECK(capg_enumerate_subgroups(g.ptr, 4, &fam) == CAPG_ERR_BOUND_EXCEEDED);
  CHECK(fam == nullptr);
}

TEST_CASE("existence oracles") {
  Group capable({2, 2});
  Group cyclic({4});
  Group lopsided({2, 4});
  int c = -1, d = -1;
  REQUIRE(capg_exists_family_c(capable.ptr, 0, &c) == CAPG_OK);
  REQUIRE(capg_exists_family_d(capable.ptr, 0, &d) == CAPG_OK);
  CHECK(c == 1);
  CHECK(d == 1);
  REQUIRE(capg_exists_family_c(cyclic.ptr, 0, &c) == CAPG_OK);
  REQUIRE(capg_exists_family_d(cyclic.ptr, 0, &d) == CAPG_OK);
  CHECK(c == 0);
  CHECK(d == 0);
  REQUIRE(capg_exists_family_c(lopsided.ptr, 0, &c) == CAPG_OK);
  REQUIRE(capg_exists_family_d(lopsided.ptr, 0, &d) == CAPG_OK);
  CHECK(c == 0);
  CHECK(d == 0);
}

TEST_CASE("type list enumeration") {
  capg_type_list *types = nullptr;
  REQUIRE(capg_abelian_types(8, &types) == CAPG_OK);
  CHECK(capg_type_list_size(types) == 11);
  CHECK(capg_type_list_rank(types, 0) == 0); // trivial type first
  bool saw_2_4 = false;
  for (size_t i = 0; i < capg_type_list_size(types); ++i) {
    std::vector<int64_t> f(capg_type_list_rank(types, i));
    REQUIRE(capg_type_list_factors(types, i, f.data(), f.size()) == CAPG_OK);
    if (f == std::vector<int64_t>{2, 4})
      saw_2_4 = true;
  }
  CHECK(saw_2_4);
  capg_type_list_free(types);
}

TEST_CASE("buffer and argument errors") {
  Group g({2, 4});
  int64_t buf[1];
  CHECK(capg_group_factors(g.ptr, buf, 1) == CAPG_ERR_BUFFER_TOO_SMALL);
  CHECK(capg_group_new(nullptr, 2, nullptr) == CAPG_ERR_INVALID_ARGUMENT);
  capg_family *fam = nullptr;
  REQUIRE(capg_enumerate_subgroups(g.ptr, 0, &fam) == CAPG_OK);
  size_t n = 0;
  CHECK(capg_family_generator_count(fam, 999, &n) ==
        CAPG_ERR_INVALID_ARGUMENT);
  capg_family_free(fam);
}

TEST_CASE("status names are stable strings") {
  CHECK(std::string(capg_status_name(CAPG_OK)) == "CAPG_OK");
  CHECK(std::string(capg_status_name(CAPG_ERR_NOT_CAPABLE)) ==
        "CAPG_ERR_NOT_CAPABLE");
  CHECK(std::string(capg_status_name(CAPG_ERR_OVERFLOW)) ==
        "CAPG_ERR_OVERFLOW");
}

TEST_CASE("overflow is reported through the C boundary") {
  capg_group *g = nullptr;
  std::vector<int64_t> huge(3, INT64_MAX / 2);
  REQUIRE(capg_group_new(huge.data(), huge.size(), &g) == CAPG_OK);
  int64_t order = 0;
  CHECK(capg_group_order(g, &order) == CAPG_ERR_OVERFLOW);
  capg_group_free(g);
}
