// extern "C" surface over the capgroup core. Exceptions are mapped to
// status codes at the boundary; the message of the last failing call is
// kept per thread for capg_last_error.

#include "capgroup.h"

#include <cstring>
#include <new>
#include <string>

#include "abelian.hpp"
#include "capability.hpp"

using namespace capgroup;

struct capg_group {
  AbelianGroup group;
};

struct capg_family {
  AbelianGroup parent;
  std::vector<Subgroup> members;
};

struct capg_type_list {
  std::vector<std::vector<int64_t>> types;
};

namespace {

thread_local std::string t_last_error;

capg_status set_error(capg_status s, const std::string &msg) {
  t_last_error = msg;
  return s;
}

capg_status from_errc(const Error &e) {
  switch (e.code()) {
  case errc::invalid_argument:
    return CAPG_ERR_INVALID_ARGUMENT;
  case errc::overflow:
    return CAPG_ERR_OVERFLOW;
  case errc::bound_exceeded:
    return CAPG_ERR_BOUND_EXCEEDED;
  case errc::parent_mismatch:
    return CAPG_ERR_PARENT_MISMATCH;
  case errc::not_capable:
    return CAPG_ERR_NOT_CAPABLE;
  }
  return CAPG_ERR_INTERNAL;
}

template <typename Fn> capg_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    return set_error(from_errc(e), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(CAPG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(CAPG_ERR_INTERNAL, e.what());
  }
}

capg_status copy_ints(const std::vector<int64_t> &src, int64_t *out,
                      size_t capacity) {
  if (capacity < src.size())
    return set_error(CAPG_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  if (!src.empty())
    std::memcpy(out, src.data(), src.size() * sizeof(int64_t));
  return CAPG_OK;
}

capg_status check_member(const capg_family *family, size_t member) {
  if (!family)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null family");
  if (member >= family->members.size())
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "member index out of range");
  return CAPG_OK;
}

} // namespace

extern "C" {

const char *capg_status_name(capg_status status) {
  switch (status) {
  case CAPG_OK:
    return "CAPG_OK";
  case CAPG_ERR_INVALID_ARGUMENT:
    return "CAPG_ERR_INVALID_ARGUMENT";
  case CAPG_ERR_NOT_CAPABLE:
    return "CAPG_ERR_NOT_CAPABLE";
  case CAPG_ERR_OVERFLOW:
    return "CAPG_ERR_OVERFLOW";
  case CAPG_ERR_BOUND_EXCEEDED:
    return "CAPG_ERR_BOUND_EXCEEDED";
  case CAPG_ERR_PARENT_MISMATCH:
    return "CAPG_ERR_PARENT_MISMATCH";
  case CAPG_ERR_BUFFER_TOO_SMALL:
    return "CAPG_ERR_BUFFER_TOO_SMALL";
  case CAPG_ERR_INTERNAL:
    return "CAPG_ERR_INTERNAL";
  }
  return "CAPG_ERR_UNKNOWN";
}

const char *capg_last_error(void) { return t_last_error.c_str(); }

capg_status capg_group_new(const int64_t *orders, size_t count,
                           capg_group **out) {
  if (!out || (count > 0 && !orders))
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto g = AbelianGroup::from_orders({orders, count});
    *out = new capg_group{std::move(g)};
    return CAPG_OK;
  });
}

void capg_group_free(capg_group *group) { delete group; }

size_t capg_group_rank(const capg_group *group) {
  return group ? group->group.rank() : 0;
}

capg_status capg_group_factors(const capg_group *group, int64_t *out,
                               size_t capacity) {
  if (!group || (!out && capacity > 0))
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_ints(group->group.factors(), out, capacity); });
}

capg_status capg_group_order(const capg_group *group, int64_t *out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = group->group.order();
    return CAPG_OK;
  });
}

capg_status capg_group_exponent(const capg_group *group, int64_t *out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  *out = group->group.exponent();
  return CAPG_OK;
}

int capg_group_is_capable(const capg_group *group) {
  return group && is_capable(group->group) ? 1 : 0;
}

capg_status capg_family_new(const capg_group *group, capg_family **out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new capg_family{group->group, {}};
    return CAPG_OK;
  });
}

void capg_family_free(capg_family *family) { delete family; }

capg_status capg_family_add_subgroup(capg_family *family,
                                     const int64_t *generators,
                                     size_t gen_count) {
  if (!family || (gen_count > 0 && !generators))
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    size_t k = family->parent.rank();
    std::vector<GroupElement> gens;
    gens.reserve(gen_count);
    for (size_t i = 0; i < gen_count; ++i)
      gens.emplace_back(family->parent,
                        std::vector<int64_t>(generators + i * k,
                                             generators + (i + 1) * k));
    family->members.push_back(Subgroup::generated_by(family->parent, gens));
    return CAPG_OK;
  });
}

size_t capg_family_size(const capg_family *family) {
  return family ? family->members.size() : 0;
}

capg_status capg_family_generator_count(const capg_family *family,
                                        size_t member, size_t *out) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  if (!out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = family->members[member].generators().size();
    return CAPG_OK;
  });
}

capg_status capg_family_generators(const capg_family *family, size_t member,
                                   int64_t *out, size_t capacity) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  return guarded([&] {
    auto gens = family->members[member].generators();
    size_t k = family->parent.rank();
    if (capacity < gens.size() * k)
      return set_error(CAPG_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    for (size_t i = 0; i < gens.size(); ++i)
      std::memcpy(out + i * k, gens[i].coords().data(), k * sizeof(int64_t));
    return CAPG_OK;
  });
}

capg_status capg_family_member_order(const capg_family *family, size_t member,
                                     int64_t *out) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  if (!out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = family->members[member].order();
    return CAPG_OK;
  });
}

capg_status capg_family_member_basis(const capg_family *family, size_t member,
                                     int64_t *out, size_t capacity) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  return guarded([&] {
    const IntMatrix &b = family->members[member].basis();
    if (capacity < b.entries().size())
      return set_error(CAPG_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    if (!b.entries().empty())
      std::memcpy(out, b.entries().data(),
                  b.entries().size() * sizeof(int64_t));
    return CAPG_OK;
  });
}

capg_status capg_family_member_invariants(const capg_family *family,
                                          size_t member, int64_t *out,
                                          size_t capacity, size_t *written) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  if (!written)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto inv = subgroup_invariants(family->members[member]);
    *written = inv.size();
    return copy_ints(inv, out, capacity);
  });
}

capg_status capg_family_quotient_invariants(const capg_family *family,
                                            size_t member, int64_t *out,
                                            size_t capacity, size_t *written) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  if (!written)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto inv = quotient_invariants(family->members[member]);
    *written = inv.size();
    return copy_ints(inv, out, capacity);
  });
}

capg_status capg_family_quotient_exponent(const capg_family *family,
                                          size_t member, int64_t *out) {
  if (capg_status s = check_member(family, member); s != CAPG_OK)
    return s;
  if (!out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = quotient_exponent(family->members[member]);
    return CAPG_OK;
  });
}

capg_status capg_witness_family(const capg_group *group, capg_family **out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto family = witness_family(group->group);
    *out = new capg_family{group->group, std::move(family)};
    return CAPG_OK;
  });
}

capg_status capg_verify_family(const capg_group *group,
                               const capg_family *family, capg_report *out) {
  if (!group || !family || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  if (!(group->group == family->parent))
    return set_error(CAPG_ERR_PARENT_MISMATCH,
                     "family belongs to a different group");
  return guarded([&] {
    FamilyReport r = verify_family(group->group, family->members);
    *out = capg_report{
        r.intersection_trivial, r.generates,
        r.covers,               r.quotients_same_exponent,
        r.quotients_isomorphic, r.subgroups_isomorphic,
        r.verdict_c,            r.verdict_d,
    };
    return CAPG_OK;
  });
}

capg_status capg_enumerate_subgroups(const capg_group *group, int64_t bound,
                                     capg_family **out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto subs = enumerate_subgroups(group->group,
                                    bound > 0 ? bound : kDefaultEnumerationBound);
    *out = new capg_family{group->group, std::move(subs)};
    return CAPG_OK;
  });
}

capg_status capg_exists_family_c(const capg_group *group, int64_t bound,
                                 int *out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = exists_family_c(group->group,
                           bound > 0 ? bound : kDefaultEnumerationBound)
               ? 1
               : 0;
    return CAPG_OK;
  });
}

capg_status capg_exists_family_d(const capg_group *group, int64_t bound,
                                 int *out) {
  if (!group || !out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = exists_family_d(group->group,
                           bound > 0 ? bound : kDefaultEnumerationBound)
               ? 1
               : 0;
    return CAPG_OK;
  });
}

capg_status capg_abelian_types(int64_t max_order, capg_type_list **out) {
  if (!out)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new capg_type_list{abelian_types(max_order)};
    return CAPG_OK;
  });
}

size_t capg_type_list_size(const capg_type_list *list) {
  return list ? list->types.size() : 0;
}

size_t capg_type_list_rank(const capg_type_list *list, size_t index) {
  if (!list || index >= list->types.size())
    return 0;
  return list->types[index].size();
}

capg_status capg_type_list_factors(const capg_type_list *list, size_t index,
                                   int64_t *out, size_t capacity) {
  if (!list || index >= list->types.size())
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "index out of range");
  if (!out && capacity > 0)
    return set_error(CAPG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_ints(list->types[index], out, capacity); });
}

void capg_type_list_free(capg_type_list *list) { delete list; }

} // extern "C"
