#ifndef CAPGROUP_H
#define CAPGROUP_H

/* capgroup — capability of finite abelian groups.
 *
 * C interface to the capgroup core. All objects are opaque handles owned
 * by the library; every function that can fail returns a capg_status and
 * reports results through out-parameters. Groups are described by their
 * invariant factor decomposition (n_1 | n_2 | ... | n_k, each > 1);
 * arbitrary cyclic-factor orders are normalized on construction.
 *
 * All arithmetic is exact; overflow is detected and reported as
 * CAPG_ERR_OVERFLOW, never wrapped.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CAPG_API __declspec(dllexport)
#else
#define CAPG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum capg_status {
  CAPG_OK = 0,
  CAPG_ERR_INVALID_ARGUMENT = 1,
  CAPG_ERR_NOT_CAPABLE = 2,
  CAPG_ERR_OVERFLOW = 3,
  CAPG_ERR_BOUND_EXCEEDED = 4,
  CAPG_ERR_PARENT_MISMATCH = 5,
  CAPG_ERR_BUFFER_TOO_SMALL = 6,
  CAPG_ERR_INTERNAL = 7
} capg_status;

/* A finite abelian group in invariant factor form. */
typedef struct capg_group capg_group;

/* An ordered list of subgroups of one group. */
typedef struct capg_family capg_family;

/* A list of abelian isomorphism types (invariant factor lists). */
typedef struct capg_type_list capg_type_list;

/* Verdicts for a family of subgroups. Booleans are 0/1.
 *
 * verdict_c = intersection_trivial && generates && quotients_same_exponent
 * verdict_d = intersection_trivial && covers && quotients_isomorphic
 *             && subgroups_isomorphic
 */
typedef struct capg_report {
  int intersection_trivial;
  int generates; /* the join of the family is the whole group */
  int covers;    /* the set union of the family is the whole group */
  int quotients_same_exponent;
  int quotients_isomorphic;
  int subgroups_isomorphic;
  int verdict_c;
  int verdict_d;
} capg_report;

/* Static name for a status code, e.g. "CAPG_ERR_OVERFLOW". */
CAPG_API const char *capg_status_name(capg_status status);

/* Detail message for the most recent failing call on this thread.
 * Valid until the next capgroup call on the same thread. */
CAPG_API const char *capg_last_error(void);

/* ---- groups ---------------------------------------------------------- */

/* Builds the group C_{orders[0]} x ... x C_{orders[count-1]} normalized to
 * invariant factor form. Every order must be > 1; count 0 gives the
 * trivial group. */
CAPG_API capg_status capg_group_new(const int64_t *orders, size_t count,
                                    capg_group **out);
CAPG_API void capg_group_free(capg_group *group);

/* Number of invariant factors (0 for the trivial group). */
CAPG_API size_t capg_group_rank(const capg_group *group);

/* Copies the invariant factors into out (capacity >= rank). */
CAPG_API capg_status capg_group_factors(const capg_group *group, int64_t *out,
                                        size_t capacity);
CAPG_API capg_status capg_group_order(const capg_group *group, int64_t *out);
CAPG_API capg_status capg_group_exponent(const capg_group *group,
                                         int64_t *out);

/* 1 iff the group is noncyclic with its top two invariant factors equal. */
CAPG_API int capg_group_is_capable(const capg_group *group);

/* ---- families of subgroups ------------------------------------------ */

/* Creates an empty family over the given group. */
CAPG_API capg_status capg_family_new(const capg_group *group,
                                     capg_family **out);
CAPG_API void capg_family_free(capg_family *family);

/* Appends the subgroup generated by gen_count generator vectors, passed
 * flattened row-major (gen_count * rank coordinates). Coordinates are
 * reduced modulo the invariant factors. gen_count 0 appends the trivial
 * subgroup. */
CAPG_API capg_status capg_family_add_subgroup(capg_family *family,
                                              const int64_t *generators,
                                              size_t gen_count);

CAPG_API size_t capg_family_size(const capg_family *family);

/* Canonical generators of one member: the nonzero rows of its canonical
 * lattice basis reduced modulo the invariant factors. */
CAPG_API capg_status capg_family_generator_count(const capg_family *family,
                                                 size_t member, size_t *out);
CAPG_API capg_status capg_family_generators(const capg_family *family,
                                            size_t member, int64_t *out,
                                            size_t capacity);

CAPG_API capg_status capg_family_member_order(const capg_family *family,
                                              size_t member, int64_t *out);

/* Canonical lattice basis of one member: rank*rank entries, row-major,
 * upper triangular with positive diagonal. */
CAPG_API capg_status capg_family_member_basis(const capg_family *family,
                                              size_t member, int64_t *out,
                                              size_t capacity);

/* Invariant factors of the member subgroup / of the quotient by it.
 * written receives the number of factors (<= group rank). */
CAPG_API capg_status capg_family_member_invariants(const capg_family *family,
                                                   size_t member, int64_t *out,
                                                   size_t capacity,
                                                   size_t *written);
CAPG_API capg_status capg_family_quotient_invariants(
    const capg_family *family, size_t member, int64_t *out, size_t capacity,
    size_t *written);
CAPG_API capg_status capg_family_quotient_exponent(const capg_family *family,
                                                   size_t member,
                                                   int64_t *out);

/* ---- capability machinery ------------------------------------------- */

/* Constructs the witness family of a capable group: subgroups with trivial
 * intersection whose union covers the group, all isomorphic to each other
 * and with isomorphic quotients. Members are sorted lexicographically by
 * canonical basis. Fails with CAPG_ERR_NOT_CAPABLE otherwise. */
CAPG_API capg_status capg_witness_family(const capg_group *group,
                                         capg_family **out);

/* Checks a family against the intersection / generation / covering /
 * isomorphism conditions. The family must be nonempty and belong to the
 * same group. */
CAPG_API capg_status capg_verify_family(const capg_group *group,
                                        const capg_family *family,
                                        capg_report *out);

/* All subgroups of the group, sorted lexicographically by canonical basis.
 * Fails with CAPG_ERR_BOUND_EXCEEDED when the group order exceeds bound
 * (pass 0 for the default bound of 4096). */
CAPG_API capg_status capg_enumerate_subgroups(const capg_group *group,
                                              int64_t bound,
                                              capg_family **out);

/* Existence of a family satisfying the trivial-intersection + generating +
 * equal-quotient-exponent conditions (c), resp. the trivial-intersection +
 * covering + isomorphic-quotients + isomorphic-members conditions (d).
 * Decided by exhaustive subgroup enumeration within bound. */
CAPG_API capg_status capg_exists_family_c(const capg_group *group,
                                          int64_t bound, int *out);
CAPG_API capg_status capg_exists_family_d(const capg_group *group,
                                          int64_t bound, int *out);

/* ---- isomorphism type survey ---------------------------------------- */

/* One representative invariant factor list per abelian isomorphism type of
 * order <= max_order (the trivial type included). */
CAPG_API capg_status capg_abelian_types(int64_t max_order,
                                        capg_type_list **out);
CAPG_API size_t capg_type_list_size(const capg_type_list *list);
CAPG_API size_t capg_type_list_rank(const capg_type_list *list, size_t index);
CAPG_API capg_status capg_type_list_factors(const capg_type_list *list,
                                            size_t index, int64_t *out,
                                            size_t capacity);
CAPG_API void capg_type_list_free(capg_type_list *list);

#ifdef __cplusplus
}
#endif

#endif /* CAPGROUP_H */
