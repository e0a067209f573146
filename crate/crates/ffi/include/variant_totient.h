/* variant-totient C API */

#ifndef VARIANT_TOTIENT_H
#define VARIANT_TOTIENT_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum VtStatus {
  VT_STATUS_OK = 0,
  VT_STATUS_INVALID_ARGUMENT = 1,
  VT_STATUS_ZERO_MODULUS = 2,
  VT_STATUS_NOT_A_UNIT = 3,
  VT_STATUS_NO_USABLE_EXPONENT = 4,
  VT_STATUS_INVALID_ELEMENT = 5,
  VT_STATUS_ENUMERATION_CAP_EXCEEDED = 6,
  VT_STATUS_EXPONENT_TOO_SMALL = 7,
  VT_STATUS_UNSUPPORTED_MODULUS = 8,
  VT_STATUS_NOT_COPRIME = 9,
  /**
   * The requested value does not exist (non-residue, no construction).
   */
  VT_STATUS_NO_SOLUTION = 10,
  VT_STATUS_NULL_POINTER = 11,
  VT_STATUS_INTERNAL = 12,
} VtStatus;

typedef enum VtParity {
  VT_PARITY_ODD = 0,
  VT_PARITY_EVEN = 1,
  VT_PARITY_UNKNOWN = 2,
} VtParity;

/**
 * The closed-form case that produced an evaluation.
 */
typedef enum VtEvalRule {
  VT_EVAL_RULE_POWER_OF_TWO = 0,
  VT_EVAL_RULE_DIVISIBLE_BY_FOUR = 1,
  VT_EVAL_RULE_TWICE_PRIME_POWER3_MOD4 = 2,
  VT_EVAL_RULE_TWICE_PRIME_POWER1_MOD4 = 3,
  VT_EVAL_RULE_TWICE_ODD_COMPOSITE = 4,
  VT_EVAL_RULE_ODD_PRIME_POWER = 5,
  VT_EVAL_RULE_ODD_TWO_PRIME_POWERS = 6,
  VT_EVAL_RULE_ODD_COMPOSITE = 7,
} VtEvalRule;

/**
 * Opaque canonical prime-power decomposition.
 */
typedef struct VtFactorization VtFactorization;

/**
 * Opaque finite group handle.
 */
typedef struct VtGroup VtGroup;

/**
 * Result of evaluating `T(n)`: exact when `is_exact`, otherwise the
 * inclusive bounds plus parity, with up to two pinned candidates.
 */
typedef struct VtTotientValue {
  bool is_exact;
  uint64_t exact;
  uint64_t lower;
  uint64_t upper;
  enum VtParity parity;
  enum VtEvalRule rule;
  uint32_t candidate_count;
  uint64_t candidates[2];
} VtTotientValue;

/**
 * Counts from an exhaustive collision enumeration.
 */
typedef struct VtCollisionSummary {
  uint64_t order;
  uint64_t target;
  uint64_t pair_count;
  uint64_t exponent_count;
  uint64_t theoretical_lower_bound;
  bool bound_satisfied;
} VtCollisionSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a NUL-terminated static string.
 */
const char *vt_version(void);

uint64_t vt_gcd(uint64_t a, uint64_t b);

bool vt_is_prime(uint64_t n);

/**
 * `base^exp mod modulus`; fails with `ZeroModulus` when `modulus` is 0.
 */
enum VtStatus vt_mod_pow(uint64_t base, uint64_t exp, uint64_t modulus, uint64_t *out);

enum VtStatus vt_mod_inverse(uint64_t a, uint64_t m, uint64_t *out);

/**
 * Deterministic safe prime of exactly `bits` bits (4 to 62) for the seed.
 */
enum VtStatus vt_gen_safe_prime(uint32_t bits, uint64_t seed, uint64_t *out);

/**
 * Factorizes `n >= 1`; returns null for `n = 0`. Free with
 * [`vt_factorization_free`].
 */
struct VtFactorization *vt_factorize(uint64_t n);

void vt_factorization_free(struct VtFactorization *f);

uint64_t vt_factorization_n(const struct VtFactorization *f);

/**
 * Number of distinct prime divisors.
 */
size_t vt_factorization_len(const struct VtFactorization *f);

enum VtStatus vt_factorization_prime(const struct VtFactorization *f, size_t index, uint64_t *out);

enum VtStatus vt_factorization_exponent(const struct VtFactorization *f,
                                        size_t index,
                                        uint32_t *out);

enum VtStatus vt_euler_phi(uint64_t n, uint64_t *out);

enum VtStatus vt_schemmel(uint64_t r, uint64_t n, uint64_t *out);

/**
 * Brute-force `T(n)`.
 */
enum VtStatus vt_totient_t_oracle(uint64_t n, uint64_t *out);

/**
 * Brute-force `T_r(n)`; requires `r >= 2`.
 */
enum VtStatus vt_totient_tr_oracle(uint64_t r, uint64_t n, uint64_t *out);

/**
 * Closed-form / bounded evaluation of `T(n)`.
 */
enum VtStatus vt_totient_t_evaluate(uint64_t n, struct VtTotientValue *out);

/**
 * Compares evaluator and oracle for every n in `[lo, hi]`, writing the
 * number of violations (0 means the sweep passed).
 */
enum VtStatus vt_verify_range(uint64_t lo, uint64_t hi, uint64_t *out_violations);

/**
 * The multiplicative group of units modulo `modulus` (at least 2);
 * returns null on a bad modulus. Free with [`vt_group_free`].
 */
struct VtGroup *vt_group_units_new(uint64_t modulus);

/**
 * The additive cyclic group on `modulus` elements (at least 1);
 * returns null on a bad modulus. Free with [`vt_group_free`].
 */
struct VtGroup *vt_group_additive_new(uint64_t modulus);

void vt_group_free(struct VtGroup *group);

uint64_t vt_group_order(const struct VtGroup *group);

uint64_t vt_group_identity(const struct VtGroup *group);

bool vt_group_contains(const struct VtGroup *group, uint64_t a);

enum VtStatus vt_group_compose(const struct VtGroup *group, uint64_t a, uint64_t b, uint64_t *out);

enum VtStatus vt_group_inverse(const struct VtGroup *group, uint64_t a, uint64_t *out);

/**
 * The variant product `a *_s b = a s b`.
 */
enum VtStatus vt_variant_compose(const struct VtGroup *group,
                                 uint64_t s,
                                 uint64_t a,
                                 uint64_t b,
                                 uint64_t *out);

/**
 * The variant power `(g x)^(e-1) g`; requires `e >= 1`.
 */
enum VtStatus vt_variant_power(const struct VtGroup *group,
                               uint64_t x,
                               uint64_t g,
                               uint64_t e,
                               uint64_t *out);

/**
 * Deterministic key generation: writes the sandwich element and the unit
 * exponent drawn for the seed.
 */
enum VtStatus vt_keygen(const struct VtGroup *group,
                        uint64_t seed,
                        uint64_t *out_x,
                        uint64_t *out_e);

enum VtStatus vt_encrypt(const struct VtGroup *group,
                         uint64_t x,
                         uint64_t e,
                         uint64_t plaintext,
                         uint64_t *out);

enum VtStatus vt_decrypt(const struct VtGroup *group,
                         uint64_t x,
                         uint64_t e,
                         uint64_t ciphertext,
                         uint64_t *out);

/**
 * Enumerates all `(y, f)` colliding with `(g x)^(e-1)`; see the library
 * documentation for the bound semantics.
 */
enum VtStatus vt_collision_pairs(const struct VtGroup *group,
                                 uint64_t g,
                                 uint64_t x,
                                 uint64_t e,
                                 struct VtCollisionSummary *out);

/**
 * Counts exponents `f > 1` and pairs `(w, f)` with `w^(f-1) = c`.
 */
enum VtStatus vt_count_solvable_exponents(const struct VtGroup *group,
                                          uint64_t c,
                                          uint64_t *out_exponents,
                                          uint64_t *out_pairs);

/**
 * Square root of `c` modulo a prime `p = 3 mod 4`. `NoSolution` marks a
 * quadratic non-residue.
 */
enum VtStatus vt_sqrt_mod(uint64_t c, uint64_t p, uint64_t *out);

/**
 * Builds a solution of `w^(f-1) = c` when a closed construction applies;
 * `NoSolution` means the caller must fall back to enumeration.
 */
enum VtStatus vt_construct_solution(const struct VtGroup *group,
                                    uint64_t c,
                                    uint64_t f,
                                    uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VARIANT_TOTIENT_H */
