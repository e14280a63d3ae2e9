/*
 * ietlab — exact analysis of interval exchange transformations
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the ietlab shared library. All functions return IETLAB_OK
 * on success or a negative error code; ietlab_last_error() describes the
 * most recent failure on the calling thread. Strings returned through
 * `char **` out-parameters are heap-allocated and must be released with
 * ietlab_string_free().
 *
 * Scalars cross this boundary as text: "p/q" for rationals and
 * "a+b*sqrt(D)" with rational a, b for quadratic irrationals. Lengths lists
 * are comma-separated scalars. Reports are JSON; sweeps are CSV. For a fixed
 * input the JSON and CSV outputs are byte-identical across runs.
 */

#ifndef IETLAB_H
#define IETLAB_H

#ifdef __cplusplus
extern "C" {
#endif

#define IETLAB_OK 0

/* Input could not be parsed (scalar, permutation, catalog, params). */
#define IETLAB_ERR_PARSE (-1)
/* Structurally invalid input: not a bijection, nonpositive length,
 * dimension mismatch, bad parameter value, ... */
#define IETLAB_ERR_INVALID (-2)
/* Valid input outside an operation's domain: point outside [0,1),
 * permutation not type W, orbit collision below the horizon, ... */
#define IETLAB_ERR_DOMAIN (-3)
/* File could not be read. */
#define IETLAB_ERR_IO (-4)
/* Null handle or out-parameter. */
#define IETLAB_ERR_NULL (-5)
/* Internal invariant violation; indicates a bug in the library. */
#define IETLAB_ERR_INTERNAL (-6)

typedef struct ietlab_iet ietlab_iet;
typedef struct ietlab_catalog ietlab_catalog;

/* Library version string, e.g. "0.1.0". Never fails. */
const char* ietlab_version(void);

/* Message for the most recent error on this thread; empty string if none. */
const char* ietlab_last_error(void);

void ietlab_string_free(char* s);

/* --- construction ------------------------------------------------------- */

/* Builds the interval exchange map from permutation text "a1 a2 ... ad" and
 * comma-separated lengths. Lengths must sum to 1 unless `normalize` is
 * nonzero, in which case they are rescaled exactly. */
int ietlab_iet_create(const char* perm_text, const char* lengths_text, int normalize,
                      ietlab_iet** out);
void ietlab_iet_free(ietlab_iet* t);

/* Bundled catalog of named systems (third, golden, fhz, ...). */
int ietlab_catalog_builtin(ietlab_catalog** out);
/* Catalog file: lines "name: a1 a2 ... ad | l1, l2, ..., ld". */
int ietlab_catalog_load(const char* path, ietlab_catalog** out);
void ietlab_catalog_free(ietlab_catalog* cat);
int ietlab_catalog_list_json(const ietlab_catalog* cat, char** json_out);
int ietlab_catalog_build(const ietlab_catalog* cat, const char* name, ietlab_iet** out);

/* --- analyses ----------------------------------------------------------- */

/* Combinatorial facts for a permutation: irreducibility, sigma, orbits,
 * type W, the loop through 0. */
int ietlab_perm_report_json(const char* perm_text, char** json_out);

/* Full analysis report. `params_json` may be NULL or a JSON object with any
 * of: "N" (int), "rigidity_N" (int), "eps", "threshold", "delta" (scalar
 * strings), "b" (int), "digits" (int), "catalog_name" (string, echoed as
 * provenance). Identical inputs yield byte-identical JSON. */
int ietlab_analyze_json(const ietlab_iet* t, const char* params_json, char** json_out);

/* eps_n sweep for n = 1..N as CSV: n, eps_n, n*eps_n, running minimum,
 * each exact and as a fixed-digit decimal. */
int ietlab_eps_sweep_csv(const ietlab_iet* t, long N, int digits, char** csv_out);
int ietlab_eps_sweep_json(const ietlab_iet* t, long N, int digits, char** json_out);

/* Rigidity profile for n = 1..N: measure of { x : |T^n x - x| > eps }. */
int ietlab_rigidity_csv(const ietlab_iet* t, long N, const char* eps, const char* threshold,
                        int digits, char** csv_out);
int ietlab_rigidity_json(const ietlab_iet* t, long N, const char* eps, const char* threshold,
                         int digits, char** json_out);

/* Greedy tower over the base interval [left, right), or over a minimal
 * partition cell at horizon n when left/right are NULL. */
int ietlab_tower_json(const ietlab_iet* t, const char* left, const char* right, long n,
                      int digits, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IETLAB_H */
