#ifndef CWPOWER_CWPOWER_H
#define CWPOWER_CWPOWER_H

#include <stddef.h>
#include <stdint.h>

#ifndef CWP_API
#define CWP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cwp_status {
  CWP_OK = 0,
  CWP_INVALID_ARGUMENT = 1,
  CWP_PARSE_ERROR = 2,
  CWP_DIMENSION_MISMATCH = 3,
  CWP_NOT_IN_POWER_SUBRING = 4,
  CWP_COORDINATE_HYPERPLANE_COMPONENT = 5,
  CWP_UNDEFINED_DUAL = 6,
  CWP_FORBIDDEN_EXPONENT = 7,
  CWP_RANK_DEFICIENT = 8,
  CWP_BUDGET_EXCEEDED = 9,
  CWP_UNSUPPORTED_SIZE = 10,
  CWP_UNSUPPORTED = 11,
  CWP_INTERNAL_CLASSIFICATION_ERROR = 12,
  CWP_INTERNAL = 13
} cwp_status;

typedef struct cwp_budget {
  uint64_t group_elements;
  uint64_t frontier;
  uint64_t columns;
} cwp_budget;

typedef struct cwp_poly cwp_poly;
typedef struct cwp_matrix cwp_matrix;

/* Errors. The message and parse position describe the most recent failing
   call on the calling thread. */
CWP_API const char* cwp_last_error(void);
CWP_API long cwp_last_error_position(void); /* -1 when not a parse error */
CWP_API const char* cwp_status_name(cwp_status status);

/* Every char* returned through an out parameter is released with this. */
CWP_API void cwp_string_free(char* s);

CWP_API void cwp_budget_default(cwp_budget* out);

/* Polynomials in the ASCII grammar; z denotes a primitive r_context-th root
   of unity. */
CWP_API cwp_status cwp_poly_parse(const char* text, unsigned nvars, unsigned r_context, cwp_poly** out);
CWP_API void cwp_poly_free(cwp_poly* p);
CWP_API cwp_status cwp_poly_render(const cwp_poly* p, char** out);
CWP_API unsigned cwp_poly_nvars(const cwp_poly* p);
CWP_API cwp_status cwp_poly_degree(const cwp_poly* p, unsigned* out);
CWP_API cwp_status cwp_poly_equal(const cwp_poly* a, const cwp_poly* b, int* out);

/* Row-major entries, each a coefficient in the grammar (int, int/uint, z^e). */
CWP_API cwp_status cwp_matrix_new(size_t rows, size_t cols, const char* const* entries, unsigned r_context,
                                  cwp_matrix** out);
CWP_API void cwp_matrix_free(cwp_matrix* m);

/* Power map. factors are caller-asserted irreducible. */
CWP_API cwp_status cwp_power_hypersurface(const cwp_poly* const* factors, size_t count, unsigned r, cwp_poly** out);
CWP_API cwp_status cwp_sym_r(const cwp_poly* const* factors, size_t count, unsigned r, cwp_poly** out);
CWP_API cwp_status cwp_reciprocal(const cwp_poly* const* factors, size_t count, cwp_poly** out);
/* p as "s" or "s/r". */
CWP_API cwp_status cwp_gen_powsum(const char* p, unsigned n, cwp_poly** out);
CWP_API cwp_status cwp_dual_exponent(const char* p, char** out);
CWP_API cwp_status cwp_chain_exponent(const char* p, unsigned k, int reci_first, char** out);

/* Linear spaces, given by an (n+1) x (k+1) embedding matrix B. Results are
   JSON objects. */
CWP_API cwp_status cwp_matroid_summary(const cwp_matrix* b, char** out_json);
CWP_API cwp_status cwp_degree_linear_power(const cwp_matrix* b, unsigned r, char** out_json);
CWP_API cwp_status cwp_stab_fix_linear(const cwp_matrix* b, unsigned r, const cwp_budget* budget, char** out_json);
CWP_API cwp_status cwp_stab_fix_so(unsigned m, unsigned r, uint64_t seed, size_t samples, const cwp_budget* budget,
                                   char** out_json);
CWP_API cwp_status cwp_ortho_degree(unsigned m, char** out_json);

/* Squares of lines and planes. */
CWP_API cwp_status cwp_classify_line(const cwp_matrix* b, char** out_json);
CWP_API cwp_status cwp_classify_plane(const cwp_matrix* b, char** out_json);
CWP_API cwp_status cwp_vanishing_forms(const cwp_matrix* b, unsigned r, unsigned d, const cwp_budget* budget,
                                       char** out_json);
CWP_API cwp_status cwp_generator_profile(const cwp_matrix* b, unsigned r, unsigned dmax, const cwp_budget* budget,
                                         char** out_json);

/* Rank-one completion of symmetric matrices. */
CWP_API cwp_status cwp_rank1_gens(unsigned k, unsigned s, char** out_json);
CWP_API cwp_status cwp_eig_test(const cwp_matrix* a, int* out_verdict);

/* Power bases. Linear candidates only use the exact linear route; any
   non-linear candidate selects the mixed route. */
CWP_API cwp_status cwp_power_basis_check(const cwp_poly* const* generators, size_t num_generators,
                                         const cwp_poly* const* candidates, size_t num_candidates, unsigned r,
                                         const cwp_budget* budget, int* out_verdict, char** out_json);
CWP_API cwp_status cwp_power_basis_make(const cwp_poly* const* generators, size_t num_generators, unsigned r,
                                        const cwp_budget* budget, char** out_json);

/* Named reproduction fixtures. */
CWP_API cwp_status cwp_repro_names(char** out_json);
CWP_API cwp_status cwp_repro_run(const char* name, int* out_passed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
