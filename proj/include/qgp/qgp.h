/*
 * qgp.h -- C interface to the quasigroup prolongation library.
 *
 * Conventions:
 *   - Every function returns an int status: QGP_OK (0) or a negative
 *     QGP_ERR_* code. qgp_last_error() describes the most recent failure on
 *     the calling thread.
 *   - Objects are opaque handles created by *_create / producer functions
 *     and released with the matching *_destroy. Destroying NULL is a no-op.
 *   - Rows, columns and symbols are 1-based, as in the LSQ text format.
 *     Permutations are arrays of 1-based positions.
 *   - A limit of 0 means "no limit".
 *   - Text outputs use the buffer protocol: pass a buffer and its capacity
 *     in *len. On QGP_ERR_BUFFER_TOO_SMALL (or a NULL buffer) *len is set to
 *     the size required, including the terminating NUL.
 */

#ifndef QGP_H_
#define QGP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
  #if defined(QGP_BUILDING_LIBRARY)
    #define QGP_API __declspec(dllexport)
  #else
    #define QGP_API __declspec(dllimport)
  #endif
#else
  #define QGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum qgp_status {
   QGP_OK = 0,
   QGP_ERR_NULL_POINTER = -1,
   QGP_ERR_INVALID_HANDLE = -2,
   QGP_ERR_PARSE = -3,        /* malformed text; see qgp_last_error_line() */
   QGP_ERR_VALIDATION = -4,   /* grid is not a (partial) Latin square */
   QGP_ERR_DOMAIN = -5,       /* argument outside the operation's domain */
   QGP_ERR_INFEASIBLE = -6,   /* contraction has no valid result */
   QGP_ERR_BUFFER_TOO_SMALL = -7,
   QGP_ERR_OUT_OF_RANGE = -8, /* index past the end of a list or grid */
   QGP_ERR_INTERNAL = -99,
};

enum qgp_method {
   QGP_METHOD_BRUCK = 0,
   QGP_METHOD_DISJOINT = 1,
   QGP_METHOD_BELYAVSKAYA = 2,
   QGP_METHOD_GEN_BELYAVSKAYA = 3,
   QGP_METHOD_DD = 4,
   QGP_METHOD_GEN_DD = 5,
   QGP_METHOD_TWO_STEP = 6,
};

enum qgp_contraction {
   QGP_CONTRACT_BRUCK = 0,
   QGP_CONTRACT_EXCEPT = 1,
};

enum qgp_mapping_kind {
   QGP_MAPPING_COMPLETE = 0,
   QGP_MAPPING_QUASICOMPLETE = 1,
   QGP_MAPPING_NEITHER = 2,
};

enum qgp_provenance {
   QGP_PROV_UNCHANGED = 0,
   QGP_PROV_PROJECTED_ROW = 1,
   QGP_PROV_PROJECTED_COL = 2,
   QGP_PROV_VACATED = 3,
   QGP_PROV_KEPT = 4,
   QGP_PROV_BORDER_FILL = 5,
   QGP_PROV_DIAGONAL_SEED = 6,
   QGP_PROV_COMPLETED = 7,
};

/* Classification of a permutation against a square. special, x1 and x2
 * are only meaningful for QGP_MAPPING_QUASICOMPLETE (x1 < x2, 1-based). */
typedef struct qgp_mapping_info {
   int32_t kind;
   uint32_t special;
   uint32_t x1;
   uint32_t x2;
} qgp_mapping_info;

typedef struct qgp_square_struct* qgp_square_t;
typedef struct qgp_square_list_struct* qgp_square_list_t;
typedef struct qgp_perm_list_struct* qgp_perm_list_t;
typedef struct qgp_plan_struct* qgp_plan_t;
typedef struct qgp_report_list_struct* qgp_report_list_t;

QGP_API const char* qgp_version(void);
QGP_API const char* qgp_last_error(void);
/* Line of the last QGP_ERR_PARSE, 0 if not applicable. */
QGP_API size_t qgp_last_error_line(void);
QGP_API const char* qgp_status_name(int status);

/*
 * Squares. A square handle holds any syntactically valid grid: complete or
 * partial, Latin or not. Operations that need a Latin square validate it
 * and fail with QGP_ERR_VALIDATION.
 */
QGP_API int qgp_square_parse(const char* text, size_t len, qgp_square_t* out);
/* cells: order*order row-major symbols, 0 for an empty cell. */
QGP_API int qgp_square_from_cells(size_t order, const int32_t* cells, qgp_square_t* out);
QGP_API int qgp_square_cyclic(size_t order, qgp_square_t* out);
QGP_API int qgp_square_random(size_t order, uint64_t seed, qgp_square_t* out);
QGP_API int qgp_square_destroy(qgp_square_t square);

QGP_API int qgp_square_order(qgp_square_t square, size_t* order);
QGP_API int qgp_square_get(qgp_square_t square, size_t row, size_t col, int32_t* symbol);
QGP_API int qgp_square_is_partial(qgp_square_t square, int* partial);
/* *latin is 1 or 0; malformed grids (partial, symbols out of range) give
 * QGP_ERR_VALIDATION instead. */
QGP_API int qgp_square_is_latin(qgp_square_t square, int* latin);
/* One line per problem; empty when the square is Latin. */
QGP_API int qgp_square_validate(qgp_square_t square, char* buf, size_t* len);
/* Canonical LSQ text. */
QGP_API int qgp_square_format(qgp_square_t square, char* buf, size_t* len);
/* Moves row r to row_perm[r] and column c to col_perm[c] (arrays of order). */
QGP_API int qgp_square_permute(qgp_square_t square,
                               const uint32_t* row_perm,
                               const uint32_t* col_perm,
                               size_t n,
                               qgp_square_t* out);

QGP_API int qgp_square_list_size(qgp_square_list_t list, size_t* size);
/* Returns a new handle owned by the caller. */
QGP_API int qgp_square_list_get(qgp_square_list_t list, size_t i, qgp_square_t* out);
QGP_API int qgp_square_list_destroy(qgp_square_list_t list);

/* Completions of a partial square, in search order. */
QGP_API int qgp_complete(qgp_square_t square, size_t limit, qgp_square_list_t* out);

/*
 * Permutation lists. Entries are grouped: for disjoint transversal families
 * each family is `group` consecutive entries, otherwise group is 1.
 */
QGP_API int qgp_perm_list_size(qgp_perm_list_t list, size_t* entries);
QGP_API int qgp_perm_list_group(qgp_perm_list_t list, size_t* group);
QGP_API int qgp_perm_list_width(qgp_perm_list_t list, size_t* width);
/* out receives `width` 1-based positions. */
QGP_API int qgp_perm_list_get(qgp_perm_list_t list, size_t i, uint32_t* out);
QGP_API int qgp_perm_list_destroy(qgp_perm_list_t list);

QGP_API int qgp_transversals(qgp_square_t square, size_t limit, qgp_perm_list_t* out);
/* limit counts families. */
QGP_API int qgp_disjoint_transversals(qgp_square_t square, size_t k, size_t limit, qgp_perm_list_t* out);
/* *truncated (nullable) is set to 1 when the budget cut the list short. */
QGP_API int qgp_quasicomplete_mappings(qgp_square_t square,
                                       size_t budget,
                                       qgp_perm_list_t* out,
                                       int* truncated);

/* sigma_bar (nullable) receives n symbols. */
QGP_API int qgp_classify(qgp_square_t square,
                         const uint32_t* sigma,
                         size_t n,
                         uint32_t* sigma_bar,
                         qgp_mapping_info* info);

/*
 * Prolongation plans. Transversals, excepted rows, mappings and kept rows
 * accumulate in call order; slot j of the construction is the j-th added.
 * For QGP_METHOD_TWO_STEP add exactly two transversals (t1 then t2).
 */
QGP_API int qgp_plan_create(int method, qgp_plan_t* out);
QGP_API int qgp_plan_destroy(qgp_plan_t plan);
QGP_API int qgp_plan_add_transversal(qgp_plan_t plan, const uint32_t* cols, size_t n);
QGP_API int qgp_plan_add_except(qgp_plan_t plan, uint32_t row);
QGP_API int qgp_plan_add_sigma(qgp_plan_t plan, const uint32_t* sigma, size_t n);
QGP_API int qgp_plan_add_keep(qgp_plan_t plan, uint32_t row);
QGP_API int qgp_plan_set_fill(qgp_plan_t plan, const uint32_t* symbols, size_t k);
QGP_API int qgp_plan_set_cols(qgp_plan_t plan, const uint32_t* perm, size_t k);
QGP_API int qgp_plan_set_rows(qgp_plan_t plan, const uint32_t* perm, size_t k);
/* Order-k Latin square; its symbol s stands for n+s. */
QGP_API int qgp_plan_set_bottom(qgp_plan_t plan, qgp_square_t bottom);
/* QGP_METHOD_BRUCK or QGP_METHOD_BELYAVSKAYA */
QGP_API int qgp_plan_set_first(qgp_plan_t plan, int method);
QGP_API int qgp_plan_set_diag_seed(qgp_plan_t plan, int enabled);

/* Runs the plan. Generalized methods may legitimately yield an empty list. */
QGP_API int qgp_prolong(qgp_square_t square, qgp_plan_t plan, size_t limit, qgp_report_list_t* out);

QGP_API int qgp_report_list_size(qgp_report_list_t list, size_t* size);
QGP_API int qgp_report_list_square(qgp_report_list_t list, size_t i, qgp_square_t* out);
QGP_API int qgp_report_list_provenance(qgp_report_list_t list,
                                       size_t i,
                                       size_t row,
                                       size_t col,
                                       int* kind,
                                       uint32_t* slot);
QGP_API int qgp_report_list_destroy(qgp_report_list_t list);

/*
 * Contraction of an order-m square by `deleted`. sigma (nullable) receives
 * m-1 entries: the recovered transversal or mapping; info (nullable) its
 * classification against the result.
 */
QGP_API int qgp_contract(qgp_square_t square,
                         int method,
                         uint32_t deleted,
                         qgp_square_t* out,
                         uint32_t* sigma,
                         qgp_mapping_info* info);

#ifdef __cplusplus
}
#endif

#endif /* QGP_H_ */
