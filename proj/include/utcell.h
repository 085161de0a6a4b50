/*
 * C interface to the utcell library.
 *
 * Handles are opaque; every function returns a status code and reports
 * results through out parameters. Strings returned through `char**` are
 * heap allocated and must be released with utcell_string_free. On any
 * failure utcell_last_error() describes the most recent error of the
 * calling thread.
 */
#ifndef UTCELL_H
#define UTCELL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum utcell_status {
    UTCELL_OK = 0,
    UTCELL_EINVAL = 1,      /* malformed input, non-basic subset, bad phi */
    UTCELL_EVERIFY = 2,     /* a verification run found a counterexample */
    UTCELL_EINTERNAL = 3
} utcell_status;

typedef enum utcell_format {
    UTCELL_TEXT = 0,
    UTCELL_JSON = 1
} utcell_format;

typedef struct utcell_subset utcell_subset;
typedef struct utcell_diagram utcell_diagram;
typedef struct utcell_invariants utcell_invariants;

const char* utcell_last_error(void);
void utcell_string_free(char* s);

/* Roots are given as "(i,j),(k,l)"; whitespace is ignored. */
utcell_status utcell_subset_parse(int n, const char* roots, utcell_subset** out);
void utcell_subset_free(utcell_subset* d);

/* {"n":n,"roots":[[i,j],...]} or the "(i,j),(k,l)" text form. */
utcell_status utcell_subset_render(const utcell_subset* d, utcell_format fmt, char** out);

/* {"n":..,"D":..,"singular":..,"regular":..,"m_set":..} or aligned text. */
utcell_status utcell_subset_classify(const utcell_subset* d, utcell_format fmt, char** out);

utcell_status utcell_diagram_build(const utcell_subset* d, utcell_diagram** out);
void utcell_diagram_free(utcell_diagram* dia);
utcell_status utcell_diagram_render(const utcell_diagram* dia, utcell_format fmt, char** out);
/* The extension C(D) as a JSON array of [i,j] pairs, descending. */
utcell_status utcell_diagram_extension(const utcell_diagram* dia, char** out);

/* {"w":[...],"homogeneous":bool} or two-line text plus the flag. */
utcell_status utcell_wd(const utcell_subset* d, utcell_format fmt, char** out);

/* images: w(1..n); writes 1 when w = w_D for some basic D. */
utcell_status utcell_is_homogeneous(const int* images, int n, int* out_flag);

/* {"w":[...],"reflections":[[i,j],...],"product_matches":bool} */
utcell_status utcell_factorize(const utcell_subset* d, utcell_format fmt, char** out);

utcell_status utcell_invariants_compute(const utcell_subset* d, utcell_invariants** out);
void utcell_invariants_free(utcell_invariants* inv);
utcell_status utcell_invariants_render(const utcell_invariants* inv, utcell_format fmt, char** out);

/* Vanishing and nonvanishing minors cutting out the basic cell. */
utcell_status utcell_relations(const utcell_subset* d, utcell_format fmt, char** out);

/*
 * Invariance and independence report. phi may be NULL (random per trial) or
 * "(i,j)=v,..." with integer or p/q values. Returns UTCELL_EVERIFY when a
 * check fails; the JSON report is produced either way.
 */
utcell_status utcell_verify(const utcell_subset* d, const char* phi,
                            unsigned long seed, int trials, char** out);

/* Every basic subset of the board, with w_D and |C(D)|. */
utcell_status utcell_enumerate(int n, utcell_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
