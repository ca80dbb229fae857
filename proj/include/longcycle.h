#ifndef LONGCYCLE_H
#define LONGCYCLE_H

/* C interface to the long-cycle percolation library. All entry points catch
 * internal exceptions and return a status code; on failure lc_last_error()
 * holds a message for the calling thread. Returned buffers are malloc'd and
 * owned by the caller. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
    LC_OK = 0,
    LC_ERR_BAD_ARGUMENT = 1,
    LC_ERR_PARSE = 2,
    LC_ERR_CONFIG = 3,
    LC_ERR_TOO_LARGE = 4,
    LC_ERR_REJECTION_BUDGET = 5,
    LC_ERR_INTERNAL = 6,
} lc_status;

/* Message from the most recent failing call on this thread; never NULL. */
const char* lc_last_error(void);

/* ---- host graphs ---- */

typedef struct lc_graph lc_graph;

lc_status lc_graph_complete(uint32_t n, lc_graph** out);
lc_status lc_graph_hypercube(uint32_t dim, lc_graph** out);
lc_status lc_graph_random_regular(uint32_t n, uint32_t d, uint64_t seed, lc_graph** out);
lc_status lc_graph_circulant(uint32_t n, const uint32_t* offsets, size_t offset_count,
                             lc_graph** out);
/* Edge-list text: first line "n", then "u v" lines; '#' starts a comment. */
lc_status lc_graph_from_edge_list(const char* text, lc_graph** out);
void lc_graph_free(lc_graph* graph);

uint32_t lc_graph_vertex_count(const lc_graph* graph);
uint64_t lc_graph_edge_count(const lc_graph* graph);
uint32_t lc_graph_min_degree(const lc_graph* graph);

/* ---- single percolation search ---- */

typedef struct lc_search_result {
    int success;              /* 1 when a cycle of target length was found */
    int branch_long_condition; /* 1 for the long-distance branch, 0 for chord chain */
    uint64_t cycle_length;    /* best assembled length, 0 when none */
    uint64_t tested_edges;    /* edges probed during exploration */
    uint32_t* cycle;          /* cyclic vertex sequence, NULL when no cycle */
    size_t cycle_count;       /* entries in cycle */
} lc_search_result;

/* Percolates graph with probability p and seed, then searches for a cycle of
 * length at least ceil((1-5*eps)*k). k = 0 uses the graph minimum degree.
 * Free result->cycle with lc_buffer_free. */
lc_status lc_find_long_cycle(const lc_graph* graph, double p, double eps, uint32_t k,
                             uint64_t seed, lc_search_result* result);

void lc_buffer_free(void* buffer);
void lc_string_free(char* text);

/* ---- experiment harness ---- */

typedef struct lc_run_config {
    const char* family; /* complete | hypercube | regular | circulant | file */
    uint32_t n;         /* complete, regular, circulant */
    uint32_t d;         /* regular */
    uint32_t dim;       /* hypercube */
    const uint32_t* offsets; /* circulant */
    size_t offset_count;
    const char* graph_file; /* family "file" */
    int fix_host;           /* reuse one sampled host across trials */
    int have_p;             /* exactly one of have_p / have_c */
    double p;
    int have_c;
    double c; /* p = min(1, c/k) */
    double eps;
    uint64_t trials;
    uint64_t seed;
    double height_c;
    uint32_t workers;
} lc_run_config;

/* eps = 0.05, trials = 1, seed = 1, height_c = 1, workers = 1, rest zero. */
void lc_run_config_init(lc_run_config* config);

typedef void (*lc_trace_fn)(const char* line, void* user);

/* Runs the configured trials and returns the CSV (header plus one row per
 * trial) as a malloc'd string. A non-NULL trace callback receives one
 * summary line per completed trial and forces sequential execution. */
lc_status lc_run_trials(const lc_run_config* config, lc_trace_fn trace, void* user,
                        char** csv_out);

/* Groups an earlier run's CSV by (n, k, p) and formats aggregate lines. */
lc_status lc_summarize_csv(const char* csv_text, char** summary_out);

/* Re-runs each trial on a small host (n <= 16) and compares every produced
 * cycle against the exact longest cycle of the revealed subgraph. all_ok is
 * set to 1 when every comparison passed. */
lc_status lc_validate(const lc_run_config* config, char** report_out, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* LONGCYCLE_H */
