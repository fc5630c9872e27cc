/* C interface to the load-coloring library.
 *
 * Graphs are opaque handles. Operations that can fail return an lc_status;
 * on failure *err (when provided) receives a malloc'd message that the
 * caller frees with lc_string_free. Results of the solver entry points are
 * JSON documents (see the library docs for the schema); colorings inside
 * them are arrays indexed by external (1-based) vertex id.
 */
#ifndef LOADCOL_H
#define LOADCOL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lc_graph lc_graph;

typedef enum {
  LC_OK = 0,
  LC_EPARSE = 1,   /* malformed graph text */
  LC_EINVAL = 2,   /* invalid argument / precondition */
  LC_EIO = 3,      /* file not readable */
  LC_EINTERNAL = 4 /* internal invariant failure */
} lc_status;

/* Graph lifecycle. Text format: "p edge n m" header then "e u v" lines. */
lc_status lc_graph_parse(const char* text, lc_graph** out, char** err);
lc_status lc_graph_read_file(const char* path, lc_graph** out, char** err);
void lc_graph_free(lc_graph* g);

int lc_graph_num_vertices(const lc_graph* g);
long long lc_graph_num_edges(const lc_graph* g);
lc_status lc_graph_serialize(const lc_graph* g, char** out);

/* Deterministic generators. */
lc_status lc_gen_gnp(int n, double p, unsigned long long seed, lc_graph** out, char** err);
lc_status lc_gen_matching(int q, lc_graph** out, char** err);
lc_status lc_gen_star_forest(const int* leaf_counts, int count, lc_graph** out, char** err);
lc_status lc_gen_clique(int n, lc_graph** out, char** err);

/* Solvers; each writes a malloc'd JSON document to *json_out.
 * budget <= 0 selects the default exact-search budget. */
lc_status lc_decide(const lc_graph* g, int c, int k, long long budget, char** json_out,
                    char** err);
lc_status lc_kernelize(const lc_graph* g, int c, int k, char** json_out, char** err);
lc_status lc_exact(const lc_graph* g, int c, int k, long long budget, char** json_out, char** err);
lc_status lc_max_k(const lc_graph* g, int c, long long budget, char** json_out, char** err);
lc_status lc_approx_general(const lc_graph* g, int c, long long budget, char** json_out,
                            char** err);
lc_status lc_approx_two(const lc_graph* g, double epsilon, long long budget, char** json_out,
                        char** err);

/* colors[] has one entry per vertex, ordered by external id. */
lc_status lc_verify(const lc_graph* g, int c, int k, const int* colors, int n, char** json_out,
                    char** err);

void lc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LOADCOL_H */
