#ifndef OTD_H
#define OTD_H

/*
 * C interface to the orthogonal-decomposition library.
 *
 * Every function returns a status code: 0 on success, otherwise one of the
 * OTD_E_* codes below. On failure, otd_last_error() returns a thread-local
 * JSON record {"code": int, "error": string, "message": string} describing
 * the most recent failure on the calling thread.
 *
 * All `char**` outputs receive a heap-allocated NUL-terminated string that
 * the caller must release with otd_string_free(). All JSON output is
 * canonical: keys sorted, two-space indent, LF line endings, one trailing
 * newline, exact rationals as strings.
 *
 * Handles (otd_graph, otd_decomp) are opaque; release them with the matching
 * *_free function. Passing NULL where a handle or string is required yields
 * OTD_E_INVALID_INPUT.
 */

#ifdef __cplusplus
extern "C" {
#endif

#define OTD_OK 0
#define OTD_E_INVALID_INPUT 1      /* malformed data, bad parameters */
#define OTD_E_VALIDATION 2         /* an input fails its structural axioms */
#define OTD_E_CAP_EXCEEDED 3      /* instance larger than the configured cap */
#define OTD_E_ORACLE_VIOLATION 4  /* a child oracle broke its contract */
#define OTD_E_EXHAUSTED 5          /* a child oracle under-delivered */
#define OTD_E_NOT_NESTING 6
#define OTD_E_EMPTY_INTERSECTION 7
#define OTD_E_CORNER_CONTAINED 8
#define OTD_E_INTERNAL 9

typedef struct otd_graph otd_graph;
typedef struct otd_decomp otd_decomp;

const char* otd_version(void);

/* Thread-local JSON describing the last failure on this thread; "" if none. */
const char* otd_last_error(void);

void otd_string_free(char* s);

/* ----- graphs ----- */

/* Parse {"n": int, "edges": [[u,v],...], "labels": [...]?}. */
int otd_graph_parse(const char* json, otd_graph** out);

/*
 * Generate a named family. Request JSON:
 *   {"family": "grid" | "knn" | "tripartite" | "subdiv-knn" | "shift",
 *    "n": int}
 *   {"family": "line-grid", "q": int, "r": int}
 *   {"family": "2tree", "h": int, "d": int}
 *   {"family": "dominant" | "line-graph", "graph": {...}}
 */
int otd_graph_gen(const char* request_json, otd_graph** out);

int otd_graph_emit(const otd_graph* g, char** json_out);
int otd_graph_dot(const otd_graph* g, char** dot_out);
int otd_graph_counts(const otd_graph* g, int* vertices, long long* edges);
void otd_graph_free(otd_graph* g);

/* ----- decompositions ----- */

/* Parse {"kind": "tree|path|weakpath|layering", "bags": [[v,...],...],
 * "tree_edges": [[x,y],...]?}. */
int otd_decomp_parse(const char* json, otd_decomp** out);

int otd_decomp_emit(const otd_decomp* d, char** json_out);
int otd_decomp_dot(const otd_decomp* d, char** dot_out);

/*
 * Check the structural axioms of d against g. Returns OTD_OK with
 * *report_json_out = {"valid": true, ...measures...} when every axiom holds,
 * OTD_E_VALIDATION with *report_json_out = {"valid": false, "axiom": ...,
 * "witness": ...} when one fails. Other codes signal malformed input.
 */
int otd_decomp_validate(const otd_decomp* d, const otd_graph* g, char** report_json_out);

/* {"kind":..., "bag_count":..., "magnitude":..., "width":...} */
int otd_decomp_measures(const otd_decomp* d, char** json_out);

/* Largest number of shared vertices between a bag of a and a bag of b. */
int otd_orthogonality(const otd_decomp* a, const otd_decomp* b, int* out);

void otd_decomp_free(otd_decomp* d);

/* ----- JSON request pipelines -----
 *
 * Each call takes one JSON request and produces one canonical JSON reply.
 * Field values written as {...} below are full JSON documents of the same
 * shapes the parse functions above accept.
 */

/*
 * {"kind": "grid-pair" | "knn-pair" | "subdiv-pair", "n": int}
 * {"kind": "star-pair", "graph": {...}, "a": [v,...]?, "b": [v,...]?}
 *     (a/b default to the bipartition found by 2-coloring)
 * {"kind": "domino", "graph": {...}, "tree": {...}, "layering": {...}?}
 *     (layering defaults to breadth-first from vertex 0)
 * Reply: {"first": {...}, "graph": {...}, "second": {...}} for pairs;
 *        {"decomposition": {...}, "domino": true} for domino.
 */
int otd_construct(const char* request_json, char** json_out);

/*
 * {"graph": {...}, "tree": {...}, "weakpath": {...}, "k": int}
 * Reply: {"bound_ok": bool, "decomposition": {...}, "k": int,
 *         "magnitude": int, "width": int} where bound_ok is the integer test
 * (width+1)^2 <= 4*k*magnitude.
 */
int otd_compress_pair(const char* request_json, char** json_out);

/*
 * {"graph": {...}, "tree": {...}}
 * Reply: {"balanced": bool, "half": int, "max_component": int,
 *         "separator": [v,...], "size": int}
 */
int otd_separator(const char* request_json, char** json_out);

/*
 * {"mode": "string", "input": <arrangement>, "base": "heuristic"|"exact",
 *  "root": int?, "seed": int?, "exact_cap": int?}
 * {"mode": "drawing", "input": <drawing>, ...same options...}
 * Reply: {"base_layered_width": int, "base_width": int, "first": {...},
 *         "graph": {...}, "magnitude": int, "second": {...}}
 * where graph is the curve intersection graph (string mode) or the drawn
 * graph (drawing mode), first/second are the lifted pair, and magnitude is
 * the second decomposition's.
 */
int otd_lift(const char* request_json, char** json_out);

/*
 * {"k": int?, "s": int?, "n": int?, "g": int?, "m": int?, "tw": int?}
 * Reply echoes the inputs and reports every bound computable from them; see
 * the library documentation for the formulas.
 */
int otd_bounds(const char* request_json, char** json_out);

/*
 * {"op": "classify", "rects": [r1, r2]}
 *     -> {"class": "h"|"v"|"o", "raw_h": bool, "raw_v": bool}
 * {"op": "hvo", "rects": [...]}
 *     -> {"fold": rect|null, "index": int, "ok": bool, "condition": string}
 * {"op": "clique", "k": int, "oracle": "random"|"stall-h"|"stall-v"|
 *     "corner-flood"|"script", "seed": int?, "levels": [[rect,...],...]?,
 *     "root": [r0, r1]?}
 *     -> {"exit": string, "k": int, "levels": int, "point": [x,y],
 *         "rects": [...], "trace": [...]}
 * {"op": "to-paths", "rects": [...]}
 *     -> {"first": {...}, "graph": {...}, "orthogonality": int,
 *         "second": {...}}
 * {"op": "from-paths", "first": {...}, "second": {...}, "graph": {...}}
 *     -> {"rects": [...]}
 * Rectangles are [x1, y1, x2, y2] with rational coordinates.
 */
int otd_rect(const char* request_json, char** json_out);

/*
 * {"op": "clique", "d": int, "k": int, "oracle": "random"|"script",
 *  "seed": int?, "boxes": [box,...]?, "root": [box,...]?}
 * Boxes are side lists [[lo,hi],...]; the root defaults to the 2d+1 nested
 * boxes [-(i+1), i+1]^d. Reply: {"boxes": [...], "d": int, "k": int,
 * "point": [...], "rounds": int}.
 */
int otd_box(const char* request_json, char** json_out);

/*
 * {"op": "tw"|"pw"|"clique"|"chi"|"sep", "graph": {...}, "cap": int?}
 * Reply: {"op":..., "value": int} plus "witness": a decomposition (tw/pw) or
 * a vertex list (clique/sep).
 */
int otd_oracle(const char* request_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* OTD_H */
