#ifndef KGRAPH_H
#define KGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KG_API __declspec(dllexport)
#else
#define KG_API __attribute__((visibility("default")))
#endif

typedef enum kg_status {
    KG_OK = 0,
    KG_ERR_PARSE = 1,       /* malformed .kgd text */
    KG_ERR_INVALID = 2,     /* structurally invalid diagram or argument */
    KG_ERR_SEARCH_CAP = 3,  /* reduction search exceeded its cap */
    KG_ERR_INTERNAL = 4
} kg_status;

typedef struct kg_diagram kg_diagram;
typedef struct kg_poly kg_poly;

/* Message for the last failing call on this thread; empty after success. */
KG_API const char* kg_last_error(void);
KG_API const char* kg_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
KG_API void kg_string_free(char* s);

KG_API kg_status kg_diagram_parse(const char* text, kg_diagram** out);
KG_API void kg_diagram_free(kg_diagram* d);
KG_API kg_status kg_diagram_serialize(const kg_diagram* d, char** out);
KG_API kg_status kg_diagram_mirror(const kg_diagram* d, kg_diagram** out);
KG_API kg_status kg_diagram_key(const kg_diagram* d, char** out);
KG_API int kg_diagram_node_count(const kg_diagram* d);
KG_API int kg_diagram_circle_count(const kg_diagram* d);

/* search_cap 0 keeps the default. */
KG_API kg_status kg_evaluate(const kg_diagram* d, int n, size_t search_cap, kg_poly** out);
KG_API void kg_poly_free(kg_poly* p);
KG_API kg_status kg_poly_text(const kg_poly* p, char** out);
KG_API kg_status kg_poly_json(const kg_poly* p, char** out);
KG_API int kg_poly_equal(const kg_poly* a, const kg_poly* b);
KG_API kg_status kg_poly_bar(const kg_poly* p, kg_poly** out);

/* kind: "moves", "skein", "lemmas", "order" or "mirror".
   moves: comma separated move ids, or NULL/"" for all.
   Writes the JSON report; *passed is 1 when every item passed. */
KG_API kg_status kg_check_run(const char* kind, int n, uint64_t seed, int count, const char* moves,
                              size_t search_cap, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif
