#ifndef GK_GK_H
#define GK_GK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GK_API __declspec(dllexport)
#else
#define GK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
  GK_OK = 0,
  GK_NOT_MEMBER = 2,
  GK_BUDGET_EXCEEDED = 3,
  GK_INPUT_ERROR = 4, /* also precondition violations */
  GK_INTERNAL_CONTRADICTION = 5
} gk_status;

typedef struct gk_graph gk_graph;

/* Strings returned through char** are owned by the caller: release with gk_string_free.
   On failure the message is available from gk_last_error (per thread). JSON outputs
   may be set even when the status is not GK_OK (e.g. a classify report for a non-member). */
GK_API void gk_string_free(char* s);
GK_API const char* gk_last_error(void);

/* graph6 or edge JSON, detected from the first non-blank byte. */
GK_API gk_status gk_graph_parse(const char* text, size_t len, gk_graph** out);
GK_API void gk_graph_free(gk_graph* g);
GK_API size_t gk_graph_order(const gk_graph* g);
/* format: "graph6", "json" or "dot" */
GK_API gk_status gk_graph_emit(const gk_graph* g, const char* format, char** out);

GK_API gk_status gk_classify(const gk_graph* g, char** json_out);
GK_API gk_status gk_hamilton(const gk_graph* g, uint64_t budget, char** json_out);
GK_API gk_status gk_extend(const gk_graph* g, const char* cycle_json, int allow_small_k, char** json_out);
GK_API gk_status gk_hamiltonize(const gk_graph* g, int allow_small_k, char** json_out);
GK_API gk_status gk_oracle(const gk_graph* g, uint64_t budget, char** json_out);
GK_API gk_status gk_iso(const gk_graph* g, const gk_graph* h, char** json_out);

/* family parameters are passed as strings, e.g. {"3", "2"} for H 3 2 */
GK_API gk_status gk_generate(const char* family, const char* const* args, size_t nargs, uint64_t seed, int extended,
                             gk_graph** out, char** layout_json);
/* Checks the family's claimed properties on `candidate`, or on the generated graph when NULL. */
GK_API gk_status gk_validate(const char* family, const char* const* args, size_t nargs, uint64_t seed, int extended,
                             const gk_graph* candidate, char** json_out);

GK_API gk_status gk_reduce(const gk_graph* g, gk_graph** out, char** map_json);
GK_API gk_status gk_map_forward(const gk_graph* source, const char* map_json, const char* cycle_json, char** json_out);
GK_API gk_status gk_map_backward(const char* map_json, const char* cycle_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
