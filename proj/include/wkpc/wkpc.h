/* wkpc.h -- C interface to the Watson-Crick PC automata system simulator.
 *
 * The library simulates Watson-Crick finite automata and parallel
 * communicating Watson-Crick automata systems: membership searches over
 * nondeterministically chosen complementary lower strands, unary-language
 * scans, replayable traces, and the built-in two-component system for
 * { a^(n^2) : n > 1 }.
 *
 * All objects are opaque handles owned by the library; every *_free function
 * accepts NULL. Functions that can fail return a wkpc_status and, when given
 * a buffer, a human-readable diagnostic (always NUL-terminated, possibly
 * truncated). Strings returned as char* are heap-allocated and must be
 * released with wkpc_string_free.
 */

#ifndef WKPC_H
#define WKPC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WKPC_API __declspec(dllexport)
#else
#define WKPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wkpc_system wkpc_system;
typedef struct wkpc_result wkpc_result;
typedef struct wkpc_report wkpc_report;

typedef enum wkpc_status {
    WKPC_OK = 0,
    WKPC_ERR_ARGUMENT = 1, /* bad handle, unknown symbol, unparseable word */
    WKPC_ERR_PARSE = 2,    /* malformed system or trace text */
    WKPC_ERR_TRACE = 3,    /* well-formed trace that does not replay */
    WKPC_ERR_INTERNAL = 4
} wkpc_status;

typedef enum wkpc_verdict {
    WKPC_ACCEPT = 0,
    WKPC_REJECT = 1,
    WKPC_LIMIT = 2 /* configuration budget exhausted before a verdict */
} wkpc_verdict;

typedef enum wkpc_engine {
    WKPC_ENGINE_LAZY = 0,      /* lazy strand commitment, memoized BFS */
    WKPC_ENGINE_BRUTEFORCE = 1 /* enumerate all complementary strands */
} wkpc_engine;

typedef enum wkpc_squares_variant {
    WKPC_SQUARES_CORRECTED = 0,
    WKPC_SQUARES_AS_PRINTED = 1
} wkpc_squares_variant;

/* --- systems ----------------------------------------------------------- */

/* Parses a system definition. On failure fills err with a line-numbered
 * diagnostic. */
WKPC_API wkpc_status wkpc_system_parse(const char* text, wkpc_system** out_sys,
                                       char* err, size_t err_cap);

/* The built-in two-component squares system, either edition. */
WKPC_API wkpc_status wkpc_system_builtin_squares(wkpc_squares_variant variant,
                                                 wkpc_system** out_sys);

/* Canonical text form; returns NULL only on invalid handle. */
WKPC_API char* wkpc_system_serialize(const wkpc_system* sys);

WKPC_API void wkpc_system_free(wkpc_system* sys);

/* --- membership -------------------------------------------------------- */

/* Runs a membership query for `word` (symbol names concatenated; "" is the
 * empty word). max_configurations == 0 selects the default budget. */
WKPC_API wkpc_status wkpc_check(const wkpc_system* sys, const char* word,
                                wkpc_engine engine, uint64_t max_configurations,
                                wkpc_result** out_result, char* err, size_t err_cap);

WKPC_API wkpc_verdict wkpc_result_verdict(const wkpc_result* result);
/* Witness lower strand; NULL unless the verdict is WKPC_ACCEPT. */
WKPC_API const char* wkpc_result_witness(const wkpc_result* result);
WKPC_API uint64_t wkpc_result_configurations(const wkpc_result* result);
/* Replayable trace text; NULL unless the verdict is WKPC_ACCEPT. */
WKPC_API char* wkpc_result_trace_text(const wkpc_result* result);
WKPC_API void wkpc_result_free(wkpc_result* result);

/* --- unary scans ------------------------------------------------------- */

/* Runs the search on symbol^m for m = 0..max_length. Limit verdicts are
 * recorded per length; the scan itself does not abort. */
WKPC_API wkpc_status wkpc_scan(const wkpc_system* sys, const char* symbol,
                               uint32_t max_length, uint64_t max_configurations,
                               wkpc_report** out_report, char* err, size_t err_cap);

WKPC_API uint32_t wkpc_report_max_length(const wkpc_report* report);
WKPC_API wkpc_verdict wkpc_report_verdict(const wkpc_report* report, uint32_t m);
/* NULL when length m carries no witness. */
WKPC_API const char* wkpc_report_witness(const wkpc_report* report, uint32_t m);
WKPC_API uint64_t wkpc_report_configurations(const wkpc_report* report, uint32_t m);
WKPC_API int wkpc_report_any_limit(const wkpc_report* report);
/* One record per length plus summary comments. */
WKPC_API char* wkpc_report_text(const wkpc_report* report);
WKPC_API void wkpc_report_free(wkpc_report* report);

/* --- traces ------------------------------------------------------------ */

/* Replays a trace produced by wkpc_result_trace_text against the system and
 * word. WKPC_OK means the trace is a valid accepting derivation;
 * WKPC_ERR_TRACE means it replays incorrectly (diagnostic in err);
 * WKPC_ERR_PARSE means the text is not a trace at all. */
WKPC_API wkpc_status wkpc_validate_trace(const wkpc_system* sys, const char* word,
                                         const char* trace_text, char* err,
                                         size_t err_cap);

WKPC_API void wkpc_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WKPC_H */
